// bytes.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "texglyph/errors.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace texglyph {

using Bytes = std::vector<uint8_t>;

/// Big-endian cursor over an immutable byte buffer. All multi-byte
/// quantities in DVI, TFM and sfnt files are big-endian.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    std::size_t offset() const { return pos_; }
    std::size_t size() const { return data_.size(); }
    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return pos_ == data_.size(); }

    void seek(std::size_t pos) {
        if (pos > data_.size()) throw Truncated("seek past end", pos);
        pos_ = pos;
    }

    uint8_t peek_u8() const {
        require(1);
        return data_[pos_];
    }

    uint8_t read_u8() {
        require(1);
        return data_[pos_++];
    }

    uint16_t read_u16() { return static_cast<uint16_t>(read_be(2)); }
    uint32_t read_u24() { return static_cast<uint32_t>(read_be(3)); }
    uint32_t read_u32() { return static_cast<uint32_t>(read_be(4)); }

    int8_t read_s8() { return static_cast<int8_t>(read_u8()); }
    int16_t read_s16() { return static_cast<int16_t>(read_u16()); }
    int32_t read_s32() { return static_cast<int32_t>(read_u32()); }

    /// Unsigned value of `n` bytes (1..4).
    uint32_t read_unsigned(int n) { return static_cast<uint32_t>(read_be(n)); }

    /// Signed value of `n` bytes (1..4), sign-extended per the DVI rules.
    int32_t read_signed(int n) {
        uint32_t v = read_unsigned(n);
        if (n < 4) {
            uint32_t sign_bit = 1u << (8 * n - 1);
            if (v & sign_bit) v |= ~((sign_bit << 1) - 1);
        }
        return static_cast<int32_t>(v);
    }

    Bytes read_bytes(std::size_t n) {
        require(n);
        Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return out;
    }

    std::string read_string(std::size_t n) {
        require(n);
        std::string out(reinterpret_cast<const char*>(data_.data() + pos_), n);
        pos_ += n;
        return out;
    }

    void skip(std::size_t n) {
        require(n);
        pos_ += n;
    }

private:
    void require(std::size_t n) const {
        if (data_.size() - pos_ < n)
            throw Truncated("unexpected end of input", pos_);
    }

    uint64_t read_be(int n) {
        require(static_cast<std::size_t>(n));
        uint64_t v = 0;
        for (int i = 0; i < n; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }

    std::span<const uint8_t> data_;
    std::size_t pos_ = 0;
};

/// Big-endian append-only buffer.
class ByteWriter {
public:
    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }
    std::size_t size() const { return buf_.size(); }

    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v) { be(v, 2); }
    void u24(uint32_t v) { be(v, 3); }
    void u32(uint32_t v) { be(v, 4); }
    void s32(int32_t v) { be(static_cast<uint32_t>(v), 4); }

    /// Low `n` bytes of `v`, big-endian. Caller guarantees the value fits.
    void unsigned_n(uint32_t v, int n) { be(v, n); }
    void signed_n(int32_t v, int n) { be(static_cast<uint32_t>(v), n); }

    void raw(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
    void str(const std::string& s) {
        buf_.insert(buf_.end(), s.begin(), s.end());
    }

private:
    void be(uint64_t v, int n) {
        for (int i = n - 1; i >= 0; --i) buf_.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xff));
    }

    Bytes buf_;
};

/// True iff `v` is representable in `n` bytes as an unsigned quantity.
bool fits_unsigned(uint32_t v, int n);
/// True iff `v` is representable in `n` bytes as a signed quantity.
bool fits_signed(int32_t v, int n);

} // namespace texglyph
