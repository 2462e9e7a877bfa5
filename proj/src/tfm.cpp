// tfm.cpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#include "texglyph/tfm.hpp"

#include "texglyph/errors.hpp"

#include <string>

namespace texglyph {

namespace {

[[noreturn]] void fail(const std::string& reason) { throw MalformedTfm("malformed TFM: " + reason); }

} // namespace

std::optional<int32_t> TfmMetrics::width_fix(uint32_t code) const {
    if (code < bc || code > ec) return std::nullopt;
    uint8_t idx = char_info[code - bc].width_index;
    if (idx == 0) return std::nullopt;
    return widths[idx];
}

std::optional<int32_t> TfmMetrics::height_fix(uint32_t code) const {
    if (!has_char(code)) return std::nullopt;
    return heights[char_info[code - bc].height_index];
}

std::optional<int32_t> TfmMetrics::depth_fix(uint32_t code) const {
    if (!has_char(code)) return std::nullopt;
    return depths[char_info[code - bc].depth_index];
}

TfmMetrics parse_tfm(std::span<const uint8_t> bytes) {
    if (bytes.size() < 24) fail("shorter than the 12-word header");
    if (bytes.size() % 4 != 0) fail("length is not a multiple of 4");

    ByteReader r(bytes);
    uint16_t lf = r.read_u16();
    uint16_t lh = r.read_u16();
    uint16_t bc = r.read_u16();
    uint16_t ec = r.read_u16();
    uint16_t nw = r.read_u16();
    uint16_t nh = r.read_u16();
    uint16_t nd = r.read_u16();
    uint16_t ni = r.read_u16();
    uint16_t nl = r.read_u16();
    uint16_t nk = r.read_u16();
    uint16_t ne = r.read_u16();
    uint16_t np = r.read_u16();

    if (static_cast<std::size_t>(lf) * 4 != bytes.size())
        fail("declared length " + std::to_string(lf) + " words does not match file size");
    if (bc > ec + 1 || ec > 255) fail("invalid char range");
    uint32_t nc = (bc > ec) ? 0 : static_cast<uint32_t>(ec - bc + 1);
    uint32_t expect = 6u + lh + nc + nw + nh + nd + ni + nl + nk + ne + np;
    if (expect != lf) fail("section lengths sum to " + std::to_string(expect) +
                           " words, header says " + std::to_string(lf));
    if (nw == 0 || nh == 0 || nd == 0) fail("empty dimension table");
    if (lh < 2) fail("header too short for checksum and design size");

    TfmMetrics tfm;
    tfm.bc = bc;
    tfm.ec = ec;
    tfm.checksum = r.read_u32();
    tfm.design_size_fix = r.read_s32();
    if (tfm.design_size_fix <= 0) fail("nonpositive design size");
    r.skip(4u * (lh - 2));  // face byte, coding scheme, family: irrelevant here

    tfm.char_info.resize(nc);
    for (uint32_t i = 0; i < nc; ++i) {
        uint8_t w = r.read_u8();
        uint8_t hd = r.read_u8();
        uint8_t it = r.read_u8();
        r.skip(1);  // remainder (lig/kern program index etc.)
        tfm.char_info[i].width_index = w;
        tfm.char_info[i].height_index = hd >> 4;
        tfm.char_info[i].depth_index = hd & 0x0f;
        tfm.char_info[i].italic_index = it >> 2;
    }

    auto read_table = [&](uint16_t n) {
        std::vector<int32_t> t(n);
        for (uint16_t i = 0; i < n; ++i) t[i] = r.read_s32();
        return t;
    };
    tfm.widths = read_table(nw);
    tfm.heights = read_table(nh);
    tfm.depths = read_table(nd);
    if (tfm.widths[0] != 0 || tfm.heights[0] != 0 || tfm.depths[0] != 0)
        fail("dimension table entry 0 must be zero");

    for (uint32_t i = 0; i < nc; ++i) {
        const auto& ci = tfm.char_info[i];
        if (ci.width_index >= nw || ci.height_index >= nh || ci.depth_index >= nd)
            fail("char_info index out of table range");
    }
    // italic corrections, lig/kern, kern, extensible and param sections
    // are not needed for glyph placement; their lengths were validated.
    return tfm;
}

} // namespace texglyph
