// hash.cpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#include "texglyph/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace texglyph {

std::string sha256_hex(std::span<const unsigned char> data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr))
        throw std::runtime_error("EVP_Digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string sha256_hex(const std::string& data) {
    return sha256_hex(std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(data.data()), data.size()));
}

} // namespace texglyph
