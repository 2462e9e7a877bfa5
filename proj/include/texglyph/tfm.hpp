// tfm.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "texglyph/bytes.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace texglyph {

/// TeX font metrics. Dimension words are kept as raw fixwords (signed,
/// 2^20 scale, fractions of the design size) so that decode/encode is
/// lossless; floating conversion happens only at lookup time.
struct TfmMetrics {
    uint32_t checksum = 0;
    int32_t design_size_fix = 0;  // fixword, points
    uint16_t bc = 1;              // first char code (bc = ec+1 for an empty font)
    uint16_t ec = 0;              // last char code

    // Per char in bc..ec: indices into the dimension tables.
    struct CharInfo {
        uint8_t width_index = 0;   // 0 = invalid char
        uint8_t height_index = 0;  // 4 bits in the file
        uint8_t depth_index = 0;   // 4 bits
        uint8_t italic_index = 0;  // 6 bits
    };
    std::vector<CharInfo> char_info;
    std::vector<int32_t> widths;   // fixwords; entry 0 is always 0
    std::vector<int32_t> heights;
    std::vector<int32_t> depths;

    double design_size_pt() const { return design_size_fix / 1048576.0; }

    bool has_char(uint32_t code) const {
        return code >= bc && code <= ec && char_info[code - bc].width_index != 0;
    }

    /// Raw width fixword, or nullopt for chars outside bc..ec / invalid.
    std::optional<int32_t> width_fix(uint32_t code) const;
    std::optional<int32_t> height_fix(uint32_t code) const;
    std::optional<int32_t> depth_fix(uint32_t code) const;
};

/// Decode a .tfm file. Validates the declared section lengths against
/// the file length. Throws MalformedTfm.
TfmMetrics parse_tfm(std::span<const uint8_t> bytes);

} // namespace texglyph
