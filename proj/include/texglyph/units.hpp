// units.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "texglyph/dvi.hpp"

#include <cstdint>
#include <string>

namespace texglyph {

// 7227 TeX points = 7200 big points (1 bp = 1/72 inch).
inline constexpr double kBigPointsPerTexPoint = 7200.0 / 7227.0;
inline constexpr double kTexPointsPerBigPoint = 7227.0 / 7200.0;

/// DVI units -> big points under the preamble constants:
/// meters = d * num * mag / (den * 1000 * 10^7), points = meters / 0.0254 * 72.
/// Pure, monotone, odd in d.
double units_to_points(int64_t d, const DviPre& pre);

/// "144pt" / "2in" / "5cm" / "10bp" / bare number (TeX points) -> big
/// points. Supported units: pt, bp, in, cm, mm, pc, sp. Throws
/// InvalidSpec on malformed input or nonpositive magnitude.
double parse_length_to_bp(const std::string& text);

} // namespace texglyph
