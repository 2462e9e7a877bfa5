// units.cpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#include "texglyph/units.hpp"

#include "texglyph/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace texglyph {

double units_to_points(int64_t d, const DviPre& pre) {
    double meters = static_cast<double>(d) * pre.num * pre.mag /
                    (static_cast<double>(pre.den) * 1000.0 * 1e7);
    return meters / 0.0254 * 72.0;
}

double parse_length_to_bp(const std::string& text) {
    if (text.empty()) throw InvalidSpec("empty length");
    const char* begin = text.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end == begin) throw InvalidSpec("malformed length: " + text);
    std::string unit(end);
    while (!unit.empty() && std::isspace(static_cast<unsigned char>(unit.front())))
        unit.erase(unit.begin());
    while (!unit.empty() && std::isspace(static_cast<unsigned char>(unit.back())))
        unit.pop_back();

    double bp;
    if (unit.empty() || unit == "pt")
        bp = value * kBigPointsPerTexPoint;
    else if (unit == "bp")
        bp = value;
    else if (unit == "in")
        bp = value * 72.0;
    else if (unit == "cm")
        bp = value / 2.54 * 72.0;
    else if (unit == "mm")
        bp = value / 25.4 * 72.0;
    else if (unit == "pc")
        bp = value * 12.0 * kBigPointsPerTexPoint;
    else if (unit == "sp")
        bp = value / 65536.0 * kBigPointsPerTexPoint;
    else
        throw InvalidSpec("unknown length unit: " + unit);

    if (!(bp > 0.0)) throw InvalidSpec("length must be positive: " + text);
    return bp;
}

} // namespace texglyph
