// diagnostics.cpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#include "texglyph/diagnostics.hpp"

namespace texglyph {

std::string to_string(Severity s) {
    switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
    }
    return "unknown";
}

std::string format_diagnostic(const Diagnostic& d) {
    std::string out = to_string(d.severity) + " " + d.code + ": " + d.message;
    for (const auto& line : d.context) out += "\n  " + line;
    return out;
}

} // namespace texglyph
