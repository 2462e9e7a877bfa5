// diagnostics.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace texglyph {

enum class Severity { Info, Warning, Error };

/// A single message produced while validating input, parsing an engine
/// log, or interpreting a page. Diagnostics never abort a pipeline on
/// their own; hard failures are exceptions (see errors.hpp).
struct Diagnostic {
    Severity severity = Severity::Warning;
    std::string code;                   // stable machine-readable identifier
    std::string message;                // human-readable, single line
    std::optional<double> magnitude;    // e.g. overfull amount in pt
    std::vector<std::string> context;   // surrounding log lines, if any
};

namespace diag {
// validateFragment
inline constexpr const char* UnbalancedBrace = "UnbalancedBrace";
inline constexpr const char* UnbalancedMathDelimiter = "UnbalancedMathDelimiter";
inline constexpr const char* EmbeddedEndDocument = "EmbeddedEndDocument";
// parseLog
inline constexpr const char* EngineError = "EngineError";
inline constexpr const char* OverfullBox = "OverfullBox";
inline constexpr const char* UnderfullBox = "UnderfullBox";
inline constexpr const char* MissingFont = "MissingFont";
// interpreter
inline constexpr const char* IgnoredSpecial = "IgnoredSpecial";
inline constexpr const char* ColorStackUnderflow = "ColorStackUnderflow";
inline constexpr const char* MetricsFallback = "MetricsFallback";
// font resolution
inline constexpr const char* ChecksumMismatch = "ChecksumMismatch";
} // namespace diag

std::string to_string(Severity s);

/// "warning UnbalancedBrace: unbalanced '{'" -- used by the CLI and tests.
std::string format_diagnostic(const Diagnostic& d);

} // namespace texglyph
