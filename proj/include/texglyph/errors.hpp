// errors.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "texglyph/diagnostics.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace texglyph {

/// Root of every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- authoring ----

class InvalidSpec : public Error {
public:
    using Error::Error;
};

class UnsupportedFlavor : public Error {
public:
    using Error::Error;
};

// ---- dvi parsing ----

class DviParseError : public Error {
public:
    DviParseError(std::string msg, std::size_t offset)
        : Error(std::move(msg)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class BadMagic : public DviParseError {
public:
    using DviParseError::DviParseError;
};

class Truncated : public DviParseError {
public:
    using DviParseError::DviParseError;
};

class UnknownOpcode : public DviParseError {
public:
    UnknownOpcode(std::string msg, std::size_t offset, uint8_t opcode)
        : DviParseError(std::move(msg), offset), opcode_(opcode) {}
    uint8_t opcode() const { return opcode_; }

private:
    uint8_t opcode_;
};

class PointerMismatch : public DviParseError {
public:
    using DviParseError::DviParseError;
};

/// A DviProgram violates a structural invariant (serialize, or strict
/// postamble checks at parse time).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// ---- interpreter ----

class StackUnderflow : public Error {
public:
    StackUnderflow(std::string msg, std::size_t instruction_index)
        : Error(std::move(msg)), index_(instruction_index) {}
    std::size_t instruction_index() const { return index_; }

private:
    std::size_t index_;
};

class UndefinedFont : public Error {
public:
    UndefinedFont(std::string msg, uint32_t k) : Error(std::move(msg)), k_(k) {}
    uint32_t font_number() const { return k_; }

private:
    uint32_t k_;
};

class MetricsUnavailable : public Error {
public:
    MetricsUnavailable(std::string msg, uint32_t k) : Error(std::move(msg)), k_(k) {}
    uint32_t font_number() const { return k_; }

private:
    uint32_t k_;
};

class EmptyPage : public Error {
public:
    using Error::Error;
};

// ---- fonts ----

class FontNotFound : public Error {
public:
    FontNotFound(std::string msg, std::string name)
        : Error(std::move(msg)), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class FontFileUnreadable : public Error {
public:
    using Error::Error;
};

class MalformedTfm : public Error {
public:
    using Error::Error;
};

class GlyphOutOfRange : public Error {
public:
    using Error::Error;
};

class UnsupportedFontFormat : public Error {
public:
    using Error::Error;
};

// ---- rendering ----

class OutlineUnavailable : public Error {
public:
    using Error::Error;
};

// ---- typesetting ----

class EngineNotFound : public Error {
public:
    using Error::Error;
};

class Timeout : public Error {
public:
    using Error::Error;
};

class CompileError : public Error {
public:
    CompileError(std::string msg, std::vector<Diagnostic> diagnostics, std::string log)
        : Error(std::move(msg)),
          diagnostics_(std::move(diagnostics)),
          log_(std::move(log)) {}
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
    const std::string& log() const { return log_; }

private:
    std::vector<Diagnostic> diagnostics_;
    std::string log_;
};

} // namespace texglyph
