// dvi_parser.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "texglyph/dvi.hpp"

#include <span>

namespace texglyph {

/// Decode a complete DVI or XDV file.
///
/// The decode is total: every input byte belongs to exactly one decoded
/// item, back pointers and postamble duplicates are verified, and the
/// trailing 223-fill is checked. Errors: BadMagic, Truncated,
/// UnknownOpcode, PointerMismatch, InvariantViolation.
DviProgram parse(std::span<const uint8_t> bytes);

DviProgram parse(const Bytes& bytes);

} // namespace texglyph
