// dvi_writer.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "texglyph/dvi.hpp"

namespace texglyph {

/// Re-encode a DviProgram. For any program produced by parse() the
/// output is byte-identical to the original input. Back pointers are
/// recomputed from the emitted layout. Throws InvariantViolation when
/// the program breaks a structural rule (operand does not fit its
/// recorded width, undefined font selected, page count mismatch, ...).
Bytes serialize(const DviProgram& program);

/// Encode a single instruction (used by the writer and the
/// disassembler's offset bookkeeping).
void encode_instruction(ByteWriter& w, const Instruction& ins, DviFlavor flavor);

/// Trailing 223-fill needed to pad a file of `size_before_fill` bytes
/// to a multiple of four (always 4..7).
uint8_t compute_fill_count(std::size_t size_before_fill);

} // namespace texglyph
