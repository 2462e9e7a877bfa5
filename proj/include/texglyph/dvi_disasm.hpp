// dvi_disasm.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "texglyph/dvi.hpp"

#include <string>

namespace texglyph {

/// dvitype-style listing: one line per decoded item,
/// `OFFSET: MNEMONIC operands...` with decimal byte offsets. The format
/// is stable and documented in docs/disassembly.md; golden tests rely
/// on it.
std::string disassemble(const DviProgram& program);

} // namespace texglyph
