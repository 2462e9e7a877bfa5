// dvi_opcodes.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace texglyph {

enum class OpKind : uint8_t {
    SetCharImmediate,
    Set,
    SetRule,
    Put,
    PutRule,
    Nop,
    Bop,
    Eop,
    Push,
    Pop,
    Right,
    W0,
    W,
    X0,
    X,
    Down,
    Y0,
    Y,
    Z0,
    Z,
    FntNum,
    Fnt,
    Xxx,
    FntDef,
    Pre,
    Post,
    PostPost,
    PicFile,         // XDV 251; recognized but not modeled
    NativeFontDef,   // XDV 252
    SetGlyphs,       // XDV 253
    SetTextAndGlyphs,// XDV 254
    Undefined,
};

struct OpInfo {
    OpKind kind = OpKind::Undefined;
    const char* mnemonic = "undefined";
    // Operand width in bytes for the 1..4-byte families (setN, putN,
    // rightN, wN, xN, downN, yN, zN, fntN, xxxN, fnt_defN); 0 elsewhere.
    uint8_t width = 0;
    // Embedded immediate for set_char_N (the char) and fnt_num_N (the
    // font number); -1 elsewhere.
    int16_t immediate = -1;
};

/// The full 256-entry opcode table. Built once from the DVI / XDV range
/// rules; numeric anchors are unit-tested against the standard listing.
const std::array<OpInfo, 256>& opcode_table();

/// Mnemonic for one opcode byte, e.g. 145 -> "right3".
const char* opcode_mnemonic(uint8_t opcode);

// Named anchors used by the parser and writer.
namespace op {
inline constexpr uint8_t set_char_0 = 0;     // ..127
inline constexpr uint8_t set1 = 128;         // ..131
inline constexpr uint8_t set_rule = 132;
inline constexpr uint8_t put1 = 133;         // ..136
inline constexpr uint8_t put_rule = 137;
inline constexpr uint8_t nop = 138;
inline constexpr uint8_t bop = 139;
inline constexpr uint8_t eop = 140;
inline constexpr uint8_t push = 141;
inline constexpr uint8_t pop = 142;
inline constexpr uint8_t right1 = 143;       // ..146
inline constexpr uint8_t w0 = 147;
inline constexpr uint8_t w1 = 148;           // ..151
inline constexpr uint8_t x0 = 152;
inline constexpr uint8_t x1 = 153;           // ..156
inline constexpr uint8_t down1 = 157;        // ..160
inline constexpr uint8_t y0 = 161;
inline constexpr uint8_t y1 = 162;           // ..165
inline constexpr uint8_t z0 = 166;
inline constexpr uint8_t z1 = 167;           // ..170
inline constexpr uint8_t fnt_num_0 = 171;    // ..234
inline constexpr uint8_t fnt1 = 235;         // ..238
inline constexpr uint8_t xxx1 = 239;         // ..242
inline constexpr uint8_t fnt_def1 = 243;     // ..246
inline constexpr uint8_t pre = 247;
inline constexpr uint8_t post = 248;
inline constexpr uint8_t post_post = 249;
inline constexpr uint8_t xdv_pic_file = 251;
inline constexpr uint8_t xdv_native_font_def = 252;
inline constexpr uint8_t xdv_set_glyphs = 253;
inline constexpr uint8_t xdv_set_text_and_glyphs = 254;
inline constexpr uint8_t fill = 223;
} // namespace op

} // namespace texglyph
