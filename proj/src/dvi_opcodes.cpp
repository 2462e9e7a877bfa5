// dvi_opcodes.cpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#include "texglyph/dvi_opcodes.hpp"

namespace texglyph {

namespace {

// Mnemonics for the width families, indexed by width.
constexpr const char* kSetNames[] = {nullptr, "set1", "set2", "set3", "set4"};
constexpr const char* kPutNames[] = {nullptr, "put1", "put2", "put3", "put4"};
constexpr const char* kRightNames[] = {nullptr, "right1", "right2", "right3", "right4"};
constexpr const char* kWNames[] = {"w0", "w1", "w2", "w3", "w4"};
constexpr const char* kXNames[] = {"x0", "x1", "x2", "x3", "x4"};
constexpr const char* kDownNames[] = {nullptr, "down1", "down2", "down3", "down4"};
constexpr const char* kYNames[] = {"y0", "y1", "y2", "y3", "y4"};
constexpr const char* kZNames[] = {"z0", "z1", "z2", "z3", "z4"};
constexpr const char* kFntNames[] = {nullptr, "fnt1", "fnt2", "fnt3", "fnt4"};
constexpr const char* kXxxNames[] = {nullptr, "xxx1", "xxx2", "xxx3", "xxx4"};
constexpr const char* kFntDefNames[] = {nullptr, "fnt_def1", "fnt_def2", "fnt_def3", "fnt_def4"};

std::array<OpInfo, 256> build_table() {
    std::array<OpInfo, 256> t{};
    for (int b = 0; b <= 255; ++b) t[b] = OpInfo{OpKind::Undefined, "undefined", 0, -1};

    for (int c = 0; c <= 127; ++c)
        t[op::set_char_0 + c] = OpInfo{OpKind::SetCharImmediate, "set_char", 0, static_cast<int16_t>(c)};
    for (int w = 1; w <= 4; ++w) {
        t[op::set1 + w - 1] = OpInfo{OpKind::Set, kSetNames[w], static_cast<uint8_t>(w), -1};
        t[op::put1 + w - 1] = OpInfo{OpKind::Put, kPutNames[w], static_cast<uint8_t>(w), -1};
        t[op::right1 + w - 1] = OpInfo{OpKind::Right, kRightNames[w], static_cast<uint8_t>(w), -1};
        t[op::w1 + w - 1] = OpInfo{OpKind::W, kWNames[w], static_cast<uint8_t>(w), -1};
        t[op::x1 + w - 1] = OpInfo{OpKind::X, kXNames[w], static_cast<uint8_t>(w), -1};
        t[op::down1 + w - 1] = OpInfo{OpKind::Down, kDownNames[w], static_cast<uint8_t>(w), -1};
        t[op::y1 + w - 1] = OpInfo{OpKind::Y, kYNames[w], static_cast<uint8_t>(w), -1};
        t[op::z1 + w - 1] = OpInfo{OpKind::Z, kZNames[w], static_cast<uint8_t>(w), -1};
        t[op::fnt1 + w - 1] = OpInfo{OpKind::Fnt, kFntNames[w], static_cast<uint8_t>(w), -1};
        t[op::xxx1 + w - 1] = OpInfo{OpKind::Xxx, kXxxNames[w], static_cast<uint8_t>(w), -1};
        t[op::fnt_def1 + w - 1] = OpInfo{OpKind::FntDef, kFntDefNames[w], static_cast<uint8_t>(w), -1};
    }
    t[op::set_rule] = OpInfo{OpKind::SetRule, "set_rule", 0, -1};
    t[op::put_rule] = OpInfo{OpKind::PutRule, "put_rule", 0, -1};
    t[op::nop] = OpInfo{OpKind::Nop, "nop", 0, -1};
    t[op::bop] = OpInfo{OpKind::Bop, "bop", 0, -1};
    t[op::eop] = OpInfo{OpKind::Eop, "eop", 0, -1};
    t[op::push] = OpInfo{OpKind::Push, "push", 0, -1};
    t[op::pop] = OpInfo{OpKind::Pop, "pop", 0, -1};
    t[op::w0] = OpInfo{OpKind::W0, "w0", 0, -1};
    t[op::x0] = OpInfo{OpKind::X0, "x0", 0, -1};
    t[op::y0] = OpInfo{OpKind::Y0, "y0", 0, -1};
    t[op::z0] = OpInfo{OpKind::Z0, "z0", 0, -1};
    for (int k = 0; k <= 63; ++k)
        t[op::fnt_num_0 + k] = OpInfo{OpKind::FntNum, "fnt_num", 0, static_cast<int16_t>(k)};
    t[op::pre] = OpInfo{OpKind::Pre, "pre", 0, -1};
    t[op::post] = OpInfo{OpKind::Post, "post", 0, -1};
    t[op::post_post] = OpInfo{OpKind::PostPost, "post_post", 0, -1};
    t[op::xdv_pic_file] = OpInfo{OpKind::PicFile, "pic_file", 0, -1};
    t[op::xdv_native_font_def] = OpInfo{OpKind::NativeFontDef, "native_fnt_def", 0, -1};
    t[op::xdv_set_glyphs] = OpInfo{OpKind::SetGlyphs, "set_glyphs", 0, -1};
    t[op::xdv_set_text_and_glyphs] = OpInfo{OpKind::SetTextAndGlyphs, "set_text_and_glyphs", 0, -1};
    return t;
}

} // namespace

const std::array<OpInfo, 256>& opcode_table() {
    static const std::array<OpInfo, 256> table = build_table();
    return table;
}

const char* opcode_mnemonic(uint8_t opcode) { return opcode_table()[opcode].mnemonic; }

} // namespace texglyph
