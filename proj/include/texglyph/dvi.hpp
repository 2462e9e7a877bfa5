// dvi.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0
//
// Typed model of the DVI / XDV instruction stream. The model is
// lossless: together with the operand-width fields it reproduces the
// original file byte for byte (see dvi_writer.hpp).

#pragma once

#include "texglyph/bytes.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace texglyph {

enum class DviFlavor { ClassicDVI, XDV };

std::string to_string(DviFlavor flavor);

/// Preamble constants. id 2 is classic DVI, 5..7 are XDV revisions.
struct DviPre {
    uint8_t id = 2;
    uint32_t num = 25400000;
    uint32_t den = 473628672;
    uint32_t mag = 1000;
    Bytes comment;
};

/// Classic font definition (fnt_def1..4).
struct FontDef {
    uint32_t number = 0;      // k
    uint32_t checksum = 0;
    int32_t scaled_size = 0;  // DVI units
    int32_t design_size = 0;  // DVI units
    std::string area;
    std::string name;
    uint8_t op_width = 1;     // 1..4: which fnt_defN encoded it
};

// NativeFontDef flag bits (XDV).
inline constexpr uint16_t kNativeFontVertical = 0x0100;
inline constexpr uint16_t kNativeFontColored = 0x0200;
inline constexpr uint16_t kNativeFontExtend = 0x1000;
inline constexpr uint16_t kNativeFontSlant = 0x2000;
inline constexpr uint16_t kNativeFontEmbolden = 0x4000;

/// XDV native font definition (opcode 252). Optional fields are present
/// iff the corresponding flag bit is set.
struct NativeFontDef {
    uint32_t number = 0;     // k
    int32_t point_size = 0;  // DVI units
    uint16_t flags = 0;
    std::string font_file;
    uint32_t face_index = 0;
    std::optional<uint32_t> rgba;      // kNativeFontColored
    std::optional<int32_t> extend;     // 16.16 fixed
    std::optional<int32_t> slant;      // 16.16 fixed
    std::optional<int32_t> embolden;   // 16.16 fixed
};

// ---- instructions ----

/// set_char_0..127 (op_width 0), set1..4 / put1..4 (op_width 1..4).
/// advance=false is the put form.
struct SetChar {
    uint32_t code = 0;
    bool advance = true;
    uint8_t op_width = 0;
};

/// set_rule / put_rule.
struct SetRule {
    int32_t height = 0;
    int32_t width = 0;
    bool advance = true;
};

struct Right {
    int32_t distance = 0;
    uint8_t op_width = 4;  // 1..4
};

/// w0 (op_width 0, no operand) or w1..4.
struct W {
    std::optional<int32_t> distance;
    uint8_t op_width = 0;
};

struct X {
    std::optional<int32_t> distance;
    uint8_t op_width = 0;
};

struct Down {
    int32_t distance = 0;
    uint8_t op_width = 4;
};

struct Y {
    std::optional<int32_t> distance;
    uint8_t op_width = 0;
};

struct Z {
    std::optional<int32_t> distance;
    uint8_t op_width = 0;
};

struct Push {};
struct Pop {};
struct Nop {};

/// fnt_num_0..63 (op_width 0) or fnt1..4.
struct FontSelect {
    uint32_t k = 0;
    uint8_t op_width = 0;
};

/// xxx1..4.
struct Special {
    Bytes payload;
    uint8_t op_width = 1;
};

/// XDV set_glyphs (253): a shaped run of glyphs with explicit positions
/// relative to the current point.
struct GlyphRun {
    int32_t width = 0;  // total advance of the run, DVI units
    std::vector<int32_t> x;
    std::vector<int32_t> y;
    std::vector<uint16_t> glyphs;
};

struct SetGlyphs {
    GlyphRun run;
};

/// XDV set_text_and_glyphs (254): like SetGlyphs plus the original text
/// as UTF-16 code units (for text extraction / actual-text).
struct SetTextAndGlyphs {
    std::vector<uint16_t> text;
    GlyphRun run;
};

using Instruction = std::variant<SetChar, SetRule, Right, W, X, Down, Y, Z,
                                 Push, Pop, FontSelect, FontDef, NativeFontDef,
                                 Special, SetGlyphs, SetTextAndGlyphs, Nop>;

using AnyFontDef = std::variant<FontDef, NativeFontDef>;

/// One page: bop counts plus everything strictly between bop and eop.
struct Page {
    std::array<int32_t, 10> counts{};
    int32_t prev_ptr = -1;  // as parsed; recomputed when serializing
    std::vector<Instruction> instructions;
};

struct PostSummary {
    int32_t max_height_depth = 0;  // l
    int32_t max_width = 0;         // u
    uint16_t max_stack_depth = 0;  // s
    uint16_t page_count = 0;       // t
};

/// A fully decoded DVI/XDV file.
///
/// `gaps[g]` holds the nop / font-definition material that appears
/// before page g (gaps.size() == pages.size() + 1; the last gap sits
/// between the final eop and post). `postamble_defs` is the duplicate
/// font-definition block of the postamble, in file order.
struct DviProgram {
    DviPre pre;
    std::vector<Page> pages;
    std::vector<std::vector<Instruction>> gaps;
    std::vector<Instruction> postamble_defs;
    PostSummary post;
    uint8_t fill_count = 4;  // trailing 223 bytes (4..7)

    /// Semantic index: font number -> definition, collected from pages
    /// and gaps (not the postamble duplicates).
    std::map<uint32_t, AnyFontDef> font_defs;

    DviFlavor flavor() const { return pre.id == 2 ? DviFlavor::ClassicDVI : DviFlavor::XDV; }
};

} // namespace texglyph
