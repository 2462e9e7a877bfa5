// dvi_writer.cpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#include "texglyph/dvi_writer.hpp"

#include "texglyph/dvi_opcodes.hpp"

#include <set>
#include <string>

namespace texglyph {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw InvariantViolation(what);
}

void check_unsigned(uint32_t v, int width, const char* what) {
    require(width >= 1 && width <= 4, std::string(what) + ": operand width out of range");
    require(fits_unsigned(v, width), std::string(what) + ": value does not fit operand width");
}

void check_signed(int32_t v, int width, const char* what) {
    require(width >= 1 && width <= 4, std::string(what) + ": operand width out of range");
    require(fits_signed(v, width), std::string(what) + ": value does not fit operand width");
}

void encode_font_def(ByteWriter& w, const FontDef& def) {
    check_unsigned(def.number, def.op_width, "fnt_def");
    require(def.scaled_size > 0 && def.design_size > 0, "fnt_def: nonpositive size");
    require(def.area.size() <= 255 && def.name.size() <= 255, "fnt_def: name too long");
    w.u8(static_cast<uint8_t>(op::fnt_def1 + def.op_width - 1));
    w.unsigned_n(def.number, def.op_width);
    w.u32(def.checksum);
    w.s32(def.scaled_size);
    w.s32(def.design_size);
    w.u8(static_cast<uint8_t>(def.area.size()));
    w.u8(static_cast<uint8_t>(def.name.size()));
    w.str(def.area);
    w.str(def.name);
}

void encode_native_font_def(ByteWriter& w, const NativeFontDef& def, DviFlavor flavor) {
    require(flavor == DviFlavor::XDV, "native font definition in a classic DVI program");
    require(def.point_size > 0, "native font definition: nonpositive size");
    require(def.font_file.size() <= 255, "native font definition: file name too long");
    require(def.rgba.has_value() == bool(def.flags & kNativeFontColored),
            "native font definition: rgba presence does not match flags");
    require(def.extend.has_value() == bool(def.flags & kNativeFontExtend),
            "native font definition: extend presence does not match flags");
    require(def.slant.has_value() == bool(def.flags & kNativeFontSlant),
            "native font definition: slant presence does not match flags");
    require(def.embolden.has_value() == bool(def.flags & kNativeFontEmbolden),
            "native font definition: embolden presence does not match flags");
    w.u8(op::xdv_native_font_def);
    w.u32(def.number);
    w.s32(def.point_size);
    w.u16(def.flags);
    w.u8(static_cast<uint8_t>(def.font_file.size()));
    w.str(def.font_file);
    w.u32(def.face_index);
    if (def.rgba) w.u32(*def.rgba);
    if (def.extend) w.s32(*def.extend);
    if (def.slant) w.s32(*def.slant);
    if (def.embolden) w.s32(*def.embolden);
}

void encode_glyph_run(ByteWriter& w, const GlyphRun& run) {
    require(run.x.size() == run.y.size() && run.x.size() == run.glyphs.size(),
            "glyph run: x/y/glyph lists differ in length");
    require(run.glyphs.size() <= 0xffff, "glyph run: too many glyphs");
    w.s32(run.width);
    w.u16(static_cast<uint16_t>(run.glyphs.size()));
    for (std::size_t i = 0; i < run.glyphs.size(); ++i) {
        w.s32(run.x[i]);
        w.s32(run.y[i]);
    }
    for (uint16_t g : run.glyphs) w.u16(g);
}

struct InstructionEncoder {
    ByteWriter& w;
    DviFlavor flavor;

    void operator()(const SetChar& v) const {
        if (v.op_width == 0) {
            require(v.advance, "put has no immediate form");
            require(v.code <= 127, "set_char immediate must be 0..127");
            w.u8(static_cast<uint8_t>(v.code));
            return;
        }
        check_unsigned(v.code, v.op_width, v.advance ? "set" : "put");
        w.u8(static_cast<uint8_t>((v.advance ? op::set1 : op::put1) + v.op_width - 1));
        w.unsigned_n(v.code, v.op_width);
    }
    void operator()(const SetRule& v) const {
        w.u8(v.advance ? op::set_rule : op::put_rule);
        w.s32(v.height);
        w.s32(v.width);
    }
    void operator()(const Right& v) const {
        check_signed(v.distance, v.op_width, "right");
        w.u8(static_cast<uint8_t>(op::right1 + v.op_width - 1));
        w.signed_n(v.distance, v.op_width);
    }
    void operator()(const W& v) const { move_reg(v.distance, v.op_width, op::w0, op::w1, "w"); }
    void operator()(const X& v) const { move_reg(v.distance, v.op_width, op::x0, op::x1, "x"); }
    void operator()(const Down& v) const {
        check_signed(v.distance, v.op_width, "down");
        w.u8(static_cast<uint8_t>(op::down1 + v.op_width - 1));
        w.signed_n(v.distance, v.op_width);
    }
    void operator()(const Y& v) const { move_reg(v.distance, v.op_width, op::y0, op::y1, "y"); }
    void operator()(const Z& v) const { move_reg(v.distance, v.op_width, op::z0, op::z1, "z"); }
    void operator()(const Push&) const { w.u8(op::push); }
    void operator()(const Pop&) const { w.u8(op::pop); }
    void operator()(const Nop&) const { w.u8(op::nop); }
    void operator()(const FontSelect& v) const {
        if (v.op_width == 0) {
            require(v.k <= 63, "fnt_num immediate must be 0..63");
            w.u8(static_cast<uint8_t>(op::fnt_num_0 + v.k));
            return;
        }
        check_unsigned(v.k, v.op_width, "fnt");
        w.u8(static_cast<uint8_t>(op::fnt1 + v.op_width - 1));
        w.unsigned_n(v.k, v.op_width);
    }
    void operator()(const Special& v) const {
        check_unsigned(static_cast<uint32_t>(v.payload.size()), v.op_width, "xxx");
        w.u8(static_cast<uint8_t>(op::xxx1 + v.op_width - 1));
        w.unsigned_n(static_cast<uint32_t>(v.payload.size()), v.op_width);
        w.raw(v.payload);
    }
    void operator()(const FontDef& v) const { encode_font_def(w, v); }
    void operator()(const NativeFontDef& v) const { encode_native_font_def(w, v, flavor); }
    void operator()(const SetGlyphs& v) const {
        require(flavor == DviFlavor::XDV, "set_glyphs in a classic DVI program");
        w.u8(op::xdv_set_glyphs);
        encode_glyph_run(w, v.run);
    }
    void operator()(const SetTextAndGlyphs& v) const {
        require(flavor == DviFlavor::XDV, "set_text_and_glyphs in a classic DVI program");
        require(v.text.size() <= 0xffff, "set_text_and_glyphs: text too long");
        w.u8(op::xdv_set_text_and_glyphs);
        w.u16(static_cast<uint16_t>(v.text.size()));
        for (uint16_t u : v.text) w.u16(u);
        encode_glyph_run(w, v.run);
    }

private:
    void move_reg(std::optional<int32_t> d, uint8_t width, uint8_t op0, uint8_t op1,
                  const char* what) const {
        if (width == 0) {
            require(!d.has_value(), std::string(what) + "0 carries no operand");
            w.u8(op0);
            return;
        }
        require(d.has_value(), std::string(what) + "N requires an operand");
        check_signed(*d, width, what);
        w.u8(static_cast<uint8_t>(op1 + width - 1));
        w.signed_n(*d, width);
    }
};

/// Validation shared with serialize: every FontSelect must refer to a
/// font defined earlier in the stream.
struct SelectValidator {
    std::set<uint32_t> defined;

    void feed(const Instruction& ins) {
        if (const auto* def = std::get_if<FontDef>(&ins)) {
            defined.insert(def->number);
        } else if (const auto* ndef = std::get_if<NativeFontDef>(&ins)) {
            defined.insert(ndef->number);
        } else if (const auto* sel = std::get_if<FontSelect>(&ins)) {
            require(defined.count(sel->k) != 0,
                    "font " + std::to_string(sel->k) + " selected before being defined");
        }
    }
};

} // namespace

void encode_instruction(ByteWriter& w, const Instruction& ins, DviFlavor flavor) {
    std::visit(InstructionEncoder{w, flavor}, ins);
}

uint8_t compute_fill_count(std::size_t size_before_fill) {
    return static_cast<uint8_t>(4 + (4 - (size_before_fill + 4) % 4) % 4);
}

Bytes serialize(const DviProgram& program) {
    require(program.gaps.size() == program.pages.size() + 1,
            "program must have pages+1 gap slots");
    require(program.post.page_count == program.pages.size(),
            "postamble page count does not match pages");
    require(program.pre.num > 0 && program.pre.den > 0 && program.pre.mag > 0,
            "preamble num/den/mag must be positive");
    require(program.pre.comment.size() <= 255, "preamble comment too long");

    DviFlavor flavor = program.flavor();
    ByteWriter w;
    SelectValidator fonts;

    w.u8(op::pre);
    w.u8(program.pre.id);
    w.u32(program.pre.num);
    w.u32(program.pre.den);
    w.u32(program.pre.mag);
    w.u8(static_cast<uint8_t>(program.pre.comment.size()));
    w.raw(program.pre.comment);

    int32_t last_bop = -1;
    for (std::size_t p = 0; p < program.pages.size(); ++p) {
        for (const Instruction& ins : program.gaps[p]) {
            fonts.feed(ins);
            encode_instruction(w, ins, flavor);
        }
        const Page& page = program.pages[p];
        int32_t bop_offset = static_cast<int32_t>(w.size());
        w.u8(op::bop);
        for (int32_t c : page.counts) w.s32(c);
        w.s32(last_bop);
        last_bop = bop_offset;
        for (const Instruction& ins : page.instructions) {
            fonts.feed(ins);
            encode_instruction(w, ins, flavor);
        }
        w.u8(op::eop);
    }
    for (const Instruction& ins : program.gaps.back()) {
        fonts.feed(ins);
        encode_instruction(w, ins, flavor);
    }

    std::size_t post_offset = w.size();
    w.u8(op::post);
    w.s32(last_bop);
    w.u32(program.pre.num);
    w.u32(program.pre.den);
    w.u32(program.pre.mag);
    w.s32(program.post.max_height_depth);
    w.s32(program.post.max_width);
    w.u16(program.post.max_stack_depth);
    w.u16(program.post.page_count);
    for (const Instruction& ins : program.postamble_defs) {
        require(std::holds_alternative<FontDef>(ins) ||
                    std::holds_alternative<NativeFontDef>(ins) ||
                    std::holds_alternative<Nop>(ins),
                "only nop and font definitions are allowed in the postamble");
        encode_instruction(w, ins, flavor);
    }
    w.u8(op::post_post);
    w.s32(static_cast<int32_t>(post_offset));
    w.u8(program.pre.id);

    require(program.fill_count >= 4 && program.fill_count <= 7,
            "fill count must be between 4 and 7");
    for (uint8_t i = 0; i < program.fill_count; ++i) w.u8(op::fill);
    require(w.size() % 4 == 0, "fill count does not pad the file to a multiple of 4");
    return w.take();
}

bool fits_unsigned(uint32_t v, int n) {
    if (n >= 4) return true;
    return v < (1u << (8 * n));
}

bool fits_signed(int32_t v, int n) {
    if (n >= 4) return true;
    int32_t lim = 1 << (8 * n - 1);
    return v >= -lim && v < lim;
}

} // namespace texglyph
