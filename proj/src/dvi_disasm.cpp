// dvi_disasm.cpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#include "texglyph/dvi_disasm.hpp"

#include "texglyph/dvi_opcodes.hpp"
#include "texglyph/dvi_writer.hpp"

#include <cstdio>
#include <sstream>

namespace texglyph {

namespace {

constexpr std::size_t kBopLength = 45;       // opcode + 10 counts + prev pointer
constexpr std::size_t kPostHeadLength = 29;  // opcode + p + num/den/mag + l/u + s + t

std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (u < 0x20 || u == 0x7f) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", u);
            out += buf;
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

std::string quoted(const Bytes& b) {
    return quoted(std::string_view(reinterpret_cast<const char*>(b.data()), b.size()));
}

std::string char_operand(uint32_t code) {
    if (code >= 32 && code <= 126) {
        std::string s = "'";
        s += static_cast<char>(code);
        s += "'";
        return s;
    }
    return std::to_string(code);
}

void glyph_list(std::ostream& s, const GlyphRun& run) {
    for (std::size_t i = 0; i < run.glyphs.size(); ++i)
        s << " g" << run.glyphs[i] << "@(" << run.x[i] << "," << run.y[i] << ")";
}

struct Describe {
    std::ostream& s;

    void operator()(const SetChar& v) const {
        if (v.op_width == 0)
            s << "set_char " << char_operand(v.code);
        else
            s << (v.advance ? "set" : "put") << int(v.op_width) << " " << char_operand(v.code);
    }
    void operator()(const SetRule& v) const {
        s << (v.advance ? "set_rule" : "put_rule") << " height=" << v.height
          << " width=" << v.width;
    }
    void operator()(const Right& v) const { s << "right" << int(v.op_width) << " " << v.distance; }
    void operator()(const W& v) const { move_reg("w", v.distance, v.op_width); }
    void operator()(const X& v) const { move_reg("x", v.distance, v.op_width); }
    void operator()(const Down& v) const { s << "down" << int(v.op_width) << " " << v.distance; }
    void operator()(const Y& v) const { move_reg("y", v.distance, v.op_width); }
    void operator()(const Z& v) const { move_reg("z", v.distance, v.op_width); }
    void operator()(const Push&) const { s << "push"; }
    void operator()(const Pop&) const { s << "pop"; }
    void operator()(const Nop&) const { s << "nop"; }
    void operator()(const FontSelect& v) const {
        if (v.op_width == 0)
            s << "fnt_num " << v.k;
        else
            s << "fnt" << int(v.op_width) << " " << v.k;
    }
    void operator()(const Special& v) const {
        s << "xxx" << int(v.op_width) << " len=" << v.payload.size() << " " << quoted(v.payload);
    }
    void operator()(const FontDef& v) const {
        s << "fnt_def" << int(v.op_width) << " k=" << v.number << " checksum=" << v.checksum
          << " scaled=" << v.scaled_size << " design=" << v.design_size
          << " area=" << quoted(v.area) << " name=" << quoted(v.name);
    }
    void operator()(const NativeFontDef& v) const {
        s << "native_fnt_def k=" << v.number << " ptsize=" << v.point_size << " flags=0x"
          << std::hex << v.flags << std::dec << " file=" << quoted(v.font_file)
          << " face=" << v.face_index;
        if (v.rgba) s << " rgba=0x" << std::hex << *v.rgba << std::dec;
        if (v.extend) s << " extend=" << *v.extend;
        if (v.slant) s << " slant=" << *v.slant;
        if (v.embolden) s << " embolden=" << *v.embolden;
    }
    void operator()(const SetGlyphs& v) const {
        s << "set_glyphs width=" << v.run.width << " count=" << v.run.glyphs.size();
        glyph_list(s, v.run);
    }
    void operator()(const SetTextAndGlyphs& v) const {
        s << "set_text_and_glyphs text_len=" << v.text.size() << " width=" << v.run.width
          << " count=" << v.run.glyphs.size();
        glyph_list(s, v.run);
    }

private:
    void move_reg(const char* name, std::optional<int32_t> d, uint8_t width) const {
        if (width == 0)
            s << name << "0";
        else
            s << name << int(width) << " " << *d;
    }
};

} // namespace

std::string disassemble(const DviProgram& program) {
    std::ostringstream out;
    DviFlavor flavor = program.flavor();
    std::size_t offset = 0;

    auto line = [&](std::size_t at, const std::string& text) { out << at << ": " << text << "\n"; };
    auto emit = [&](const Instruction& ins) {
        ByteWriter w;
        encode_instruction(w, ins, flavor);
        std::ostringstream s;
        std::visit(Describe{s}, ins);
        line(offset, s.str());
        offset += w.size();
    };

    {
        std::ostringstream s;
        s << "pre id=" << int(program.pre.id) << " num=" << program.pre.num
          << " den=" << program.pre.den << " mag=" << program.pre.mag
          << " comment=" << quoted(program.pre.comment);
        line(0, s.str());
        offset = 15 + program.pre.comment.size();
    }

    int64_t last_bop = -1;
    for (std::size_t p = 0; p < program.pages.size(); ++p) {
        for (const Instruction& ins : program.gaps[p]) emit(ins);
        const Page& page = program.pages[p];
        {
            std::ostringstream s;
            s << "bop counts=[";
            for (int i = 0; i < 10; ++i) s << (i ? "," : "") << page.counts[i];
            s << "] prev=" << last_bop;
            line(offset, s.str());
        }
        last_bop = static_cast<int64_t>(offset);
        offset += kBopLength;
        for (const Instruction& ins : page.instructions) emit(ins);
        line(offset, "eop");
        offset += 1;
    }
    for (const Instruction& ins : program.gaps.back()) emit(ins);

    std::size_t post_at = offset;
    {
        std::ostringstream s;
        s << "post last_bop=" << last_bop << " num=" << program.pre.num
          << " den=" << program.pre.den << " mag=" << program.pre.mag
          << " max_hd=" << program.post.max_height_depth << " max_w=" << program.post.max_width
          << " stack=" << program.post.max_stack_depth << " pages=" << program.post.page_count;
        line(post_at, s.str());
        offset += kPostHeadLength;
    }
    for (const Instruction& ins : program.postamble_defs) emit(ins);
    {
        std::ostringstream s;
        s << "post_post post=" << post_at << " id=" << int(program.pre.id)
          << " fill=" << int(program.fill_count);
        line(offset, s.str());
    }
    return out.str();
}

} // namespace texglyph
