// dvi_parser.cpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0

#include "texglyph/dvi_parser.hpp"

#include "texglyph/dvi_opcodes.hpp"

#include <set>
#include <string>

namespace texglyph {

namespace {

bool same_def(const FontDef& a, const FontDef& b) {
    return a.number == b.number && a.checksum == b.checksum &&
           a.scaled_size == b.scaled_size && a.design_size == b.design_size &&
           a.area == b.area && a.name == b.name;
}

bool same_def(const NativeFontDef& a, const NativeFontDef& b) {
    return a.number == b.number && a.point_size == b.point_size && a.flags == b.flags &&
           a.font_file == b.font_file && a.face_index == b.face_index && a.rgba == b.rgba &&
           a.extend == b.extend && a.slant == b.slant && a.embolden == b.embolden;
}

bool same_def(const AnyFontDef& a, const AnyFontDef& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<FontDef>(a))
        return same_def(std::get<FontDef>(a), std::get<FontDef>(b));
    return same_def(std::get<NativeFontDef>(a), std::get<NativeFontDef>(b));
}

class Parser {
public:
    explicit Parser(std::span<const uint8_t> bytes) : r_(bytes) {}

    DviProgram run() {
        if (r_.size() == 0) throw Truncated("empty input", 0);
        read_pre();
        read_pages();
        read_postamble();
        read_post_post_and_fill();
        return std::move(prog_);
    }

private:
    bool xdv() const { return prog_.pre.id != 2; }

    void read_pre() {
        uint8_t b = r_.read_u8();
        if (b != op::pre) throw BadMagic("first byte is not the pre opcode (247)", 0);
        DviPre pre;
        pre.id = r_.read_u8();
        if (pre.id != 2 && pre.id != 5 && pre.id != 6 && pre.id != 7)
            throw BadMagic("unsupported DVI id byte " + std::to_string(pre.id), 1);
        pre.num = r_.read_u32();
        pre.den = r_.read_u32();
        pre.mag = r_.read_u32();
        if (pre.num == 0 || pre.den == 0 || pre.mag == 0)
            throw BadMagic("preamble num/den/mag must be positive", 2);
        uint8_t k = r_.read_u8();
        pre.comment = r_.read_bytes(k);
        prog_.pre = pre;
    }

    // Pages interleaved with gap material (nop / font defs) until post.
    void read_pages() {
        prog_.gaps.emplace_back();
        for (;;) {
            std::size_t at = r_.offset();
            uint8_t b = r_.read_u8();
            const OpInfo& info = opcode_table()[b];
            switch (info.kind) {
            case OpKind::Nop:
                prog_.gaps.back().push_back(Nop{});
                break;
            case OpKind::FntDef:
                prog_.gaps.back().push_back(read_font_def(info, at, /*postamble=*/false));
                break;
            case OpKind::NativeFontDef:
                require_xdv(b, at);
                prog_.gaps.back().push_back(read_native_font_def(at, /*postamble=*/false));
                break;
            case OpKind::Bop:
                read_page(at);
                prog_.gaps.emplace_back();
                break;
            case OpKind::Post:
                post_offset_ = at;
                return;
            default:
                throw UnknownOpcode("opcode " + std::string(info.mnemonic) +
                                        " not allowed between pages",
                                    at, b);
            }
        }
    }

    void read_page(std::size_t bop_offset) {
        Page page;
        for (auto& c : page.counts) c = r_.read_s32();
        page.prev_ptr = r_.read_s32();
        int32_t expected = last_bop_offset_;
        if (page.prev_ptr != expected)
            throw PointerMismatch("bop back pointer " + std::to_string(page.prev_ptr) +
                                      " does not match previous bop at " + std::to_string(expected),
                                  bop_offset);
        last_bop_offset_ = static_cast<int32_t>(bop_offset);

        for (;;) {
            std::size_t at = r_.offset();
            uint8_t b = r_.read_u8();
            const OpInfo& info = opcode_table()[b];
            if (info.kind == OpKind::Eop) break;
            page.instructions.push_back(read_instruction(info, b, at));
        }
        prog_.pages.push_back(std::move(page));
    }

    Instruction read_instruction(const OpInfo& info, uint8_t b, std::size_t at) {
        switch (info.kind) {
        case OpKind::SetCharImmediate:
            return SetChar{static_cast<uint32_t>(info.immediate), true, 0};
        case OpKind::Set:
            return SetChar{r_.read_unsigned(info.width), true, info.width};
        case OpKind::Put:
            return SetChar{r_.read_unsigned(info.width), false, info.width};
        case OpKind::SetRule: {
            int32_t h = r_.read_s32();
            int32_t w = r_.read_s32();
            return SetRule{h, w, true};
        }
        case OpKind::PutRule: {
            int32_t h = r_.read_s32();
            int32_t w = r_.read_s32();
            return SetRule{h, w, false};
        }
        case OpKind::Right:
            return Right{r_.read_signed(info.width), info.width};
        case OpKind::W0:
            return W{std::nullopt, 0};
        case OpKind::W:
            return W{r_.read_signed(info.width), info.width};
        case OpKind::X0:
            return X{std::nullopt, 0};
        case OpKind::X:
            return X{r_.read_signed(info.width), info.width};
        case OpKind::Down:
            return Down{r_.read_signed(info.width), info.width};
        case OpKind::Y0:
            return Y{std::nullopt, 0};
        case OpKind::Y:
            return Y{r_.read_signed(info.width), info.width};
        case OpKind::Z0:
            return Z{std::nullopt, 0};
        case OpKind::Z:
            return Z{r_.read_signed(info.width), info.width};
        case OpKind::Push:
            return Push{};
        case OpKind::Pop:
            return Pop{};
        case OpKind::Nop:
            return Nop{};
        case OpKind::FntNum:
            return make_font_select(static_cast<uint32_t>(info.immediate), 0, at);
        case OpKind::Fnt:
            return make_font_select(r_.read_unsigned(info.width), info.width, at);
        case OpKind::Xxx: {
            uint32_t len = r_.read_unsigned(info.width);
            return Special{r_.read_bytes(len), info.width};
        }
        case OpKind::FntDef:
            return read_font_def(info, at, /*postamble=*/false);
        case OpKind::NativeFontDef:
            require_xdv(b, at);
            return read_native_font_def(at, /*postamble=*/false);
        case OpKind::SetGlyphs:
            require_xdv(b, at);
            return SetGlyphs{read_glyph_run()};
        case OpKind::SetTextAndGlyphs: {
            require_xdv(b, at);
            if (prog_.pre.id < 7)
                throw UnknownOpcode("set_text_and_glyphs requires XDV id 7", at, b);
            SetTextAndGlyphs stg;
            uint16_t n = r_.read_u16();
            stg.text.reserve(n);
            for (uint16_t i = 0; i < n; ++i) stg.text.push_back(r_.read_u16());
            stg.run = read_glyph_run();
            return stg;
        }
        case OpKind::Bop:
        case OpKind::Pre:
        case OpKind::Post:
        case OpKind::PostPost:
            throw UnknownOpcode("opcode " + std::string(info.mnemonic) +
                                    " not allowed inside a page",
                                at, b);
        case OpKind::PicFile:
            throw UnknownOpcode("pic_file is not supported", at, b);
        case OpKind::Eop:
        case OpKind::Undefined:
        default:
            throw UnknownOpcode("undefined opcode", at, b);
        }
    }

    Instruction make_font_select(uint32_t k, uint8_t width, std::size_t at) {
        if (!prog_.font_defs.count(k))
            throw InvariantViolation("font " + std::to_string(k) +
                                     " selected at offset " + std::to_string(at) +
                                     " before being defined");
        return FontSelect{k, width};
    }

    GlyphRun read_glyph_run() {
        GlyphRun run;
        run.width = r_.read_s32();
        uint16_t n = r_.read_u16();
        run.x.reserve(n);
        run.y.reserve(n);
        run.glyphs.reserve(n);
        for (uint16_t i = 0; i < n; ++i) {
            run.x.push_back(r_.read_s32());
            run.y.push_back(r_.read_s32());
        }
        for (uint16_t i = 0; i < n; ++i) run.glyphs.push_back(r_.read_u16());
        return run;
    }

    Instruction read_font_def(const OpInfo& info, std::size_t at, bool postamble) {
        FontDef def;
        def.op_width = info.width;
        def.number = r_.read_unsigned(info.width);
        def.checksum = r_.read_u32();
        def.scaled_size = r_.read_s32();
        def.design_size = r_.read_s32();
        if (def.scaled_size <= 0 || def.design_size <= 0)
            throw InvariantViolation("font definition at offset " + std::to_string(at) +
                                     " has nonpositive size");
        uint8_t a = r_.read_u8();
        uint8_t l = r_.read_u8();
        def.area = r_.read_string(a);
        def.name = r_.read_string(l);
        register_def(def.number, AnyFontDef{def}, at, postamble);
        return def;
    }

    Instruction read_native_font_def(std::size_t at, bool postamble) {
        NativeFontDef def;
        def.number = r_.read_u32();
        def.point_size = r_.read_s32();
        if (def.point_size <= 0)
            throw InvariantViolation("native font definition at offset " + std::to_string(at) +
                                     " has nonpositive size");
        def.flags = r_.read_u16();
        uint8_t len = r_.read_u8();
        def.font_file = r_.read_string(len);
        def.face_index = r_.read_u32();
        if (def.flags & kNativeFontColored) def.rgba = r_.read_u32();
        if (def.flags & kNativeFontExtend) def.extend = r_.read_s32();
        if (def.flags & kNativeFontSlant) def.slant = r_.read_s32();
        if (def.flags & kNativeFontEmbolden) def.embolden = r_.read_s32();
        register_def(def.number, AnyFontDef{def}, at, postamble);
        return def;
    }

    void register_def(uint32_t k, AnyFontDef def, std::size_t at, bool postamble) {
        if (postamble) {
            auto it = prog_.font_defs.find(k);
            if (it == prog_.font_defs.end())
                throw InvariantViolation("postamble defines font " + std::to_string(k) +
                                         " that never appeared in the page stream");
            if (!same_def(it->second, def))
                throw InvariantViolation("postamble definition of font " + std::to_string(k) +
                                         " differs from the page-stream definition");
            postamble_defined_.insert(k);
            return;
        }
        auto [it, inserted] = prog_.font_defs.emplace(k, def);
        if (!inserted && !same_def(it->second, def))
            throw InvariantViolation("font " + std::to_string(k) +
                                     " redefined with different parameters at offset " +
                                     std::to_string(at));
    }

    void read_postamble() {
        // The post opcode byte is already consumed.
        int32_t p = r_.read_s32();
        if (p != last_bop_offset_)
            throw PointerMismatch("post pointer " + std::to_string(p) +
                                      " does not match last bop at " +
                                      std::to_string(last_bop_offset_),
                                  post_offset_);
        uint32_t num = r_.read_u32();
        uint32_t den = r_.read_u32();
        uint32_t mag = r_.read_u32();
        if (num != prog_.pre.num || den != prog_.pre.den || mag != prog_.pre.mag)
            throw PointerMismatch("postamble num/den/mag do not match the preamble", post_offset_);
        prog_.post.max_height_depth = r_.read_s32();
        prog_.post.max_width = r_.read_s32();
        prog_.post.max_stack_depth = r_.read_u16();
        prog_.post.page_count = r_.read_u16();
        if (prog_.post.page_count != prog_.pages.size())
            throw PointerMismatch("postamble page count " + std::to_string(prog_.post.page_count) +
                                      " does not match " + std::to_string(prog_.pages.size()) +
                                      " decoded pages",
                                  post_offset_);

        for (;;) {
            std::size_t at = r_.offset();
            uint8_t b = r_.read_u8();
            const OpInfo& info = opcode_table()[b];
            if (info.kind == OpKind::PostPost) {
                post_post_offset_ = at;
                break;
            }
            switch (info.kind) {
            case OpKind::Nop:
                prog_.postamble_defs.push_back(Nop{});
                break;
            case OpKind::FntDef:
                prog_.postamble_defs.push_back(read_font_def(info, at, /*postamble=*/true));
                break;
            case OpKind::NativeFontDef:
                require_xdv(b, at);
                prog_.postamble_defs.push_back(read_native_font_def(at, /*postamble=*/true));
                break;
            default:
                throw UnknownOpcode("opcode " + std::string(info.mnemonic) +
                                        " not allowed in the postamble",
                                    at, b);
            }
        }
        for (const auto& [k, def] : prog_.font_defs) {
            (void)def;
            if (!postamble_defined_.count(k))
                throw InvariantViolation("font " + std::to_string(k) +
                                         " is missing from the postamble duplicates");
        }
    }

    void read_post_post_and_fill() {
        int32_t q = r_.read_s32();
        if (q != static_cast<int32_t>(post_offset_))
            throw PointerMismatch("post_post pointer " + std::to_string(q) +
                                      " does not match post at " + std::to_string(post_offset_),
                                  post_post_offset_);
        uint8_t id = r_.read_u8();
        if (id != prog_.pre.id)
            throw PointerMismatch("post_post id byte does not match the preamble id",
                                  post_post_offset_);
        std::size_t fills = 0;
        while (!r_.at_end()) {
            std::size_t at = r_.offset();
            uint8_t b = r_.read_u8();
            if (b != op::fill)
                throw UnknownOpcode("expected 223 fill byte", at, b);
            ++fills;
        }
        if (fills < 4)
            throw Truncated("fewer than 4 trailing fill bytes", r_.offset());
        if (r_.size() % 4 != 0)
            throw PointerMismatch("file length is not a multiple of 4", r_.size());
        prog_.fill_count = static_cast<uint8_t>(fills);
    }

    void require_xdv(uint8_t b, std::size_t at) {
        if (!xdv())
            throw UnknownOpcode("XDV opcode in a classic DVI file", at, b);
    }

    ByteReader r_;
    DviProgram prog_;
    int32_t last_bop_offset_ = -1;
    std::size_t post_offset_ = 0;
    std::size_t post_post_offset_ = 0;
    std::set<uint32_t> postamble_defined_;
};

} // namespace

DviProgram parse(std::span<const uint8_t> bytes) { return Parser(bytes).run(); }

DviProgram parse(const Bytes& bytes) {
    return parse(std::span<const uint8_t>(bytes.data(), bytes.size()));
}

std::string to_string(DviFlavor flavor) {
    return flavor == DviFlavor::ClassicDVI ? "dvi" : "xdv";
}

} // namespace texglyph
