// sfnt.hpp
// Copyright (c) 2026, the texglyph authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal sfnt (TrueType / CFF-flavored OpenType) reader: table
// directory, head/hhea/hmtx/maxp/OS2 metrics, cmap lookup, and glyph
// outlines from either glyf/loca or the CFF charstrings. No shaping:
// the TeX engine already positioned every glyph.

#pragma once

#include "texglyph/bytes.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

namespace texglyph {

/// One path segment in font units, y up. Contours are explicitly
/// closed with Close.
struct PathSegment {
    enum class Kind { Move, Line, Quad, Cubic, Close };
    Kind kind = Kind::Move;
    double x1 = 0, y1 = 0;  // Move/Line target; Quad/Cubic first control
    double x2 = 0, y2 = 0;  // Quad target; Cubic second control
    double x3 = 0, y3 = 0;  // Cubic target
};

using GlyphPath = std::vector<PathSegment>;

class SfntFont {
public:
    enum class OutlineSource { Glyf, Cff, None };

    /// Parse from bytes. `face_index` selects a face inside a ttc
    /// collection (must be 0 for single-face files).
    static std::shared_ptr<const SfntFont> load(Bytes data, uint32_t face_index);
    static std::shared_ptr<const SfntFont> load_file(const std::filesystem::path& path,
                                                     uint32_t face_index);

    uint16_t units_per_em() const { return units_per_em_; }
    uint16_t num_glyphs() const { return num_glyphs_; }
    /// hhea ascender/descender in font units (descender is negative).
    int16_t ascender() const { return ascender_; }
    int16_t descender() const { return descender_; }
    OutlineSource outline_source() const { return outline_source_; }

    /// Advance width in font units. Throws GlyphOutOfRange.
    uint16_t advance_width(uint32_t glyph_id) const;

    /// cmap lookup; nullopt when unmapped. Never returns glyph 0.
    std::optional<uint32_t> glyph_for_char(uint32_t scalar) const;

    /// Outline in font units, y up. Empty path for blank glyphs.
    /// Throws GlyphOutOfRange / UnsupportedFontFormat.
    GlyphPath glyph_outline(uint32_t glyph_id) const;

private:
    SfntFont() = default;

    struct Table {
        uint32_t offset = 0;
        uint32_t length = 0;
    };
    std::optional<Table> find(uint32_t tag) const;
    Table need(uint32_t tag, const char* name) const;

    void parse_directory(uint32_t face_index);
    void parse_head_tables();
    void parse_cmap();
    void parse_cff();

    GlyphPath glyf_outline(uint32_t glyph_id, int depth) const;
    GlyphPath cff_outline(uint32_t glyph_id) const;

    Bytes data_;
    std::vector<std::pair<uint32_t, Table>> tables_;

    uint16_t units_per_em_ = 1000;
    uint16_t num_glyphs_ = 0;
    int16_t ascender_ = 0;
    int16_t descender_ = 0;
    uint16_t number_of_h_metrics_ = 0;
    bool long_loca_ = false;
    OutlineSource outline_source_ = OutlineSource::None;

    // chosen cmap subtable
    uint32_t cmap_subtable_offset_ = 0;
    uint16_t cmap_format_ = 0;
    bool has_cmap_ = false;

    // CFF internals (offsets into data_)
    struct CffIndex {
        std::vector<uint32_t> offsets;  // absolute, count+1 entries
        uint32_t count() const { return offsets.empty() ? 0 : static_cast<uint32_t>(offsets.size() - 1); }
    };
    CffIndex cff_charstrings_;
    CffIndex cff_gsubrs_;
    CffIndex cff_lsubrs_;
};

} // namespace texglyph
