#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wordspot/errors.hpp"
#include "wordspot/image.hpp"

namespace wordspot {

// Built-in bitmap font. Cell is 6x16 with evenly spaced reference rows:
// top line 0, x-line 5, baseline 10, bottom line 15. The x-height body
// always fills rows 5 and 10 edge to edge. Ascenders are short one-column
// tips on rows 3..4, descenders a one-column tip on row 11, so the rows
// outside the body stay far lighter than the body rows and the two tip
// kinds produce runs of different heights. Every glyph column carries at
// least four ink pixels.
inline constexpr int glyph_width = 6;
inline constexpr int glyph_height = 16;
inline constexpr int glyph_top_row = 0;
inline constexpr int glyph_x_row = 5;
inline constexpr int glyph_base_row = 10;
inline constexpr int glyph_bottom_row = 15;
inline constexpr int glyph_asc_rows = 2; // rows 3..4
inline constexpr int glyph_desc_rows = 1; // row 11

struct Glyph {
    char ch = 0;
    bool ascender = false;
    bool descender = false;
    std::array<std::uint8_t, glyph_width * glyph_height> bits{};

    bool get(int x, int y) const { return bits[y * glyph_width + x] != 0; }
};

namespace detail {

struct GlyphSpec {
    char ch;
    int asc_col;  // -1 = no ascender tip
    int desc_col; // -1 = no descender tip
    std::array<const char*, 4> mid; // rows 6..9
};

inline Glyph build_glyph(const GlyphSpec& spec) {
    Glyph g;
    g.ch = spec.ch;
    g.ascender = spec.asc_col >= 0;
    g.descender = spec.desc_col >= 0;
    auto put = [&g](int x, int y) { g.bits[y * glyph_width + x] = 1; };
    for (int x = 0; x < glyph_width; ++x) {
        put(x, glyph_x_row);
        put(x, glyph_base_row);
    }
    for (int r = 0; r < 4; ++r)
        for (int x = 0; x < glyph_width; ++x)
            if (spec.mid[r][x] == '#') put(x, glyph_x_row + 1 + r);
    if (spec.asc_col >= 0)
        for (int y = glyph_x_row - glyph_asc_rows; y < glyph_x_row; ++y)
            put(spec.asc_col, y);
    if (spec.desc_col >= 0)
        for (int y = glyph_base_row + 1; y <= glyph_base_row + glyph_desc_rows; ++y)
            put(spec.desc_col, y);
    return g;
}

inline const std::map<char, Glyph>& default_glyph_table() {
    static const std::map<char, Glyph> table = [] {
        // Every body row carries at least 4 ink pixels so even a short
        // line of the sparsest glyphs keeps its whole body above a page
        // mean dominated by longer lines; every column carries at least
        // 2 body-row pixels so specks never out-ink a glyph column.
        const GlyphSpec specs[] = {
            {'a', -1, -1, {"##..##", "######", "##..##", "######"}},
            {'c', -1, -1, {"######", "####..", "####..", "######"}},
            {'e', -1, -1, {"######", "####..", "..####", "######"}},
            {'m', -1, -1, {"######", "#.##.#", "#.##.#", "######"}},
            {'n', -1, -1, {"###.##", "###.##", "##.###", "##.###"}},
            {'o', -1, -1, {"######", "##..##", "##..##", "######"}},
            {'s', -1, -1, {".#####", "####..", "..####", "#####."}},
            {'u', -1, -1, {"##..##", "##..##", "######", "######"}},
            {'v', -1, -1, {"##..##", "######", "######", "##..##"}},
            {'z', -1, -1, {"######", "..####", "####..", "######"}},
            {'b', 0, -1, {"######", "##..##", "##..##", "######"}},
            {'d', 5, -1, {"######", "##..##", "##..##", "######"}},
            {'h', 1, -1, {"##..##", "##..##", "######", "######"}},
            {'l', 2, -1, {"######", ".####.", ".####.", "######"}},
            {'t', 3, -1, {"######", "###..#", "###..#", "######"}},
            {'g', -1, 5, {"##..##", "######", "##..##", "######"}},
            {'p', -1, 0, {"######", "##..##", "##..##", "######"}},
            {'q', -1, 4, {"######", "##..##", "##..##", "######"}},
            {'y', -1, 2, {"##..##", "######", "######", "##..##"}},
        };
        std::map<char, Glyph> t;
        for (const auto& s : specs) t[s.ch] = build_glyph(s);
        return t;
    }();
    return table;
}

} // namespace detail

inline const std::map<char, Glyph>& default_glyphs() { return detail::default_glyph_table(); }

inline std::string default_alphabet() {
    std::string s;
    for (const auto& [ch, g] : default_glyphs()) s.push_back(ch);
    return s;
}

struct SyntheticPageSpec {
    std::string glyph_set = "default";
    std::vector<std::string> lines; // words separated by single spaces
    int char_gap = 2;
    int word_gap = 8;
    int line_gap = 10;
    double noise = 0.0;
    int margin = 8;
    int page_width = 0; // 0 = size to content

    void validate() const {
        if (glyph_set != "default")
            throw InputError("unknown glyph set: " + glyph_set);
        if (char_gap < 0)
            throw InputError("inter-character gap must be non-negative");
        if (word_gap <= char_gap)
            throw InputError("inter-word gap must exceed inter-character gap");
        if (line_gap < 0)
            throw InputError("inter-line gap must be non-negative");
        if (!(noise >= 0.0 && noise < 0.5))
            throw InputError("noise must be in [0, 0.5)");
        if (margin < 0)
            throw InputError("margin must be non-negative");
        const auto& glyphs = default_glyphs();
        for (const auto& line : lines) {
            if (line.empty())
                throw InputError("empty line in page spec");
            for (char c : line) {
                if (c == ' ') continue;
                if (!glyphs.count(c))
                    throw InputError(std::string("unknown glyph: '") + c + "'");
            }
            if (line.front() == ' ' || line.back() == ' ' || line.find("  ") != std::string::npos)
                throw InputError("words must be separated by single spaces");
        }
    }
};

struct WordTruth {
    BoundingBox box; // tight ink extent
    int char_count = 0;
    std::string text;
};

struct LineTruth {
    BoundingBox box; // tight ink extent of the whole line
    std::vector<WordTruth> words;
};

struct SyntheticPage {
    BinaryImage image;
    std::vector<LineTruth> lines;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::string cur;
    for (char c : line) {
        if (c == ' ') {
            words.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    words.push_back(cur);
    return words;
}

inline int word_pixel_width(const std::string& word, int char_gap) {
    return static_cast<int>(word.size()) * glyph_width +
           (static_cast<int>(word.size()) - 1) * char_gap;
}

} // namespace detail

/// Renders a page and returns it with exact ground-truth geometry.
/// Deterministic for a given spec and seed.
inline SyntheticPage render_synthetic_page(const SyntheticPageSpec& spec, std::uint64_t seed = 0) {
    spec.validate();
    const auto& glyphs = default_glyphs();

    std::vector<std::vector<std::string>> line_words;
    int content_width = 0;
    for (const auto& line : spec.lines) {
        auto words = detail::split_words(line);
        int w = -spec.word_gap;
        for (const auto& word : words)
            w += detail::word_pixel_width(word, spec.char_gap) + spec.word_gap;
        content_width = std::max(content_width, w);
        line_words.push_back(std::move(words));
    }

    const int nlines = static_cast<int>(spec.lines.size());
    const int width = spec.page_width > 0 ? spec.page_width : content_width + 2 * spec.margin;
    const int height = 2 * spec.margin + nlines * glyph_height +
                       (nlines > 0 ? (nlines - 1) * spec.line_gap : 0);
    SyntheticPage page;
    page.image = BinaryImage(std::max(width, 1), std::max(height, 1));

    for (int li = 0; li < nlines; ++li) {
        const int y0 = spec.margin + li * (glyph_height + spec.line_gap);
        LineTruth line_truth;
        int line_min_y = height, line_max_y = -1, line_min_x = width, line_max_x = -1;
        int x = spec.margin;
        for (const auto& word : line_words[li]) {
            const int word_w = detail::word_pixel_width(word, spec.char_gap);
            if (spec.page_width > 0 && x + word_w > page.image.width - spec.margin)
                throw InputError("word too wide for page: \"" + word + "\"");

            int min_y = glyph_height, max_y = -1;
            int gx = x;
            for (char c : word) {
                const Glyph& g = glyphs.at(c);
                for (int yy = 0; yy < glyph_height; ++yy)
                    for (int xx = 0; xx < glyph_width; ++xx)
                        if (g.get(xx, yy)) {
                            page.image.set(gx + xx, y0 + yy, true);
                            min_y = std::min(min_y, yy);
                            max_y = std::max(max_y, yy);
                        }
                gx += glyph_width + spec.char_gap;
            }
            WordTruth wt;
            wt.text = word;
            wt.char_count = static_cast<int>(word.size());
            wt.box = BoundingBox{x, y0 + min_y, word_w, max_y - min_y + 1};
            line_truth.words.push_back(std::move(wt));

            line_min_x = std::min(line_min_x, x);
            line_max_x = std::max(line_max_x, x + word_w - 1);
            line_min_y = std::min(line_min_y, y0 + min_y);
            line_max_y = std::max(line_max_y, y0 + max_y);
            x += word_w + spec.word_gap;
        }
        line_truth.box = BoundingBox{line_min_x, line_min_y, line_max_x - line_min_x + 1,
                                     line_max_y - line_min_y + 1};
        page.lines.push_back(std::move(line_truth));
    }

    if (spec.noise > 0.0) {
        std::mt19937_64 rng(seed);
        for (auto& p : page.image.pixels) {
            // top 53 bits -> uniform double in [0, 1); avoids distribution
            // classes whose output is implementation-defined
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < spec.noise) p = p ? 0 : 1;
        }
    }
    return page;
}

} // namespace wordspot
