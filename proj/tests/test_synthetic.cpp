#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "wordspot/synthetic.hpp"

using namespace wordspot;

TEST_CASE("glyph set geometry invariants") {
    const auto& glyphs = default_glyphs();
    REQUIRE(glyphs.size() == 19);

    std::set<std::string> seen;
    for (const auto& [ch, g] : glyphs) {
        CAPTURE(ch);
        std::string key;
        for (int y = 0; y < glyph_height; ++y)
            for (int x = 0; x < glyph_width; ++x) key.push_back(g.get(x, y) ? '#' : '.');
        REQUIRE(seen.insert(key).second); // glyphs pairwise distinct

        // x-line and baseline rows are full bars
        for (int x = 0; x < glyph_width; ++x) {
            REQUIRE(g.get(x, glyph_x_row));
            REQUIRE(g.get(x, glyph_base_row));
        }
        // body rows each carry at least 4 ink pixels
        for (int y = glyph_x_row; y <= glyph_base_row; ++y) {
            int row_ink = 0;
            for (int x = 0; x < glyph_width; ++x) row_ink += g.get(x, y);
            REQUIRE(row_ink >= 4);
        }
        // every column has ink on both bars plus two body pixels
        for (int x = 0; x < glyph_width; ++x) {
            int col_ink = 0;
            for (int y = glyph_x_row; y <= glyph_base_row; ++y) col_ink += g.get(x, y);
            REQUIRE(col_ink >= 4);
        }
        // ascender ink sits only in the two rows above the x-line, in one column
        int asc_ink = 0, desc_ink = 0;
        for (int x = 0; x < glyph_width; ++x)
            for (int y = 0; y < glyph_height; ++y) {
                if (y < glyph_x_row && g.get(x, y)) {
                    ++asc_ink;
                    REQUIRE(y >= glyph_x_row - glyph_asc_rows);
                }
                if (y > glyph_base_row && g.get(x, y)) {
                    ++desc_ink;
                    REQUIRE(y <= glyph_base_row + glyph_desc_rows);
                }
            }
        CHECK(asc_ink == (g.ascender ? glyph_asc_rows : 0));
        CHECK(desc_ink == (g.descender ? glyph_desc_rows : 0));
    }

    int ascenders = 0, descenders = 0;
    for (const auto& [ch, g] : glyphs) {
        ascenders += g.ascender;
        descenders += g.descender;
    }
    CHECK(ascenders == 5);
    CHECK(descenders == 4);
    CHECK(default_alphabet().size() == 19);
}

TEST_CASE("rendering is deterministic and noise-free by default") {
    SyntheticPageSpec spec;
    spec.lines = {"the quey", "vamos"};
    const SyntheticPage a = render_synthetic_page(spec, 5);
    const SyntheticPage b = render_synthetic_page(spec, 99);
    CHECK(a.image == b.image); // zero noise: seed is irrelevant

    long glyph_ink = 0;
    for (const auto& line : spec.lines)
        for (char c : line)
            if (c != ' ') {
                const Glyph& g = default_glyphs().at(c);
                for (auto bit : g.bits) glyph_ink += bit;
            }
    CHECK(a.image.foreground_count() == glyph_ink);
}

TEST_CASE("ground truth geometry matches the layout") {
    SyntheticPageSpec spec;
    spec.lines = {"ab noon", "zest"};
    spec.margin = 6;
    spec.char_gap = 2;
    spec.word_gap = 9;
    spec.line_gap = 12;
    const SyntheticPage page = render_synthetic_page(spec);

    REQUIRE(page.lines.size() == 2);
    REQUIRE(page.lines[0].words.size() == 2);
    REQUIRE(page.lines[1].words.size() == 1);

    const WordTruth& ab = page.lines[0].words[0];
    CHECK(ab.text == "ab");
    CHECK(ab.char_count == 2);
    CHECK(ab.box.left == 6);
    CHECK(ab.box.width == 2 * 6 + 2);
    // 'b' has an ascender, so the tight box starts at the tip row
    CHECK(ab.box.top == 6 + glyph_x_row - glyph_asc_rows);
    CHECK(ab.box.bottom() == 6 + glyph_base_row);

    const WordTruth& noon = page.lines[0].words[1];
    CHECK(noon.text == "noon");
    CHECK(noon.box.left == 6 + ab.box.width + 9);
    // x-height-only word: box spans exactly x-line..baseline
    CHECK(noon.box.top == 6 + glyph_x_row);
    CHECK(noon.box.height == glyph_base_row - glyph_x_row + 1);

    const WordTruth& zest = page.lines[1].words[0];
    const int line1_y0 = 6 + glyph_height + 12;
    CHECK(zest.box.top == line1_y0 + glyph_x_row - glyph_asc_rows); // 't' ascender
    CHECK(zest.box.bottom() == line1_y0 + glyph_base_row);

    // line box covers its words exactly
    const BoundingBox& lb = page.lines[0].box;
    CHECK(lb.left == ab.box.left);
    CHECK(lb.right() == noon.box.right());
    CHECK(lb.top == std::min(ab.box.top, noon.box.top));
    CHECK(lb.bottom() == std::max(ab.box.bottom(), noon.box.bottom()));
}

TEST_CASE("page width handling") {
    SyntheticPageSpec spec;
    spec.lines = {"oo"};
    spec.margin = 4;
    const SyntheticPage page = render_synthetic_page(spec);
    CHECK(page.image.width == 2 * 6 + 2 + 2 * 4); // content plus margins

    spec.page_width = 200;
    CHECK(render_synthetic_page(spec).image.width == 200);

    spec.page_width = 20; // word is 14 wide, margin 4 leaves 12
    CHECK_THROWS_AS(render_synthetic_page(spec), InputError);
}

TEST_CASE("noise flips pixels at the requested rate") {
    SyntheticPageSpec spec;
    spec.lines = {"oooooooooo"};
    spec.noise = 0.05;
    const SyntheticPage clean = [&] {
        SyntheticPageSpec s = spec;
        s.noise = 0.0;
        return render_synthetic_page(s);
    }();
    const SyntheticPage noisy = render_synthetic_page(spec, 123);
    REQUIRE(noisy.image.width == clean.image.width);

    long flipped = 0;
    for (std::size_t i = 0; i < noisy.image.pixels.size(); ++i)
        flipped += noisy.image.pixels[i] != clean.image.pixels[i];
    const double rate = double(flipped) / double(noisy.image.pixels.size());
    CHECK(rate > 0.02);
    CHECK(rate < 0.10);

    // same seed reproduces, different seed differs
    CHECK(render_synthetic_page(spec, 123).image == noisy.image);
    CHECK(render_synthetic_page(spec, 124).image != noisy.image);
}

TEST_CASE("spec validation rejects bad input") {
    SyntheticPageSpec spec;
    spec.lines = {"oo"};

    SyntheticPageSpec bad = spec;
    bad.glyph_set = "serif";
    CHECK_THROWS_AS(bad.validate(), InputError);

    bad = spec;
    bad.lines = {"ok"}; // no 'k' glyph
    CHECK_THROWS_AS(bad.validate(), InputError);

    bad = spec;
    bad.lines = {"a  b"};
    CHECK_THROWS_AS(bad.validate(), InputError);

    bad = spec;
    bad.lines = {" a"};
    CHECK_THROWS_AS(bad.validate(), InputError);

    bad = spec;
    bad.lines = {""};
    CHECK_THROWS_AS(bad.validate(), InputError);

    bad = spec;
    bad.noise = 0.5;
    CHECK_THROWS_AS(bad.validate(), InputError);

    bad = spec;
    bad.word_gap = bad.char_gap;
    CHECK_THROWS_AS(bad.validate(), InputError);

    bad = spec;
    bad.margin = -1;
    CHECK_THROWS_AS(bad.validate(), InputError);
}
