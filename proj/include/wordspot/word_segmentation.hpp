#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <stdexcept>
#include <vector>

#include "wordspot/image.hpp"
#include "wordspot/line_segmentation.hpp"
#include "wordspot/profile.hpp"
#include "wordspot/shape_code.hpp"

namespace wordspot {

struct WordId {
    int page = 0;
    int line = 0;
    int position = 0;

    auto operator<=>(const WordId&) const = default;
};

// Reference rows in local (block) coordinates.
struct LineRef {
    int top_line = 0;
    int x_line = 0;
    int baseline = 0;
    int bottom_line = 0;

    bool operator==(const LineRef&) const = default;
};

struct WordBlock {
    WordId id;
    BoundingBox box;
    BinaryImage bitmap;
    LineRef line_ref;
    int char_count = 0;
    ShapeCode shape_code;

    int width() const { return box.width; }
};

struct GapThreshold {
    int gap = 0;
    bool fallback = false;

    bool operator==(const GapThreshold&) const = default;
};

/// Pushes the mean gap length rightward in unit steps until a null bin
/// appears; gaps at least that long separate words. A single-valued
/// histogram has its null bin right after the common length. When every
/// bin through the maximum is occupied the midpoint of the extremes is
/// used and the result is flagged.
inline GapThreshold word_gap_threshold(const GapHistogram& hist) {
    if (hist.empty()) throw std::invalid_argument("word_gap_threshold: empty histogram");
    const int start = static_cast<int>(std::floor(hist.mean_gap)) + 1;
    for (int g = start; g <= hist.max_gap(); ++g)
        if (hist.count(g) == 0) return {g, false};
    if (hist.min_gap() == hist.max_gap()) return {hist.max_gap() + 1, false};
    return {static_cast<int>(std::lround((hist.min_gap() + hist.max_gap()) / 2.0)), true};
}

struct WordSegOptions {
    int ink_floor = -1; // columns with at most this much ink are blank; -1 = auto
};

namespace detail {

inline int auto_ink_floor(int band_height) { return std::max(1, band_height / 5); }

} // namespace detail

/// Number of ink-column runs inside the block; every internal blank
/// column splits characters.
inline int count_characters(const WordBlock& word) {
    int runs = 0;
    bool in_run = false;
    for (int x = 0; x < word.bitmap.width; ++x) {
        bool inked = false;
        for (int y = 0; y < word.bitmap.height && !inked; ++y)
            if (word.bitmap.get(x, y)) inked = true;
        if (inked && !in_run) ++runs;
        in_run = inked;
    }
    return runs;
}

/// Splits a line band into words at column gaps no shorter than the
/// histogram threshold. Boxes are tight around ink horizontally and span
/// the band vertically; a small per-column ink floor keeps specks from
/// acting as ink.
inline std::vector<WordBlock> segment_words(const BinaryImage& img, const TextLine& line,
                                            const WordSegOptions& options = {}) {
    if (!img.contains(line.band))
        throw std::invalid_argument("segment_words: line band out of image range");

    const BinaryImage band = crop(img, line.band);
    const int floor = options.ink_floor >= 0 ? options.ink_floor
                                             : detail::auto_ink_floor(band.height);

    Profile columns = vertical_profile(band);
    for (auto& c : columns.counts)
        if (c <= floor) c = 0;

    int first = -1, last = -1;
    for (int x = 0; x < band.width; ++x) {
        if (columns.counts[x] > 0) {
            if (first < 0) first = x;
            last = x;
        }
    }
    if (first < 0) return {};

    const GapHistogram hist = gap_histogram(columns);
    const int threshold = hist.empty() ? last - first + 2 : word_gap_threshold(hist).gap;

    std::vector<WordBlock> words;
    int word_start = first;
    int word_end = first;
    auto emit = [&](int x0, int x1) {
        WordBlock w;
        w.id = WordId{0, 0, static_cast<int>(words.size())};
        w.box = BoundingBox{line.band.left + x0, line.band.top, x1 - x0 + 1, line.band.height};
        w.bitmap = crop(img, w.box);
        w.line_ref = LineRef{line.top_line - line.band.top, line.x_line - line.band.top,
                             line.baseline - line.band.top, line.bottom_line - line.band.top};
        w.char_count = count_characters(w);
        words.push_back(std::move(w));
    };
    int x = first;
    while (x <= last) {
        if (columns.counts[x] > 0) {
            word_end = x;
            ++x;
            continue;
        }
        int gap_end = x;
        while (gap_end <= last && columns.counts[gap_end] == 0) ++gap_end;
        if (gap_end - x >= threshold) {
            emit(word_start, word_end);
            word_start = gap_end;
        }
        x = gap_end;
    }
    emit(word_start, word_end);
    return words;
}

struct PageSegmentation {
    std::vector<TextLine> lines;
    std::vector<std::vector<WordBlock>> words; // one list per line
};

/// Lines, then words per line, with word ids filled in.
inline PageSegmentation segment_page(const BinaryImage& img, int page_number = 0,
                                     const WordSegOptions& options = {}) {
    PageSegmentation seg;
    seg.lines = segment_lines(img);
    seg.words.reserve(seg.lines.size());
    for (size_t li = 0; li < seg.lines.size(); ++li) {
        auto words = segment_words(img, seg.lines[li], options);
        for (auto& w : words) {
            w.id.page = page_number;
            w.id.line = static_cast<int>(li);
        }
        seg.words.push_back(std::move(words));
    }
    return seg;
}

} // namespace wordspot
