#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "wordspot/image.hpp"
#include "wordspot/shape_code.hpp"
#include "wordspot/word_segmentation.hpp"

namespace wordspot {

// Score for pairs where one side is blank and the similarity formula is
// undefined; large enough to rank last yet finite for serialization.
inline constexpr double max_dissimilar = 1e9;

inline constexpr int default_tolerance = 10;
inline constexpr int default_dpi = 300;

/// The +-10 px tolerance holds at 300 dpi and scales proportionally.
inline int scaled_tolerance(int dpi, int base_tolerance = default_tolerance) {
    if (dpi <= 0) throw std::invalid_argument("scaled_tolerance: dpi must be positive");
    return static_cast<int>(std::lround(base_tolerance * (dpi / 300.0)));
}

inline bool length_filter(int query_width, int candidate_width, int tolerance) {
    if (query_width < 1 || candidate_width < 1)
        throw std::invalid_argument("length_filter: widths must be positive");
    if (tolerance < 0) throw std::invalid_argument("length_filter: negative tolerance");
    return std::abs(query_width - candidate_width) <= tolerance;
}

struct AlignedPair {
    BinaryImage a;
    BinaryImage b;
    int baseline = 0; // common baseline row in the shared frame
};

/// Copies both blocks into one frame with their left edges and baseline
/// rows coincident; uncovered pixels stay background.
inline AlignedPair align_blocks(const WordBlock& a, const WordBlock& b) {
    const int baseline = std::max(a.line_ref.baseline, b.line_ref.baseline);
    const int height = std::max(baseline + a.bitmap.height - a.line_ref.baseline,
                                baseline + b.bitmap.height - b.line_ref.baseline);
    const int width = std::max(a.bitmap.width, b.bitmap.width);

    AlignedPair out{BinaryImage(width, height), BinaryImage(width, height), baseline};
    auto place = [](const BinaryImage& src, BinaryImage& dst, int row_offset) {
        for (int y = 0; y < src.height; ++y)
            for (int x = 0; x < src.width; ++x)
                if (src.get(x, y)) dst.set(x, y + row_offset, true);
    };
    place(a.bitmap, out.a, baseline - a.line_ref.baseline);
    place(b.bitmap, out.b, baseline - b.line_ref.baseline);
    return out;
}

/// Normalized squared difference over a common frame; 0 for identical
/// blocks, smaller is more similar. Blank-vs-blank compares equal; a
/// single blank side scores max_dissimilar.
inline double ssd(const BinaryImage& a, const BinaryImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("ssd: blocks must share a frame");
    const long fg_a = a.foreground_count();
    const long fg_b = b.foreground_count();
    if (fg_a == 0 && fg_b == 0) return 0.0;
    if (fg_a == 0 || fg_b == 0) return max_dissimilar;
    long differing = 0;
    for (size_t i = 0; i < a.pixels.size(); ++i)
        if (a.pixels[i] != b.pixels[i]) ++differing;
    return differing / std::sqrt(static_cast<double>(fg_a) * static_cast<double>(fg_b));
}

enum class ZonePriority { ascender, descender };

struct ShapeCodeOptions {
    int sector_width = default_sector_width;
    int min_ink = 1; // pixels of zone ink required to mark a sector
    ZonePriority priority = ZonePriority::ascender;
};

/// Codes each sector 'A' when it has ink above the x-line, 'D' when it
/// has ink below the baseline, 'x' otherwise. A sector with both kinds
/// takes the configured priority.
inline ShapeCode shape_code(const WordBlock& word, const ShapeCodeOptions& options = {}) {
    if (options.sector_width < 1)
        throw std::invalid_argument("shape_code: sector width must be positive");
    const int sectors = (word.bitmap.width + options.sector_width - 1) / options.sector_width;
    ShapeCode code;
    code.sector_width = options.sector_width;
    code.sectors.reserve(static_cast<size_t>(sectors));
    for (int s = 0; s < sectors; ++s) {
        const int x0 = s * options.sector_width;
        const int x1 = std::min(word.bitmap.width, x0 + options.sector_width);
        int above = 0, below = 0;
        for (int x = x0; x < x1; ++x) {
            for (int y = 0; y < word.bitmap.height; ++y) {
                if (!word.bitmap.get(x, y)) continue;
                if (y < word.line_ref.x_line) ++above;
                if (y > word.line_ref.baseline) ++below;
            }
        }
        const bool asc = above >= options.min_ink;
        const bool desc = below >= options.min_ink;
        char c = 'x';
        if (asc && desc)
            c = options.priority == ZonePriority::ascender ? 'A' : 'D';
        else if (asc)
            c = 'A';
        else if (desc)
            c = 'D';
        code.sectors.push_back(c);
    }
    return code;
}

} // namespace wordspot
