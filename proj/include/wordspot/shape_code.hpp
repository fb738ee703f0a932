#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

namespace wordspot {

inline constexpr int default_sector_width = 15;

// Per-sector word signature over the alphabet {A, x, D}: ascender ink,
// x-height-only ink, descender ink.
struct ShapeCode {
    std::string sectors;
    int sector_width = default_sector_width;

    bool operator==(const ShapeCode&) const = default;
};

/// Positionwise mismatches over the shorter code plus the length
/// difference (Hamming distance with a length penalty).
inline int shape_mismatch(const ShapeCode& a, const ShapeCode& b) {
    const size_t common = std::min(a.sectors.size(), b.sectors.size());
    int mismatches = 0;
    for (size_t i = 0; i < common; ++i)
        if (a.sectors[i] != b.sectors[i]) ++mismatches;
    return mismatches +
           std::abs(static_cast<int>(a.sectors.size()) - static_cast<int>(b.sectors.size()));
}

} // namespace wordspot
