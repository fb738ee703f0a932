#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wordspot/image.hpp"
#include "wordspot/matchers.hpp"
#include "wordspot/word_segmentation.hpp"

namespace wordspot {

// Ranks of a window's intensities, stored in raster order.
struct RankMatrix {
    int width = 0;
    int height = 0;
    std::vector<int> ranks; // permutation of 1..n

    int n() const { return width * height; }
    bool operator==(const RankMatrix&) const = default;
};

namespace detail {

inline RankMatrix rank_values(std::vector<int> values, int width, int height) {
    if (values.empty()) throw std::invalid_argument("rank_window: empty window");
    const int n = static_cast<int>(values.size());
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    // ties resolved by raster position: stable sort on intensity alone
    std::stable_sort(order.begin(), order.end(),
                     [&values](int a, int b) { return values[a] < values[b]; });
    RankMatrix out;
    out.width = width;
    out.height = height;
    out.ranks.resize(values.size());
    for (int r = 0; r < n; ++r) out.ranks[order[r]] = r + 1;
    return out;
}

} // namespace detail

/// Ranks 1..n by ascending intensity; equal intensities are ranked in
/// raster order (row-major, top-left first).
inline RankMatrix rank_window(const GrayImage& window) {
    return detail::rank_values(std::vector<int>(window.pixels.begin(), window.pixels.end()),
                               window.width, window.height);
}

inline RankMatrix rank_window(const BinaryImage& window) {
    return detail::rank_values(std::vector<int>(window.pixels.begin(), window.pixels.end()),
                               window.width, window.height);
}

/// s[i] = rank in the second window of the pixel holding rank i+1 in the
/// first (1-based values).
inline std::vector<int> composition_permutation(const RankMatrix& p1, const RankMatrix& p2) {
    if (p1.n() != p2.n()) throw std::invalid_argument("composition_permutation: size mismatch");
    std::vector<int> s(p1.ranks.size());
    for (size_t pos = 0; pos < p1.ranks.size(); ++pos) s[p1.ranks[pos] - 1] = p2.ranks[pos];
    return s;
}

/// Longest strictly increasing subsequence via patience sorting.
inline int lis_length(const std::vector<int>& s) {
    std::vector<int> tails;
    tails.reserve(s.size());
    for (int v : s) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

struct UlamResult {
    int n = 0;
    std::vector<int> s;
    int delta1 = 0;
    int delta2 = 0;
    double tau_u = 0.0;
    double tau_r = 0.0;
    double tau = 0.0;
};

namespace detail {

inline UlamResult ulam_from_ranks(const RankMatrix& p1, const RankMatrix& p2) {
    UlamResult res;
    res.n = p1.n();
    if (res.n < 2) throw std::invalid_argument("ulam_tau: window must have at least 2 pixels");
    res.s = composition_permutation(p1, p2);
    std::vector<int> reversed(res.s.rbegin(), res.s.rend());
    res.delta1 = res.n - lis_length(res.s);
    res.delta2 = res.n - lis_length(reversed);
    res.tau_u = 1.0 - 2.0 * res.delta1 / (res.n - 1);
    res.tau_r = 1.0 - 2.0 * res.delta2 / (res.n - 1);
    res.tau = (res.tau_u - res.tau_r) / 2.0;
    return res;
}

} // namespace detail

/// Ordinal correlation of two same-sized windows: distance of the
/// composition permutation from the identity and from its reverse,
/// folded into tau in [-1, 1].
template <typename ImageT>
inline UlamResult ulam_tau(const ImageT& w1, const ImageT& w2) {
    if (w1.width != w2.width || w1.height != w2.height)
        throw std::invalid_argument("ulam_tau: windows must share dimensions");
    return detail::ulam_from_ranks(rank_window(w1), rank_window(w2));
}

struct UlamCaps {
    int max_rows = 64;
    int max_cols = 256;
};

struct WordTau {
    double tau = 0.0;
    bool downsampled = false;
};

/// Tau over a whole aligned frame treated as one window. Frames beyond
/// the cap are sampled on a uniform stride and the result is flagged.
inline WordTau ulam_word_similarity(const BinaryImage& a, const BinaryImage& b,
                                    const UlamCaps& caps = {}) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("ulam_word_similarity: blocks must share a frame");
    WordTau out;
    const int row_stride = (a.height + caps.max_rows - 1) / caps.max_rows;
    const int col_stride = (a.width + caps.max_cols - 1) / caps.max_cols;
    if (row_stride > 1 || col_stride > 1) {
        out.downsampled = true;
        const int h = (a.height + row_stride - 1) / row_stride;
        const int w = (a.width + col_stride - 1) / col_stride;
        BinaryImage sa(w, h), sb(w, h);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                sa.set(x, y, a.get(x * col_stride, y * row_stride));
                sb.set(x, y, b.get(x * col_stride, y * row_stride));
            }
        out.tau = ulam_tau(sa, sb).tau;
    } else {
        out.tau = ulam_tau(a, b).tau;
    }
    return out;
}

inline WordTau ulam_word_similarity(const WordBlock& a, const WordBlock& b,
                                    const UlamCaps& caps = {}) {
    const AlignedPair aligned = align_blocks(a, b);
    return ulam_word_similarity(aligned.a, aligned.b, caps);
}

} // namespace wordspot
