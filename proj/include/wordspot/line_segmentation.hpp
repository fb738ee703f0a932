#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wordspot/image.hpp"
#include "wordspot/profile.hpp"

namespace wordspot {

struct LineCandidate {
    int first_row = 0;
    int last_row = 0;

    int height() const { return last_row - first_row + 1; }
    bool operator==(const LineCandidate&) const = default;
};

struct TextLine {
    BoundingBox band;      // full page width
    int top_line = 0;      // row indices, absolute
    int x_line = 0;
    int baseline = 0;
    int bottom_line = 0;
    double k = 0.0;

    bool operator==(const TextLine&) const = default;
};

/// Maximal runs of rows whose count is >= threshold, top to bottom.
/// A row at exactly the threshold counts as full.
inline std::vector<LineCandidate> detect_bands(const Profile& profile, double threshold) {
    if (threshold < 0.0) throw std::invalid_argument("detect_bands: negative threshold");
    std::vector<LineCandidate> bands;
    const int n = static_cast<int>(profile.counts.size());
    int start = -1;
    for (int i = 0; i <= n; ++i) {
        const bool full = i < n && static_cast<double>(profile.counts[i]) >= threshold;
        if (full && start < 0) start = i;
        if (!full && start >= 0) {
            bands.push_back({start, i - 1});
            start = -1;
        }
    }
    return bands;
}

struct HeightVote {
    double representative = 0.0;
    std::vector<LineCandidate> kept;
    std::vector<LineCandidate> discarded;
};

/// Clusters candidate heights (neighbors within 25% of the larger belong
/// together), elects the largest cluster (ties go to the cluster with the
/// larger total height) and discards candidates whose height differs from
/// the cluster median by more than 50%.
inline HeightVote vote_heights(const std::vector<LineCandidate>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("vote_heights: no candidates");

    std::vector<int> heights;
    heights.reserve(candidates.size());
    for (const auto& c : candidates) heights.push_back(c.height());
    std::sort(heights.begin(), heights.end());

    struct Cluster {
        int begin, end; // indices into heights
        long total;
    };
    std::vector<Cluster> clusters;
    int begin = 0;
    long total = heights[0];
    for (int i = 1; i <= static_cast<int>(heights.size()); ++i) {
        const bool adjacent = i < static_cast<int>(heights.size()) &&
                              heights[i] - heights[i - 1] <= 0.25 * heights[i];
        if (adjacent) {
            total += heights[i];
            continue;
        }
        clusters.push_back({begin, i, total});
        if (i < static_cast<int>(heights.size())) {
            begin = i;
            total = heights[i];
        }
    }
    const Cluster* best = &clusters[0];
    for (const auto& c : clusters) {
        const int size = c.end - c.begin;
        const int best_size = best->end - best->begin;
        if (size > best_size || (size == best_size && c.total > best->total)) best = &c;
    }
    const int m = best->end - best->begin;
    const double representative =
        m % 2 ? heights[best->begin + m / 2]
              : (heights[best->begin + m / 2 - 1] + heights[best->begin + m / 2]) / 2.0;

    HeightVote vote;
    vote.representative = representative;
    for (const auto& c : candidates) {
        if (std::abs(c.height() - representative) / representative > 0.5)
            vote.discarded.push_back(c);
        else
            vote.kept.push_back(c);
    }
    return vote;
}

/// Estimates the four reference rows of a band. The x-line is the first
/// band row whose count reaches the band's own mean, the baseline the
/// last; top and bottom follow at distance k, clamped to the band. Bands
/// too short to separate the two lines fall back to k = height / 3.
inline TextLine estimate_reference_lines(const BinaryImage& img, const LineCandidate& band) {
    if (band.first_row < 0 || band.last_row >= img.height || band.first_row > band.last_row)
        throw std::invalid_argument("estimate_reference_lines: band out of range");

    TextLine line;
    line.band = BoundingBox{0, band.first_row, img.width, band.height()};

    const int h = band.height();
    auto degenerate = [&] {
        line.k = h / 3.0;
        line.top_line = band.first_row;
        line.x_line = band.first_row;
        line.baseline = h > 1 ? band.last_row : band.first_row + 1;
        line.bottom_line = line.baseline;
        return line;
    };
    if (h < 4) return degenerate();

    std::vector<int> counts(static_cast<size_t>(h), 0);
    for (int r = 0; r < h; ++r)
        for (int x = 0; x < img.width; ++x)
            counts[r] += img.get(x, band.first_row + r) ? 1 : 0;
    double mean = 0.0;
    for (int c : counts) mean += c;
    mean /= h;

    int x_rel = -1, base_rel = -1;
    for (int r = 0; r < h; ++r) {
        if (counts[r] >= mean) {
            if (x_rel < 0) x_rel = r;
            base_rel = r;
        }
    }
    if (x_rel < 0 || base_rel <= x_rel) return degenerate();

    line.x_line = band.first_row + x_rel;
    line.baseline = band.first_row + base_rel;
    line.k = static_cast<double>(base_rel - x_rel);
    const int k = base_rel - x_rel;
    line.top_line = std::max(band.first_row, line.x_line - k);
    line.bottom_line = std::min(band.last_row, line.baseline + k);
    return line;
}

namespace detail {

inline bool range_has_ink(const Profile& profile, int first, int last) {
    for (int r = first; r <= last; ++r)
        if (profile.counts[r] > 0) return true;
    return false;
}

inline Profile slice_profile(const Profile& profile, int first, int last) {
    Profile out;
    out.axis = profile.axis;
    out.counts.assign(profile.counts.begin() + first, profile.counts.begin() + last + 1);
    return out;
}

// Re-runs detection inside a gap region with a locally recomputed mean.
// Recovered bands must be height-compatible with the page-level
// representative, which keeps ascender tips, descender tips and stray
// specks in the gaps from turning into line candidates.
inline void recover_lines(const Profile& profile, int first, int last, double page_mvpl,
                          double representative, int depth,
                          std::vector<LineCandidate>& accepted) {
    if (depth > 2) return;
    if (last - first + 1 <= representative / 2.0) return;
    if (!range_has_ink(profile, first, last)) return;

    const Profile local = slice_profile(profile, first, last);
    const double threshold = std::max(mvpl(local), page_mvpl / 4.0);
    const auto bands = detect_bands(local, threshold);

    int gap_start = first;
    for (const auto& b : bands) {
        const LineCandidate abs_band{first + b.first_row, first + b.last_row};
        if (std::abs(abs_band.height() - representative) / representative <= 0.5)
            accepted.push_back(abs_band);
        if (abs_band.first_row > gap_start)
            recover_lines(profile, gap_start, abs_band.first_row - 1, page_mvpl,
                          representative, depth + 1, accepted);
        gap_start = abs_band.last_row + 1;
    }
    if (gap_start <= last)
        recover_lines(profile, gap_start, last, page_mvpl, representative, depth + 1, accepted);
}

// Extends a band through adjacent rows that still carry ink, by at most
// its own height per side and never past the midpoint to a neighbor, so
// ascender and descender tips end up inside the band they belong to.
inline LineCandidate grow_band(const Profile& profile, const LineCandidate& band, int up_limit,
                               int down_limit) {
    const int reach = band.height();
    LineCandidate grown = band;
    while (grown.first_row > up_limit && band.first_row - grown.first_row < reach &&
           profile.counts[grown.first_row - 1] > 0)
        --grown.first_row;
    while (grown.last_row < down_limit && grown.last_row - band.last_row < reach &&
           profile.counts[grown.last_row + 1] > 0)
        ++grown.last_row;
    return grown;
}

} // namespace detail

/// Full line-extraction pipeline: threshold the page profile at its mean,
/// re-run detection inside gap regions that could hide a shorter line,
/// discard height outliers by vote, absorb adjacent ink tips into each
/// surviving band and estimate its reference rows.
inline std::vector<TextLine> segment_lines(const BinaryImage& img) {
    const Profile profile = horizontal_profile(img);
    if (img.foreground_count() == 0) return {};

    const double page_mvpl = mvpl(profile);
    std::vector<LineCandidate> candidates = detect_bands(profile, page_mvpl);
    if (candidates.empty()) return {};

    const double representative = vote_heights(candidates).representative;

    std::vector<LineCandidate> recovered;
    int gap_start = 0;
    for (const auto& band : candidates) {
        if (band.first_row > gap_start)
            detail::recover_lines(profile, gap_start, band.first_row - 1, page_mvpl,
                                  representative, 1, recovered);
        gap_start = band.last_row + 1;
    }
    if (gap_start < img.height)
        detail::recover_lines(profile, gap_start, img.height - 1, page_mvpl, representative, 1,
                              recovered);
    candidates.insert(candidates.end(), recovered.begin(), recovered.end());
    std::sort(candidates.begin(), candidates.end(),
              [](const LineCandidate& a, const LineCandidate& b) {
                  return a.first_row < b.first_row;
              });

    std::vector<LineCandidate> kept = vote_heights(candidates).kept;
    if (kept.empty()) return {};

    std::vector<TextLine> lines;
    lines.reserve(kept.size());
    for (size_t i = 0; i < kept.size(); ++i) {
        const int up_limit =
            i == 0 ? 0 : kept[i].first_row - (kept[i].first_row - kept[i - 1].last_row - 1) / 2;
        const int down_limit =
            i + 1 == kept.size()
                ? img.height - 1
                : kept[i].last_row + (kept[i + 1].first_row - kept[i].last_row - 1) / 2;
        const LineCandidate grown = detail::grow_band(profile, kept[i], up_limit, down_limit);
        lines.push_back(estimate_reference_lines(img, grown));
    }
    return lines;
}

} // namespace wordspot
