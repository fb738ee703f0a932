#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "wordspot/image.hpp"

namespace wordspot {

enum class ProfileAxis { horizontal, vertical };

/// Projection profile: one foreground-pixel count per row (horizontal)
/// or per column (vertical).
struct Profile {
    ProfileAxis axis = ProfileAxis::horizontal;
    std::vector<int> counts;

    bool operator==(const Profile&) const = default;
};

inline Profile horizontal_profile(const BinaryImage& img) {
    Profile p{ProfileAxis::horizontal, std::vector<int>(static_cast<std::size_t>(img.height), 0)};
    for (int y = 0; y < img.height; ++y) {
        int n = 0;
        for (int x = 0; x < img.width; ++x) n += img.get(x, y);
        p.counts[y] = n;
    }
    return p;
}

inline Profile vertical_profile(const BinaryImage& img) {
    Profile p{ProfileAxis::vertical, std::vector<int>(static_cast<std::size_t>(img.width), 0)};
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            p.counts[x] += img.get(x, y);
    return p;
}

/// Mean value of pixels per line: the arithmetic mean of the profile.
inline double mvpl(const Profile& profile) {
    if (profile.counts.empty())
        throw std::invalid_argument("mvpl of empty profile");
    double sum = 0.0;
    for (int c : profile.counts) sum += c;
    return sum / static_cast<double>(profile.counts.size());
}

/// Histogram of blank-run lengths between the first and last inked positions.
struct GapHistogram {
    std::map<int, int> bins; // run length -> occurrence count
    double mean_gap = 0.0;

    bool empty() const { return bins.empty(); }
    int min_gap() const { return bins.begin()->first; }
    int max_gap() const { return bins.rbegin()->first; }
    int count(int length) const {
        auto it = bins.find(length);
        return it == bins.end() ? 0 : it->second;
    }
};

/// Maximal zero runs strictly between the first and last nonzero positions;
/// leading and trailing margins are excluded.
inline GapHistogram gap_histogram(const Profile& profile) {
    GapHistogram hist;
    const auto& c = profile.counts;
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] > 0) {
            if (first < 0) first = i;
            last = i;
        }
    }
    if (first < 0 || first == last) return hist; // fewer than two inked positions

    long total = 0, runs = 0;
    int run = 0;
    for (int i = first; i <= last; ++i) {
        if (c[i] == 0) {
            ++run;
        } else if (run > 0) {
            ++hist.bins[run];
            total += run;
            ++runs;
            run = 0;
        }
    }
    if (runs > 0) hist.mean_gap = static_cast<double>(total) / static_cast<double>(runs);
    return hist;
}

} // namespace wordspot
