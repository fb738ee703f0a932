#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

// Exponential-time LIS: tries every subsequence. Only sane for n <= ~20.
inline int lis_bruteforce(const std::vector<int>& s) {
    const std::size_t n = s.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int last = 0, len = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            if (len > 0 && s[i] <= last) ok = false;
            last = s[i];
            ++len;
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

// Quadratic DP LIS, the classic formulation.
inline int lis_quadratic(const std::vector<int>& s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    std::vector<int> len(n, 1);
    int best = 1;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (s[j] < s[i]) len[i] = std::max(len[i], len[j] + 1);
        best = std::max(best, len[i]);
    }
    return best;
}

// Ranks by counting: rank of element i = number of strictly smaller elements
// plus number of equal elements at earlier positions, plus one.
template <typename T>
std::vector<int> ranks_by_counting(const std::vector<T>& values) {
    const std::size_t n = values.size();
    std::vector<int> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
        int r = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (values[j] < values[i]) ++r;
            else if (values[j] == values[i] && j < i) ++r;
        }
        ranks[i] = r;
    }
    return ranks;
}

struct UlamOracle {
    int delta1 = 0;
    int delta2 = 0;
    double tau_u = 0.0;
    double tau_r = 0.0;
    double tau = 0.0;
};

// Independent Ulam computation from two rank sequences over the same raster.
inline UlamOracle ulam_oracle(const std::vector<int>& p1, const std::vector<int>& p2) {
    const int n = static_cast<int>(p1.size());
    std::vector<int> s(n);
    for (int pos = 0; pos < n; ++pos) s[p1[pos] - 1] = p2[pos];
    std::vector<int> rev(s.rbegin(), s.rend());
    UlamOracle out;
    out.delta1 = n - lis_quadratic(s);
    out.delta2 = n - lis_quadratic(rev);
    out.tau_u = 1.0 - 2.0 * out.delta1 / (n - 1);
    out.tau_r = 1.0 - 2.0 * out.delta2 / (n - 1);
    out.tau = (out.tau_u - out.tau_r) / 2.0;
    return out;
}

// Exhaustive Otsu: recompute both class statistics from scratch for every
// cut t, where class 0 holds intensities strictly below t.
inline int otsu_bruteforce(const std::vector<std::uint8_t>& pixels) {
    double best_var = -1.0;
    int best_t = 0;
    const double total = static_cast<double>(pixels.size());
    for (int t = 0; t < 256; ++t) {
        double n0 = 0, n1 = 0, sum0 = 0, sum1 = 0;
        for (std::uint8_t p : pixels) {
            if (p < t) { n0 += 1; sum0 += p; }
            else { n1 += 1; sum1 += p; }
        }
        if (n0 == 0 || n1 == 0) continue;
        const double m0 = sum0 / n0, m1 = sum1 / n1;
        const double var = (n0 / total) * (n1 / total) * (m0 - m1) * (m0 - m1);
        if (var > best_var + 1e-12) { best_var = var; best_t = t; }
    }
    return best_t;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

} // namespace oracles
