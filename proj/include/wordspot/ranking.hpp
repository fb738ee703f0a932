#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "wordspot/index.hpp"
#include "wordspot/matchers.hpp"
#include "wordspot/parallel.hpp"
#include "wordspot/ulam.hpp"
#include "wordspot/word_segmentation.hpp"

namespace wordspot {

struct MatchScore {
    WordId candidate;
    int width_delta = 0; // candidate minus query
    double ssd = 0.0;
    int shape_mismatches = 0;
    double ulam_tau = 0.0;
    int char_count_delta = 0; // candidate minus query
    int fused_rank = 0;

    bool operator==(const MatchScore&) const = default;
};

enum class Ordering { ssd, fused };

struct RankedMatches {
    WordId query;
    Ordering ordering = Ordering::ssd;
    std::vector<MatchScore> rows;
};

/// Borda fusion: each descriptor contributes its competition rank (ties
/// share the better rank); rows are then ranked by rank sum, ties broken
/// by candidate id. fused_rank is the 1-based position in that order.
inline void fuse_ranks(std::vector<MatchScore>& rows) {
    const std::size_t m = rows.size();
    std::vector<long> sums(m, 0);
    auto add_ranks = [&](auto better) {
        for (std::size_t i = 0; i < m; ++i) {
            long rank = 1;
            for (std::size_t j = 0; j < m; ++j)
                if (better(rows[j], rows[i])) ++rank;
            sums[i] += rank;
        }
    };
    add_ranks([](const MatchScore& a, const MatchScore& b) { return a.ssd < b.ssd; });
    add_ranks([](const MatchScore& a, const MatchScore& b) {
        return a.shape_mismatches < b.shape_mismatches;
    });
    add_ranks([](const MatchScore& a, const MatchScore& b) { return a.ulam_tau > b.ulam_tau; });
    add_ranks([](const MatchScore& a, const MatchScore& b) {
        return std::abs(a.char_count_delta) < std::abs(b.char_count_delta);
    });

    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sums[a] != sums[b]) return sums[a] < sums[b];
        return rows[a].candidate < rows[b].candidate;
    });
    for (std::size_t pos = 0; pos < m; ++pos) rows[order[pos]].fused_rank =
        static_cast<int>(pos) + 1;
}

struct MatchOptions {
    int top_k = 10; // non-positive keeps every row
    Ordering ordering = Ordering::ssd;
    int tolerance = default_tolerance;
    int dpi = default_dpi;
    int jobs = 1;
    UlamCaps caps;
};

/// Scores every length-filter survivor against the query on all four
/// descriptors, fuses ranks over the full survivor set, then orders and
/// truncates. Results are independent of the job count.
inline RankedMatches match_word(const WordBlock& query, const MaterializedIndex& index,
                                const MatchOptions& options = {}) {
    RankedMatches result;
    result.query = query.id;
    result.ordering = options.ordering;

    const int tolerance = scaled_tolerance(options.dpi, options.tolerance);
    std::vector<std::size_t> survivors;
    for (std::size_t i = 0; i < index.meta.words.size(); ++i)
        if (length_filter(query.width(), index.meta.words[i].width(), tolerance))
            survivors.push_back(i);

    std::vector<MatchScore> rows(survivors.size());
    parallel_for(survivors.size(), options.jobs, [&](std::size_t k) {
        const WordBlock candidate = index.block(survivors[k]);
        MatchScore score;
        score.candidate = candidate.id;
        score.width_delta = candidate.width() - query.width();
        const AlignedPair aligned = align_blocks(query, candidate);
        score.ssd = ssd(aligned.a, aligned.b);
        score.shape_mismatches = shape_mismatch(query.shape_code, candidate.shape_code);
        score.ulam_tau = ulam_word_similarity(aligned.a, aligned.b, options.caps).tau;
        score.char_count_delta = candidate.char_count - query.char_count;
        rows[k] = std::move(score);
    });

    fuse_ranks(rows);
    if (options.ordering == Ordering::fused) {
        std::sort(rows.begin(), rows.end(),
                  [](const MatchScore& a, const MatchScore& b) {
                      return a.fused_rank < b.fused_rank;
                  });
    } else {
        std::sort(rows.begin(), rows.end(), [](const MatchScore& a, const MatchScore& b) {
            if (a.ssd != b.ssd) return a.ssd < b.ssd;
            return a.candidate < b.candidate;
        });
    }
    if (options.top_k > 0 && rows.size() > static_cast<std::size_t>(options.top_k))
        rows.resize(static_cast<std::size_t>(options.top_k));
    result.rows = std::move(rows);
    return result;
}

inline std::string format_word_id(const WordId& id) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d:%d:%d", id.page, id.line, id.position);
    return buf;
}

/// One row per match: rank, id and the four descriptor scores, mirroring
/// the result tables.
inline std::string to_tsv(const RankedMatches& matches) {
    std::string out =
        "rank\tword\twidth_delta\tssd\tshape_mismatches\tulam_tau\tchar_count_delta\tfused_rank\n";
    char buf[256];
    for (std::size_t i = 0; i < matches.rows.size(); ++i) {
        const MatchScore& row = matches.rows[i];
        std::snprintf(buf, sizeof buf, "%zu\t%s\t%d\t%.6f\t%d\t%.6f\t%d\t%d\n", i + 1,
                      format_word_id(row.candidate).c_str(), row.width_delta, row.ssd,
                      row.shape_mismatches, row.ulam_tau, row.char_count_delta, row.fused_rank);
        out += buf;
    }
    return out;
}

} // namespace wordspot
