#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <unistd.h>

#include "wordspot/index.hpp"
#include "wordspot/pnm.hpp"
#include "wordspot/ranking.hpp"
#include "wordspot/synthetic.hpp"

using namespace wordspot;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("wordspot_rank_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

MaterializedIndex index_of_page(const TempDir& dir, const SyntheticPageSpec& spec,
                                std::uint64_t seed = 0) {
    const SyntheticPage page = render_synthetic_page(spec, seed);
    const fs::path file = dir.path / "page.pbm";
    write_file_bytes(file, save_pnm(page.image));
    return materialize(build_index({file.string()}));
}

MatchScore row(double ssd, int mismatches, double tau, int char_delta, int id) {
    MatchScore s;
    s.candidate = {0, 0, id};
    s.ssd = ssd;
    s.shape_mismatches = mismatches;
    s.ulam_tau = tau;
    s.char_count_delta = char_delta;
    return s;
}

} // namespace

TEST_CASE("fuse_ranks sums competition ranks across descriptors") {
    std::vector<MatchScore> rows = {
        row(0.1, 2, 0.90, 0, 0), // ssd 1, shape 3, tau 2, chars 1 -> 7
        row(0.2, 0, 0.80, 1, 1), // ssd 2, shape 1, tau 3, chars 2 -> 8
        row(0.3, 1, 0.95, -2, 2), // ssd 3, shape 2, tau 1, chars 3 -> 9
    };
    fuse_ranks(rows);
    CHECK(rows[0].fused_rank == 1);
    CHECK(rows[1].fused_rank == 2);
    CHECK(rows[2].fused_rank == 3);
}

TEST_CASE("fuse_ranks shares competition ranks on ties") {
    std::vector<MatchScore> rows = {
        row(0.5, 1, 0.5, 1, 0),
        row(0.5, 1, 0.5, -1, 1), // ties row 0 on every descriptor
        row(0.9, 2, 0.1, 2, 2),
    };
    fuse_ranks(rows);
    // rows 0 and 1 share rank sums; candidate id breaks the tie
    CHECK(rows[0].fused_rank == 1);
    CHECK(rows[1].fused_rank == 2);
    CHECK(rows[2].fused_rank == 3);
}

TEST_CASE("fused ranks are a permutation") {
    std::vector<MatchScore> rows;
    std::mt19937_64 rng(19);
    for (int i = 0; i < 12; ++i)
        rows.push_back(row((rng() % 100) / 100.0, int(rng() % 4),
                           (rng() % 200) / 100.0 - 1.0, int(rng() % 5) - 2, i));
    fuse_ranks(rows);
    std::vector<int> seen(rows.size(), 0);
    for (const auto& r : rows) {
        REQUIRE(r.fused_rank >= 1);
        REQUIRE(r.fused_rank <= static_cast<int>(rows.size()));
        seen[r.fused_rank - 1] += 1;
    }
    for (int s : seen) REQUIRE(s == 1);
}

TEST_CASE("match_word ranks the query itself first") {
    TempDir dir;
    SyntheticPageSpec spec;
    spec.lines = {"some body onto", "them apt haze"};
    const MaterializedIndex index = index_of_page(dir, spec);
    REQUIRE(index.meta.words.size() == 6);

    const WordBlock query = index.block(1); // "body"
    const RankedMatches matches = match_word(query, index);
    REQUIRE_FALSE(matches.rows.empty());
    CHECK(matches.rows[0].candidate == WordId{0, 0, 1});
    CHECK(matches.rows[0].ssd == 0.0);
    CHECK(matches.rows[0].ulam_tau == 1.0);
    CHECK(matches.rows[0].width_delta == 0);
    CHECK(matches.rows[0].char_count_delta == 0);
    CHECK(matches.rows[0].fused_rank == 1);
    CHECK(matches.query == WordId{0, 0, 1});

    // ssd ordering is monotone in ssd
    for (std::size_t i = 1; i < matches.rows.size(); ++i)
        CHECK(matches.rows[i - 1].ssd <= matches.rows[i].ssd);
}

TEST_CASE("match_word respects the length filter and top_k") {
    TempDir dir;
    SyntheticPageSpec spec;
    spec.lines = {"on an up do go", "ab no us ye oh"};
    const MaterializedIndex index = index_of_page(dir, spec);

    const WordBlock query = index.block(0);
    MatchOptions options;
    options.top_k = 3;
    const RankedMatches matches = match_word(query, index, options);
    CHECK(matches.rows.size() == 3);

    options.top_k = 0; // keep everything
    const RankedMatches all = match_word(query, index, options);
    CHECK(all.rows.size() == index.meta.words.size()); // all two-glyph words pass

    options.tolerance = 0;
    const RankedMatches exact = match_word(query, index, options);
    for (const auto& r : exact.rows) CHECK(r.width_delta == 0);
}

TEST_CASE("match results are identical across job counts") {
    TempDir dir;
    SyntheticPageSpec spec;
    spec.lines = {"abated sueded unbent", "pomade untold zested"};
    const MaterializedIndex index = index_of_page(dir, spec);
    const WordBlock query = index.block(2);

    MatchOptions serial;
    serial.jobs = 1;
    serial.top_k = 0;
    MatchOptions parallel = serial;
    parallel.jobs = 4;
    const RankedMatches a = match_word(query, index, serial);
    const RankedMatches b = match_word(query, index, parallel);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) REQUIRE(a.rows[i] == b.rows[i]);
}

TEST_CASE("fused ordering sorts by fused rank") {
    TempDir dir;
    SyntheticPageSpec spec;
    spec.lines = {"anode anode spume", "claps anglo dough"};
    const MaterializedIndex index = index_of_page(dir, spec);
    const WordBlock query = index.block(0);

    MatchOptions options;
    options.ordering = Ordering::fused;
    options.top_k = 0;
    const RankedMatches matches = match_word(query, index, options);
    CHECK(matches.ordering == Ordering::fused);
    for (std::size_t i = 0; i < matches.rows.size(); ++i)
        CHECK(matches.rows[i].fused_rank == static_cast<int>(i) + 1);
}

TEST_CASE("tsv output has one row per match") {
    RankedMatches matches;
    matches.query = {0, 1, 2};
    MatchScore s = row(0.25, 1, 0.5, -1, 3);
    s.width_delta = -4;
    s.fused_rank = 1;
    matches.rows.push_back(s);
    const std::string tsv = to_tsv(matches);
    CHECK(tsv ==
          "rank\tword\twidth_delta\tssd\tshape_mismatches\tulam_tau\tchar_count_delta\t"
          "fused_rank\n"
          "1\t0:0:3\t-4\t0.250000\t1\t0.500000\t-1\t1\n");
    CHECK(format_word_id({4, 5, 6}) == "4:5:6");
}
