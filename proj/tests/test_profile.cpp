#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "wordspot/profile.hpp"

using namespace wordspot;

namespace {

BinaryImage sample_image() {
    // 6x4, ink marked #:
    //  .##...
    //  .##..#
    //  ......
    //  #.....
    BinaryImage img(6, 4);
    img.set(1, 0, true);
    img.set(2, 0, true);
    img.set(1, 1, true);
    img.set(2, 1, true);
    img.set(5, 1, true);
    img.set(0, 3, true);
    return img;
}

} // namespace

TEST_CASE("projection profiles count ink per row and column") {
    const BinaryImage img = sample_image();
    const Profile rows = horizontal_profile(img);
    CHECK(rows.axis == ProfileAxis::horizontal);
    CHECK(rows.counts == std::vector<int>{2, 3, 0, 1});

    const Profile cols = vertical_profile(img);
    CHECK(cols.axis == ProfileAxis::vertical);
    CHECK(cols.counts == std::vector<int>{1, 2, 2, 0, 0, 1});
}

TEST_CASE("profiles sum to the foreground count and transpose swaps them") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        BinaryImage img(1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 12));
        for (auto& p : img.pixels) p = rng() % 3 == 0;
        const Profile rows = horizontal_profile(img);
        const Profile cols = vertical_profile(img);
        const long fg = img.foreground_count();
        CHECK(std::accumulate(rows.counts.begin(), rows.counts.end(), 0L) == fg);
        CHECK(std::accumulate(cols.counts.begin(), cols.counts.end(), 0L) == fg);
        CHECK(horizontal_profile(transpose(img)).counts == cols.counts);
    }
}

TEST_CASE("mvpl is the profile mean") {
    Profile p{ProfileAxis::horizontal, {2, 3, 0, 1}};
    CHECK(mvpl(p) == Catch::Approx(1.5));
    CHECK_THROWS_AS(mvpl(Profile{}), std::invalid_argument);
}

TEST_CASE("gap histogram collects internal blank runs only") {
    // counts: margin, ink, gap 2, ink, gap 1, ink, margin margin
    Profile p{ProfileAxis::vertical, {0, 3, 0, 0, 1, 0, 2, 0, 0}};
    const GapHistogram hist = gap_histogram(p);
    REQUIRE_FALSE(hist.empty());
    CHECK(hist.count(1) == 1);
    CHECK(hist.count(2) == 1);
    CHECK(hist.count(3) == 0);
    CHECK(hist.min_gap() == 1);
    CHECK(hist.max_gap() == 2);
    CHECK(hist.mean_gap == Catch::Approx(1.5));
}

TEST_CASE("gap histogram is empty without two separated ink runs") {
    CHECK(gap_histogram(Profile{ProfileAxis::vertical, {0, 0, 0}}).empty());
    CHECK(gap_histogram(Profile{ProfileAxis::vertical, {0, 5, 0}}).empty());
    CHECK(gap_histogram(Profile{ProfileAxis::vertical, {1, 2, 3}}).empty()); // no gaps
    CHECK(gap_histogram(Profile{}).empty());
}

TEST_CASE("gap histogram properties on random profiles") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Profile p{ProfileAxis::vertical, {}};
        const int n = 2 + static_cast<int>(rng() % 40);
        for (int i = 0; i < n; ++i) p.counts.push_back(rng() % 3 == 0 ? 0 : 1 + int(rng() % 4));
        const GapHistogram hist = gap_histogram(p);
        if (hist.empty()) continue;
        long total = 0, runs = 0;
        for (const auto& [len, count] : hist.bins) {
            REQUIRE(len >= 1);
            REQUIRE(count >= 1);
            total += static_cast<long>(len) * count;
            runs += count;
        }
        REQUIRE(hist.mean_gap >= hist.min_gap());
        REQUIRE(hist.mean_gap <= hist.max_gap());
        REQUIRE(hist.mean_gap == Catch::Approx(double(total) / double(runs)));
    }
}
