#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qlc/error.hpp"
#include "qlc/stats.hpp"
#include "test_util.hpp"

using namespace qlc;

TEST_CASE("build_histogram counts every byte") {
    SUBCASE("empty") {
        const auto h = build_histogram({});
        CHECK(h.total == 0);
        CHECK(std::all_of(h.counts.begin(), h.counts.end(), [](auto c) { return c == 0; }));
    }
    SUBCASE("each value once") {
        std::vector<std::uint8_t> data(256);
        std::iota(data.begin(), data.end(), std::uint8_t{0});
        const auto h = build_histogram(data);
        CHECK(h.total == 256);
        CHECK(std::all_of(h.counts.begin(), h.counts.end(), [](auto c) { return c == 1; }));
    }
    SUBCASE("direct count") {
        const std::vector<std::uint8_t> data{7, 7, 7, 0};
        const auto h = build_histogram(data);
        CHECK(h.counts[7] == 3);
        CHECK(h.counts[0] == 1);
        CHECK(h.total == 4);
    }
    SUBCASE("total matches length and the sum of counts") {
        std::mt19937_64 rng(11);
        for (std::size_t n : {1u, 3u, 5u, 1000u, 4097u}) {
            const auto data = testutil::random_bytes(rng, n);
            const auto h = build_histogram(data);
            CHECK(h.total == n);
            CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}) == n);
        }
    }
}

TEST_CASE("to_pmf") {
    Histogram256 h;
    h.counts[7] = 3;
    h.counts[0] = 1;
    h.total = 4;
    auto p = to_pmf(h);
    CHECK(p.probs[7] == 0.75);
    CHECK(p.probs[0] == 0.25);

    Histogram256 uniform;
    uniform.counts.fill(1);
    uniform.total = 256;
    p = to_pmf(uniform);
    CHECK(std::all_of(p.probs.begin(), p.probs.end(), [](double x) { return x == 1.0 / 256; }));

    Histogram256 point;
    point.counts[0] = 1;
    point.total = 1;
    CHECK(to_pmf(point).probs[0] == 1.0);

    try {
        (void)to_pmf(Histogram256{});
        FAIL("expected ZeroTotal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroTotal);
    }
}

TEST_CASE("to_pmf sums to one") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto p = testutil::random_pmf(rng);
        const double sum = std::accumulate(p.probs.begin(), p.probs.end(), 0.0);
        CHECK(std::fabs(sum - 1.0) <= 1e-12);
        CHECK(std::all_of(p.probs.begin(), p.probs.end(), [](double x) { return x >= 0.0 && x <= 1.0; }));
    }
}

TEST_CASE("shannon_entropy") {
    Pmf256 uniform;
    uniform.probs.fill(1.0 / 256);
    auto r = shannon_entropy(uniform);
    CHECK(r.entropy_bits == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(r.ideal_compressibility == doctest::Approx(0.0));

    Pmf256 point;
    point.probs[42] = 1.0;
    r = shannon_entropy(point);
    CHECK(r.entropy_bits == 0.0);
    CHECK(r.ideal_compressibility == 1.0);

    CHECK(std::fabs(compressibility(6.69) - 0.16375) < 1e-15);
    CHECK(std::fabs(compressibility(6.11) - 0.23625) < 1e-15);

    Pmf256 dyadic;
    dyadic.probs[0] = 0.5;
    dyadic.probs[1] = 0.25;
    dyadic.probs[2] = 0.125;
    dyadic.probs[3] = 0.125;
    CHECK(std::fabs(shannon_entropy(dyadic).entropy_bits - 1.75) < 1e-9);
}

TEST_CASE("entropy is permutation invariant and bounded, maximal only at uniform") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        auto p = testutil::random_pmf(rng);
        const double h = shannon_entropy(p).entropy_bits;
        CHECK(h >= 0.0);
        CHECK(h <= 8.0);
        std::shuffle(p.probs.begin(), p.probs.end(), rng);
        CHECK(std::fabs(shannon_entropy(p).entropy_bits - h) < 1e-9);
    }
    // Any departure from uniform drops below 8.
    Pmf256 near;
    near.probs.fill(1.0 / 256);
    near.probs[0] += 1e-3;
    near.probs[1] -= 1e-3;
    CHECK(shannon_entropy(near).entropy_bits < 8.0 - 1e-9);
}

TEST_CASE("rank_symbols") {
    Pmf256 uniform;
    uniform.probs.fill(1.0 / 256);
    const auto order = rank_symbols(uniform);
    for (int r = 0; r < 256; ++r) {
        CHECK(order[r] == r);
    }

    Pmf256 p;
    p.probs.fill(0.003);
    p.probs[113] = 0.1;
    p.probs[241] = 0.05;
    p.probs[128] = 0.0001;
    const auto ranked = rank_symbols(p);
    CHECK(ranked.front() == 113);
    CHECK(ranked[1] == 241);
    CHECK(ranked.back() == 128);
    // Ties: ascending byte value.
    CHECK(ranked[2] == 0);
    CHECK(ranked[3] == 1);

    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        auto sorted = rank_symbols(testutil::random_pmf(rng));
        std::sort(sorted.begin(), sorted.end());
        for (int v = 0; v < 256; ++v) {
            REQUIRE(sorted[v] == v);
        }
    }
}
