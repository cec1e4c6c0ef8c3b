#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qlc/stats.hpp"
#include "qlc/synth.hpp"

using namespace qlc;

TEST_CASE("e4m3 decoding covers the all-finite range") {
    CHECK(e4m3::to_double(0x00) == 0.0);
    CHECK(std::signbit(e4m3::to_double(0x80)));
    CHECK(e4m3::to_double(0x01) == std::ldexp(1.0, -9));
    CHECK(e4m3::to_double(0x08) == std::ldexp(1.0, -6));
    CHECK(e4m3::to_double(0x7E) == 448.0);
    CHECK(e4m3::to_double(0x7F) == 480.0);
    CHECK(e4m3::to_double(0xFF) == -480.0);
    for (int code = 0; code < 256; ++code) {
        const double v = e4m3::to_double(static_cast<std::uint8_t>(code));
        CHECK(std::isfinite(v));
        CHECK(v == oracle::e4m3_value(static_cast<std::uint8_t>(code)));
        CHECK(e4m3::from_double(v) == code);
    }
}

TEST_CASE("e4m3 rounding matches exhaustive nearest search") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> exponent(-12.0, 9.5);
    for (int i = 0; i < 100000; ++i) {
        const double x = (rng() & 1 ? -1.0 : 1.0) * std::exp2(exponent(rng));
        REQUIRE(e4m3::from_double(x) == oracle::e4m3_nearest(x));
    }
    // Exact midpoints between neighbours go to the even code.
    for (int code = 0; code < 0x7F; ++code) {
        const double lo = e4m3::to_double(static_cast<std::uint8_t>(code));
        const double hi = e4m3::to_double(static_cast<std::uint8_t>(code + 1));
        const double mid = 0.5 * (lo + hi);
        CHECK(e4m3::from_double(mid) == (code % 2 == 0 ? code : code + 1));
        CHECK(e4m3::from_double(mid) == oracle::e4m3_nearest(mid));
    }
    CHECK(e4m3::from_double(1e9) == 0x7F);
    CHECK(e4m3::from_double(-1e9) == 0xFF);
    CHECK(e4m3::from_double(std::nan("")) == 0x00);
}

TEST_CASE("generators are deterministic per seed") {
    for (auto kind : {Distribution::GaussianE4m3, Distribution::SpikeZero, Distribution::Uniform, Distribution::Zipf}) {
        SyntheticSpec spec;
        spec.kind = kind;
        spec.size = 10007;
        spec.seed = 99;
        CHECK(generate(spec) == generate(spec));
        CHECK(generate(spec).size() == spec.size);
        auto other = spec;
        other.seed = 100;
        CHECK(generate(other) != generate(spec));
        CHECK(parse_distribution(to_string(kind)) == kind);
    }
    CHECK_FALSE(parse_distribution("laplace").has_value());
}

TEST_CASE("spike-zero emits the zero pattern at rate p0") {
    SyntheticSpec spec;
    spec.kind = Distribution::SpikeZero;
    spec.size = 1 << 20;
    spec.seed = 5;
    spec.p0 = 0.5;
    const auto h = build_histogram(generate(spec));
    const double zero_rate = static_cast<double>(h.counts[0x00]) / static_cast<double>(h.total);
    CHECK(std::fabs(zero_rate - 0.5) <= 0.01);
}

TEST_CASE("gaussian-e4m3 histogram shape") {
    SyntheticSpec spec;
    spec.kind = Distribution::GaussianE4m3;
    spec.size = 1 << 20;
    spec.seed = 6;
    const auto data = generate(spec);
    const auto h = build_histogram(data);
    const double entropy = shannon_entropy(to_pmf(h)).entropy_bits;
    CHECK(entropy > 0.0);
    CHECK(entropy < 8.0);

    // Every block reaches 448 exactly and nothing exceeds it.
    CHECK(h.counts[0x7F] == 0);
    CHECK(h.counts[0xFF] == 0);
    CHECK(h.counts[0x7E] + h.counts[0xFE] >= spec.size / 32);

    // Mass per exponent field rises to a single peak and then falls.
    std::array<std::uint64_t, 16> per_exponent{};
    for (int code = 0; code < 256; ++code) {
        per_exponent[(code >> 3) & 15] += h.counts[code];
    }
    int peak = 0;
    for (int e = 1; e < 16; ++e) {
        if (per_exponent[e] > per_exponent[peak]) {
            peak = e;
        }
    }
    CHECK(peak >= 12);
    // Low binades hold only a handful of samples; check from where counts
    // are large enough to be stable.
    for (int e = 4; e < peak; ++e) {
        CHECK(per_exponent[e] <= per_exponent[e + 1]);
    }
    for (int e = peak; e < 15; ++e) {
        CHECK(per_exponent[e] >= per_exponent[e + 1]);
    }

    // Symmetric in sign.
    std::uint64_t negative = 0;
    for (int code = 128; code < 256; ++code) {
        negative += h.counts[code];
    }
    CHECK(std::fabs(static_cast<double>(negative) / static_cast<double>(h.total) - 0.5) < 0.01);
}
