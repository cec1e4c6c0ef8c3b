#include "qlc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qlc {

namespace e4m3 {

namespace {
constexpr int kBias = 7;
constexpr int kMantissaBits = 3;
constexpr int kMinNormalExponent = 1 - kBias; // 2^-6
constexpr std::uint8_t kMaxMagnitudeCode = 0x7F;
} // namespace

double to_double(std::uint8_t bits) noexcept {
    const int exponent = (bits >> kMantissaBits) & 0xF;
    const int mantissa = bits & 0x7;
    const double magnitude = exponent == 0
                                 ? std::ldexp(mantissa, kMinNormalExponent - kMantissaBits)
                                 : std::ldexp(8 + mantissa, exponent - kBias - kMantissaBits);
    return (bits & 0x80) ? -magnitude : magnitude;
}

std::uint8_t from_double(double x) noexcept {
    if (std::isnan(x)) {
        return kPositiveZero;
    }
    const std::uint8_t sign = std::signbit(x) ? 0x80 : 0x00;
    const double a = std::fabs(x);
    if (a >= kMaxFinite) {
        return sign | kMaxMagnitudeCode;
    }
    // Division by a power of two is exact, so nearbyint (ties to even under
    // the default rounding mode) rounds on the e4m3 grid directly.
    unsigned code = 0;
    if (a < std::ldexp(1.0, kMinNormalExponent)) {
        code = static_cast<unsigned>(std::nearbyint(std::ldexp(a, kMantissaBits - kMinNormalExponent)));
    } else {
        int k = 0;
        std::frexp(a, &k);
        const int exponent = k - 1;
        const auto m = static_cast<unsigned>(std::nearbyint(std::ldexp(a, kMantissaBits - exponent)));
        // m in [8, 16]; m == 16 carries into the next binade.
        code = (static_cast<unsigned>(exponent + kBias) << kMantissaBits) + (m - 8);
    }
    return static_cast<std::uint8_t>(sign | std::min<unsigned>(code, kMaxMagnitudeCode));
}

} // namespace e4m3

std::string_view to_string(Distribution d) noexcept {
    switch (d) {
    case Distribution::GaussianE4m3: return "gaussian-e4m3";
    case Distribution::SpikeZero: return "spike-zero";
    case Distribution::Uniform: return "uniform";
    case Distribution::Zipf: return "zipf";
    }
    return "unknown";
}

std::optional<Distribution> parse_distribution(std::string_view name) noexcept {
    for (auto d : {Distribution::GaussianE4m3, Distribution::SpikeZero, Distribution::Uniform, Distribution::Zipf}) {
        if (name == to_string(d)) {
            return d;
        }
    }
    return std::nullopt;
}

namespace {

void fill_block_scaled(std::vector<std::uint8_t>& out, const SyntheticSpec& spec, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, spec.sigma);
    std::bernoulli_distribution spike(spec.kind == Distribution::SpikeZero ? spec.p0 : 0.0);
    const std::size_t block = std::max<std::size_t>(spec.block_size, 1);
    std::vector<double> values(block);

    for (std::size_t start = 0; start < spec.size; start += block) {
        const std::size_t n = std::min(block, spec.size - start);
        double max_abs = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            values[i] = normal(rng);
            max_abs = std::max(max_abs, std::fabs(values[i]));
        }
        const double scale = max_abs > 0.0 ? spec.block_target / max_abs : 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint8_t q = e4m3::from_double(values[i] * scale);
            if (spec.kind == Distribution::SpikeZero && spike(rng)) {
                q = e4m3::kPositiveZero;
            }
            out.push_back(q);
        }
    }
}

} // namespace

std::vector<std::uint8_t> generate(const SyntheticSpec& spec) {
    std::vector<std::uint8_t> out;
    out.reserve(spec.size);
    std::mt19937_64 rng(spec.seed);

    switch (spec.kind) {
    case Distribution::GaussianE4m3:
    case Distribution::SpikeZero:
        fill_block_scaled(out, spec, rng);
        break;
    case Distribution::Uniform: {
        std::uniform_int_distribution<int> byte(0, 255);
        for (std::size_t i = 0; i < spec.size; ++i) {
            out.push_back(static_cast<std::uint8_t>(byte(rng)));
        }
        break;
    }
    case Distribution::Zipf: {
        std::vector<double> weights(256);
        for (std::size_t k = 0; k < weights.size(); ++k) {
            weights[k] = std::pow(static_cast<double>(k + 1), -spec.zipf_exponent);
        }
        std::discrete_distribution<int> rank(weights.begin(), weights.end());
        for (std::size_t i = 0; i < spec.size; ++i) {
            out.push_back(static_cast<std::uint8_t>(rank(rng)));
        }
        break;
    }
    }
    return out;
}

} // namespace qlc
