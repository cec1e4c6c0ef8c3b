#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace qlc {

// 8-bit float with 1 sign, 4 exponent (bias 7) and 3 mantissa bits, in the
// variant where all 256 encodings are finite (largest magnitude 480).
namespace e4m3 {

inline constexpr double kMaxFinite = 480.0;
inline constexpr std::uint8_t kPositiveZero = 0x00;

[[nodiscard]] double to_double(std::uint8_t bits) noexcept;

// Round to nearest, ties to even mantissa; magnitudes past the largest finite
// value saturate. NaN maps to +0.
[[nodiscard]] std::uint8_t from_double(double x) noexcept;

} // namespace e4m3

enum class Distribution { GaussianE4m3, SpikeZero, Uniform, Zipf };

[[nodiscard]] std::string_view to_string(Distribution d) noexcept;
[[nodiscard]] std::optional<Distribution> parse_distribution(std::string_view name) noexcept;

struct SyntheticSpec {
    Distribution kind = Distribution::GaussianE4m3;
    std::size_t size = 0;
    std::uint64_t seed = 0;
    double sigma = 1.0;
    double p0 = 0.5;
    double zipf_exponent = 1.0;
    std::size_t block_size = 32;
    // Each block is scaled so its largest magnitude maps here.
    double block_target = 448.0;
};

// Deterministic for a given spec.
[[nodiscard]] std::vector<std::uint8_t> generate(const SyntheticSpec& spec);

} // namespace qlc
