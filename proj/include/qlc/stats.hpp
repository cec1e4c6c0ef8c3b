#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace qlc {

inline constexpr std::size_t kAlphabetSize = 256;

// Raw occurrence counts of every byte value in a stream.
struct Histogram256 {
    std::array<std::uint64_t, kAlphabetSize> counts{};
    std::uint64_t total = 0;
};

struct Pmf256 {
    std::array<double, kAlphabetSize> probs{};
};

struct EntropyReport {
    double entropy_bits = 0.0;
    double ideal_compressibility = 0.0;
};

// Rank -> byte value, most probable first.
using SymbolOrder = std::array<std::uint8_t, kAlphabetSize>;

[[nodiscard]] Histogram256 build_histogram(std::span<const std::uint8_t> data) noexcept;

// Throws Error(ZeroTotal) for an empty histogram.
[[nodiscard]] Pmf256 to_pmf(const Histogram256& h);

// H = -sum p log2 p, with 0 log 0 = 0.
[[nodiscard]] EntropyReport shannon_entropy(const Pmf256& p) noexcept;

// Fractional size reduction against raw 8-bit symbols. Negative when the
// code expands the data.
[[nodiscard]] constexpr double compressibility(double bits_per_symbol) noexcept {
    return (8.0 - bits_per_symbol) / 8.0;
}

// Byte values sorted by descending probability, ties by ascending value.
[[nodiscard]] SymbolOrder rank_symbols(const Pmf256& p) noexcept;

} // namespace qlc
