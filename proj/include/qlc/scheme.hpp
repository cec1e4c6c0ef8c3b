#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlc/stats.hpp"

namespace qlc {

inline constexpr int kNumAreas = 8;
inline constexpr int kPrefixBits = 3;
inline constexpr int kMaxSymbolBits = 8;
inline constexpr int kMaxDistinctLengths = 4;

// One contiguous range of ranks sharing a prefix and a suffix width.
struct QlcArea {
    int area_code = 0;
    int symbol_bits = 0;
    int count = 0;
    int base_offset = 0;
    int code_length = 0;

    [[nodiscard]] int last_rank() const noexcept { return base_offset + count - 1; }
    [[nodiscard]] bool contains(int rank) const noexcept {
        return rank >= base_offset && rank < base_offset + count;
    }

    friend bool operator==(const QlcArea&, const QlcArea&) = default;
};

// Serialized form of a scheme: the suffix width of each area, in area order.
using SchemeDescriptor = std::array<std::uint8_t, kNumAreas>;

// An 8-area quad length coding scheme. The struct is a plain aggregate so
// malformed schemes can be expressed; validate_scheme() is the gate.
struct QlcScheme {
    std::array<QlcArea, kNumAreas> areas{};

    // Builds a family-shaped scheme: areas 0..6 full (2^b symbols), area 7
    // takes the remainder. Does not validate.
    [[nodiscard]] static QlcScheme from_symbol_bits(const std::array<int, kNumAreas - 1>& leading_bits);

    // Throws Error(InvalidScheme) if the descriptor does not describe a valid
    // scheme.
    [[nodiscard]] static QlcScheme from_descriptor(const SchemeDescriptor& d);

    [[nodiscard]] SchemeDescriptor descriptor() const noexcept;
    [[nodiscard]] std::array<int, kNumAreas> symbol_bits() const noexcept;

    [[nodiscard]] int min_code_length() const noexcept;
    [[nodiscard]] int max_code_length() const noexcept;
    [[nodiscard]] int distinct_code_lengths() const noexcept;
    [[nodiscard]] double kraft_sum() const noexcept;

    // Area index holding `rank`. Requires a valid scheme and rank in 0..255.
    [[nodiscard]] int area_of_rank(int rank) const noexcept;

    friend bool operator==(const QlcScheme&, const QlcScheme&) = default;
};

enum class SchemeViolation {
    None,
    BadAreaCode,
    BadCodeLength,
    BadSymbolBits,
    EmptyArea,
    CountExceedsCapacity,
    PartialLeadingArea,
    LastAreaWidth,
    CountSum,
    NonContiguousOffsets,
    NonMonotoneSymbolBits,
    TooManyLengths,
    KraftExceeded,
};

struct SchemeValidation {
    SchemeViolation violation = SchemeViolation::None;
    std::string reason;

    [[nodiscard]] bool ok() const noexcept { return violation == SchemeViolation::None; }
    explicit operator bool() const noexcept { return ok(); }
};

[[nodiscard]] SchemeValidation validate_scheme(const QlcScheme& s);

// Throws Error(InvalidScheme) carrying the violation reason.
void require_valid(const QlcScheme& s);

// Counts 8,8,8,8,8,16,32,168 with code lengths 6,6,6,6,6,7,8,11.
[[nodiscard]] QlcScheme preset_ffn1();
// Counts 2,8,8,8,8,32,32,158 with code lengths 4,6,6,6,6,8,8,11.
[[nodiscard]] QlcScheme preset_ffn2();

// Mean code length in bits/symbol when byte value order[r] is coded as rank r.
[[nodiscard]] double expected_code_length(const QlcScheme& s, const Pmf256& p, const SymbolOrder& order) noexcept;

// Probability mass landing in each area.
[[nodiscard]] std::array<double, kNumAreas> area_occupancy(const QlcScheme& s, const Pmf256& p,
                                                          const SymbolOrder& order) noexcept;

// Every member of the searchable scheme family, in lexicographic order of
// the leading seven suffix widths.
[[nodiscard]] std::vector<QlcScheme> enumerate_family();

// Expected lengths within this distance are treated as equal during the
// search; the lexicographically smallest symbol_bits tuple wins among them.
inline constexpr double kSchemeTieTolerance = 1e-12;

// Best family member for `p` under its descending-probability ranking.
[[nodiscard]] QlcScheme adapt_scheme(const Pmf256& p);

[[nodiscard]] constexpr int ceil_log2(int n) noexcept {
    int bits = 0;
    while ((1 << bits) < n) {
        ++bits;
    }
    return bits;
}

} // namespace qlc
