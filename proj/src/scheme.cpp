#include "qlc/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "qlc/error.hpp"

namespace qlc {

namespace {

QlcScheme from_counts(const std::array<int, kNumAreas>& counts, const std::array<int, kNumAreas>& bits) {
    QlcScheme s;
    int offset = 0;
    for (int a = 0; a < kNumAreas; ++a) {
        s.areas[a] = QlcArea{a, bits[a], counts[a], offset, kPrefixBits + bits[a]};
        offset += counts[a];
    }
    return s;
}

SchemeValidation fail(SchemeViolation v, std::string reason) {
    return SchemeValidation{v, std::move(reason)};
}

std::string area_label(int a) {
    return "area " + std::to_string(a + 1);
}

} // namespace

QlcScheme QlcScheme::from_symbol_bits(const std::array<int, kNumAreas - 1>& leading_bits) {
    std::array<int, kNumAreas> counts{};
    std::array<int, kNumAreas> bits{};
    int used = 0;
    for (int a = 0; a < kNumAreas - 1; ++a) {
        bits[a] = leading_bits[a];
        counts[a] = (bits[a] >= 0 && bits[a] <= kMaxSymbolBits) ? (1 << bits[a]) : 0;
        used += counts[a];
    }
    const int remainder = static_cast<int>(kAlphabetSize) - used;
    counts[kNumAreas - 1] = remainder;
    bits[kNumAreas - 1] = remainder > 0 ? ceil_log2(remainder) : 0;
    return from_counts(counts, bits);
}

QlcScheme QlcScheme::from_descriptor(const SchemeDescriptor& d) {
    std::array<int, kNumAreas - 1> leading{};
    for (int a = 0; a < kNumAreas; ++a) {
        if (d[a] > kMaxSymbolBits) {
            throw Error(ErrorKind::InvalidScheme,
                        "descriptor " + area_label(a) + " has symbol_bits " + std::to_string(d[a]));
        }
        if (a < kNumAreas - 1) {
            leading[a] = d[a];
        }
    }
    QlcScheme s = from_symbol_bits(leading);
    if (s.areas[kNumAreas - 1].count > 0 && s.areas[kNumAreas - 1].symbol_bits != d[kNumAreas - 1]) {
        throw Error(ErrorKind::InvalidScheme, "descriptor last-area width " + std::to_string(d[kNumAreas - 1]) +
                                                  " does not match remainder " +
                                                  std::to_string(s.areas[kNumAreas - 1].count));
    }
    require_valid(s);
    return s;
}

SchemeDescriptor QlcScheme::descriptor() const noexcept {
    SchemeDescriptor d{};
    for (int a = 0; a < kNumAreas; ++a) {
        d[a] = static_cast<std::uint8_t>(areas[a].symbol_bits);
    }
    return d;
}

std::array<int, kNumAreas> QlcScheme::symbol_bits() const noexcept {
    std::array<int, kNumAreas> bits{};
    for (int a = 0; a < kNumAreas; ++a) {
        bits[a] = areas[a].symbol_bits;
    }
    return bits;
}

int QlcScheme::min_code_length() const noexcept {
    int m = std::numeric_limits<int>::max();
    for (const auto& area : areas) {
        m = std::min(m, area.code_length);
    }
    return m;
}

int QlcScheme::max_code_length() const noexcept {
    int m = 0;
    for (const auto& area : areas) {
        m = std::max(m, area.code_length);
    }
    return m;
}

int QlcScheme::distinct_code_lengths() const noexcept {
    std::set<int> lengths;
    for (const auto& area : areas) {
        lengths.insert(area.code_length);
    }
    return static_cast<int>(lengths.size());
}

double QlcScheme::kraft_sum() const noexcept {
    double sum = 0.0;
    for (const auto& area : areas) {
        sum += static_cast<double>(area.count) * std::ldexp(1.0, -area.code_length);
    }
    return sum;
}

int QlcScheme::area_of_rank(int rank) const noexcept {
    int a = 0;
    while (a < kNumAreas - 1 && rank > areas[a].last_rank()) {
        ++a;
    }
    return a;
}

SchemeValidation validate_scheme(const QlcScheme& s) {
    for (int a = 0; a < kNumAreas; ++a) {
        const QlcArea& area = s.areas[a];
        const std::string label = area_label(a);
        if (area.area_code != a) {
            return fail(SchemeViolation::BadAreaCode, label + " has area code " + std::to_string(area.area_code));
        }
        if (area.symbol_bits < 0 || area.symbol_bits > kMaxSymbolBits) {
            return fail(SchemeViolation::BadSymbolBits,
                        label + " has symbol_bits " + std::to_string(area.symbol_bits) + " outside 0..8");
        }
        if (area.code_length != kPrefixBits + area.symbol_bits) {
            return fail(SchemeViolation::BadCodeLength,
                        label + " code length " + std::to_string(area.code_length) + " != 3 + symbol_bits");
        }
        if (area.count < 1) {
            return fail(SchemeViolation::EmptyArea, label + " has no symbols");
        }
        const int capacity = 1 << area.symbol_bits;
        if (area.count > capacity) {
            return fail(SchemeViolation::CountExceedsCapacity,
                        label + " count " + std::to_string(area.count) + " exceeds 2^" +
                            std::to_string(area.symbol_bits));
        }
        if (a < kNumAreas - 1 && area.count != capacity) {
            return fail(SchemeViolation::PartialLeadingArea,
                        label + " count " + std::to_string(area.count) + " is not exactly 2^" +
                            std::to_string(area.symbol_bits));
        }
        if (a == kNumAreas - 1 && area.symbol_bits != ceil_log2(area.count)) {
            return fail(SchemeViolation::LastAreaWidth,
                        label + " symbol_bits " + std::to_string(area.symbol_bits) + " != ceil(log2(" +
                            std::to_string(area.count) + "))");
        }
    }

    int total = 0;
    for (const auto& area : s.areas) {
        total += area.count;
    }
    if (total != static_cast<int>(kAlphabetSize)) {
        return fail(SchemeViolation::CountSum, "counts sum to " + std::to_string(total) + ", not 256");
    }

    int offset = 0;
    for (int a = 0; a < kNumAreas; ++a) {
        if (s.areas[a].base_offset != offset) {
            return fail(SchemeViolation::NonContiguousOffsets,
                        area_label(a) + " starts at " + std::to_string(s.areas[a].base_offset) + ", expected " +
                            std::to_string(offset));
        }
        offset += s.areas[a].count;
    }

    for (int a = 1; a < kNumAreas; ++a) {
        if (s.areas[a].symbol_bits < s.areas[a - 1].symbol_bits) {
            return fail(SchemeViolation::NonMonotoneSymbolBits,
                        area_label(a) + " is narrower than " + area_label(a - 1));
        }
    }

    if (s.distinct_code_lengths() > kMaxDistinctLengths) {
        return fail(SchemeViolation::TooManyLengths,
                    std::to_string(s.distinct_code_lengths()) + " distinct code lengths (max 4)");
    }

    if (s.kraft_sum() > 1.0) {
        return fail(SchemeViolation::KraftExceeded, "Kraft sum " + std::to_string(s.kraft_sum()) + " > 1");
    }
    return {};
}

void require_valid(const QlcScheme& s) {
    auto result = validate_scheme(s);
    if (!result) {
        throw Error(ErrorKind::InvalidScheme, result.reason);
    }
}

QlcScheme preset_ffn1() {
    return from_counts({8, 8, 8, 8, 8, 16, 32, 168}, {3, 3, 3, 3, 3, 4, 5, 8});
}

QlcScheme preset_ffn2() {
    return from_counts({2, 8, 8, 8, 8, 32, 32, 158}, {1, 3, 3, 3, 3, 5, 5, 8});
}

std::array<double, kNumAreas> area_occupancy(const QlcScheme& s, const Pmf256& p, const SymbolOrder& order) noexcept {
    std::array<double, kNumAreas> mass{};
    for (int a = 0; a < kNumAreas; ++a) {
        const QlcArea& area = s.areas[a];
        for (int r = area.base_offset; r <= area.last_rank(); ++r) {
            mass[a] += p.probs[order[r]];
        }
    }
    return mass;
}

double expected_code_length(const QlcScheme& s, const Pmf256& p, const SymbolOrder& order) noexcept {
    const auto mass = area_occupancy(s, p, order);
    double bits = 0.0;
    for (int a = 0; a < kNumAreas; ++a) {
        bits += mass[a] * s.areas[a].code_length;
    }
    return bits;
}

namespace {

void enumerate_leading(std::array<int, kNumAreas - 1>& bits, int depth, int used, std::vector<QlcScheme>& out) {
    if (depth == kNumAreas - 1) {
        QlcScheme s = QlcScheme::from_symbol_bits(bits);
        if (validate_scheme(s)) {
            out.push_back(s);
        }
        return;
    }
    const int lowest = depth == 0 ? 0 : bits[depth - 1];
    for (int b = lowest; b <= kMaxSymbolBits; ++b) {
        // The last area needs at least one symbol.
        if (used + (1 << b) >= static_cast<int>(kAlphabetSize)) {
            break;
        }
        bits[depth] = b;
        enumerate_leading(bits, depth + 1, used + (1 << b), out);
    }
}

const std::vector<QlcScheme>& family() {
    static const std::vector<QlcScheme> members = [] {
        std::vector<QlcScheme> out;
        std::array<int, kNumAreas - 1> bits{};
        enumerate_leading(bits, 0, 0, out);
        return out;
    }();
    return members;
}

} // namespace

std::vector<QlcScheme> enumerate_family() {
    return family();
}

QlcScheme adapt_scheme(const Pmf256& p) {
    const SymbolOrder order = rank_symbols(p);
    std::array<double, kAlphabetSize + 1> cumulative{};
    for (std::size_t r = 0; r < kAlphabetSize; ++r) {
        cumulative[r + 1] = cumulative[r] + p.probs[order[r]];
    }

    const auto& members = family();
    std::vector<double> lengths(members.size());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < members.size(); ++i) {
        double bits = 0.0;
        for (const auto& area : members[i].areas) {
            bits += area.code_length * (cumulative[area.base_offset + area.count] - cumulative[area.base_offset]);
        }
        lengths[i] = bits;
        best = std::min(best, bits);
    }
    // Members are in lexicographic order, so the first near-minimal one has
    // the smallest symbol_bits tuple.
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (lengths[i] <= best + kSchemeTieTolerance) {
            return members[i];
        }
    }
    return preset_ffn1();
}

} // namespace qlc
