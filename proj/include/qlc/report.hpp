#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlc/scheme.hpp"
#include "qlc/stats.hpp"

namespace qlc {

struct QlcRow {
    std::string scheme;
    std::array<int, kNumAreas> symbol_bits{};
    double expected_length = 0.0;
    double compressibility = 0.0;           // payload only
    double container_compressibility = 0.0; // including the 277-byte header
    int distinct_code_lengths = 0;
    std::array<double, kNumAreas> occupancy{};
};

struct AnalysisReport {
    std::uint64_t total_symbols = 0;
    double entropy_bits = 0.0;
    double ideal_compressibility = 0.0;
    double huffman_expected_length = 0.0;
    double huffman_compressibility = 0.0;
    int huffman_min_length = 0;
    int huffman_max_length = 0;
    int huffman_distinct_lengths = 0;
    std::vector<QlcRow> qlc_rows; // ffn1, ffn2, adapt
};

// Throws Error(ZeroTotal) for an empty histogram.
[[nodiscard]] AnalysisReport analyze(const Histogram256& h);

// ideal >= huffman >= every QLC row, within `tolerance`.
[[nodiscard]] bool ordering_holds(const AnalysisReport& r, double tolerance = 1e-9) noexcept;

[[nodiscard]] nlohmann::json to_json(const AnalysisReport& r);

void print_report(std::ostream& out, const AnalysisReport& r, bool with_occupancy);

} // namespace qlc
