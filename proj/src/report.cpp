#include "qlc/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "qlc/codec.hpp"
#include "qlc/huffman.hpp"

namespace qlc {

namespace {

QlcRow make_row(std::string name, const QlcScheme& s, const Histogram256& h, const Pmf256& p,
                const SymbolOrder& order) {
    QlcRow row;
    row.scheme = std::move(name);
    row.symbol_bits = s.symbol_bits();
    row.expected_length = expected_code_length(s, p, order);
    row.compressibility = compressibility(row.expected_length);
    row.distinct_code_lengths = s.distinct_code_lengths();
    row.occupancy = area_occupancy(s, p, order);

    std::uint64_t bits = 0;
    for (std::size_t r = 0; r < kAlphabetSize; ++r) {
        bits += h.counts[order[r]] * static_cast<std::uint64_t>(s.areas[s.area_of_rank(static_cast<int>(r))].code_length);
    }
    const auto container_bytes = static_cast<double>(kContainerHeaderSize + (bits + 7) / 8);
    row.container_compressibility = 1.0 - container_bytes / static_cast<double>(h.total);
    return row;
}

std::string join_bits(const std::array<int, kNumAreas>& bits) {
    std::ostringstream s;
    for (int a = 0; a < kNumAreas; ++a) {
        s << (a ? "," : "") << bits[a];
    }
    return s.str();
}

} // namespace

AnalysisReport analyze(const Histogram256& h) {
    const Pmf256 p = to_pmf(h);
    const SymbolOrder order = rank_symbols(p);
    const EntropyReport entropy = shannon_entropy(p);
    const HuffmanCode huffman = build_huffman(h);

    AnalysisReport r;
    r.total_symbols = h.total;
    r.entropy_bits = entropy.entropy_bits;
    r.ideal_compressibility = entropy.ideal_compressibility;
    r.huffman_expected_length = huffman_expected_length(huffman, p);
    r.huffman_compressibility = compressibility(r.huffman_expected_length);
    r.huffman_min_length = huffman.min_length;
    r.huffman_max_length = huffman.max_length;
    r.huffman_distinct_lengths = huffman.distinct_lengths();
    r.qlc_rows.push_back(make_row("ffn1", preset_ffn1(), h, p, order));
    r.qlc_rows.push_back(make_row("ffn2", preset_ffn2(), h, p, order));
    r.qlc_rows.push_back(make_row("adapt", adapt_scheme(p), h, p, order));
    return r;
}

bool ordering_holds(const AnalysisReport& r, double tolerance) noexcept {
    if (r.huffman_compressibility > r.ideal_compressibility + tolerance) {
        return false;
    }
    for (const auto& row : r.qlc_rows) {
        if (row.compressibility > r.huffman_compressibility + tolerance) {
            return false;
        }
    }
    return true;
}

nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.qlc_rows) {
        rows.push_back({
            {"scheme", row.scheme},
            {"symbol_bits", row.symbol_bits},
            {"expected_length", row.expected_length},
            {"compressibility", row.compressibility},
            {"container_compressibility", row.container_compressibility},
            {"distinct_code_lengths", row.distinct_code_lengths},
            {"occupancy", row.occupancy},
        });
    }
    return {
        {"total_symbols", r.total_symbols},
        {"entropy_bits", r.entropy_bits},
        {"ideal_compressibility", r.ideal_compressibility},
        {"huffman_expected_length", r.huffman_expected_length},
        {"huffman_compressibility", r.huffman_compressibility},
        {"huffman_length_range", {{"min", r.huffman_min_length}, {"max", r.huffman_max_length}}},
        {"huffman_distinct_lengths", r.huffman_distinct_lengths},
        {"qlc_rows", rows},
    };
}

void print_report(std::ostream& out, const AnalysisReport& r, bool with_occupancy) {
    const auto pct = [](double f) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(2) << 100.0 * f << " %";
        return s.str();
    };
    out << std::fixed << std::setprecision(4);
    out << "symbols        " << r.total_symbols << '\n';
    out << "entropy        " << r.entropy_bits << " bits/symbol\n";
    out << "ideal          " << pct(r.ideal_compressibility) << '\n';
    out << "huffman        " << r.huffman_expected_length << " bits/symbol, " << pct(r.huffman_compressibility)
        << ", lengths " << r.huffman_min_length << ".." << r.huffman_max_length << " (" << r.huffman_distinct_lengths
        << " distinct)\n\n";

    out << std::left << std::setw(8) << "scheme" << std::setw(20) << "symbol bits" << std::right << std::setw(10)
        << "E[L]" << std::setw(12) << "payload" << std::setw(12) << "container" << '\n';
    for (const auto& row : r.qlc_rows) {
        out << std::left << std::setw(8) << row.scheme << std::setw(20) << join_bits(row.symbol_bits) << std::right
            << std::setw(10) << row.expected_length << std::setw(12) << pct(row.compressibility) << std::setw(12)
            << pct(row.container_compressibility) << '\n';
    }

    if (with_occupancy) {
        out << "\narea occupancy (probability mass per area)\n";
        out << std::left << std::setw(8) << "scheme" << std::right;
        for (int a = 0; a < kNumAreas; ++a) {
            out << std::setw(9) << ("area" + std::to_string(a + 1));
        }
        out << '\n';
        for (const auto& row : r.qlc_rows) {
            out << std::left << std::setw(8) << row.scheme << std::right;
            for (double m : row.occupancy) {
                out << std::setw(9) << m;
            }
            out << '\n';
        }
    }
    out << std::defaultfloat;
}

} // namespace qlc
