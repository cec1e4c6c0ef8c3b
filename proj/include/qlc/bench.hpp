#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qlc/codec.hpp"
#include "qlc/huffman.hpp"

namespace qlc {

struct BenchRow {
    std::string name;
    double best_seconds = 0.0;
    double megabytes_per_second = 0.0; // original-symbol bytes per second / 1e6
};

struct BenchResult {
    std::size_t input_bytes = 0;
    int repetitions = 0;
    std::uint64_t qlc_payload_bits = 0;
    std::uint64_t huffman_bits = 0;
    std::vector<BenchRow> rows;

    [[nodiscard]] const BenchRow& row(const std::string& name) const;
};

inline const std::string kBenchQlcEncode = "qlc encode";
inline const std::string kBenchQlcDecode = "qlc decode";
inline const std::string kBenchQlcBitSequential = "qlc decode (bit-sequential)";
inline const std::string kBenchHuffmanEncode = "huffman encode";
inline const std::string kBenchHuffmanDecode = "huffman decode (tree walk)";

// The decoders under test. Swappable so the verification gate can be exercised.
struct BenchCodecs {
    std::function<std::vector<std::uint8_t>(const QlcContainer&)> qlc_decode = decode;
    std::function<std::vector<std::uint8_t>(const QlcContainer&)> qlc_decode_bit_sequential = decode_bit_sequential;
    std::function<std::vector<std::uint8_t>(const HuffmanBits&, const HuffmanCode&, std::uint64_t)> huffman_decode =
        qlc::huffman_decode;
};

// Every decoder's output is checked against `data` before any timing runs;
// a mismatch throws Error(VerificationFailed). Best of `repetitions` runs.
[[nodiscard]] BenchResult run_bench(std::span<const std::uint8_t> data, const QlcScheme& scheme,
                                    const SymbolMapping& mapping, int repetitions, const BenchCodecs& codecs = {});

} // namespace qlc
