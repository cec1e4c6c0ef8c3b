#include "qlc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "qlc/error.hpp"

namespace qlc {

const BenchRow& BenchResult::row(const std::string& name) const {
    for (const auto& r : rows) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::out_of_range("no bench row named " + name);
}

namespace {

template <typename Fn>
double best_of(int repetitions, Fn&& fn) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < repetitions; ++i) {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        const auto stop = std::chrono::steady_clock::now();
        // Keep the result observable so the work is not elided.
        volatile auto sink = result.size();
        (void)sink;
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

void verify(const std::vector<std::uint8_t>& got, std::span<const std::uint8_t> want, const std::string& what) {
    if (!std::equal(got.begin(), got.end(), want.begin(), want.end())) {
        throw Error(ErrorKind::VerificationFailed, what + " output does not match the input");
    }
}

} // namespace

BenchResult run_bench(std::span<const std::uint8_t> data, const QlcScheme& scheme, const SymbolMapping& mapping,
                      int repetitions, const BenchCodecs& codecs) {
    repetitions = std::max(repetitions, 1);
    const QlcContainer container = encode(data, scheme, mapping);
    const EncoderTable table = build_encoder_table(scheme, mapping);
    const HuffmanCode huffman = build_huffman(build_histogram(data));
    const HuffmanBits huffman_bits = huffman_encode(data, huffman);

    verify(codecs.qlc_decode(container), data, kBenchQlcDecode);
    verify(codecs.qlc_decode_bit_sequential(container), data, kBenchQlcBitSequential);
    verify(codecs.huffman_decode(huffman_bits, huffman, data.size()), data, kBenchHuffmanDecode);

    BenchResult result;
    result.input_bytes = data.size();
    result.repetitions = repetitions;
    result.qlc_payload_bits = container.payload_bits;
    result.huffman_bits = huffman_bits.bit_count;

    const auto add = [&](const std::string& name, double seconds) {
        const double mbps = seconds > 0.0 ? static_cast<double>(data.size()) / 1e6 / seconds
                                          : std::numeric_limits<double>::infinity();
        result.rows.push_back(BenchRow{name, seconds, mbps});
    };
    add(kBenchQlcEncode, best_of(repetitions, [&] { return encode_payload(data, table).bytes; }));
    add(kBenchQlcDecode, best_of(repetitions, [&] { return codecs.qlc_decode(container); }));
    add(kBenchQlcBitSequential, best_of(repetitions, [&] { return codecs.qlc_decode_bit_sequential(container); }));
    add(kBenchHuffmanEncode, best_of(repetitions, [&] { return huffman_encode(data, huffman).bytes; }));
    add(kBenchHuffmanDecode,
        best_of(repetitions, [&] { return codecs.huffman_decode(huffman_bits, huffman, data.size()); }));
    return result;
}

} // namespace qlc
