#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qlc/stats.hpp"

namespace qlc {

// Canonical Huffman code over byte values. Absent symbols have length 0.
struct HuffmanCode {
    std::array<int, kAlphabetSize> lengths{};
    // Right-aligned canonical codewords. Only populated when max_length <= 64.
    std::array<std::uint64_t, kAlphabetSize> codewords{};
    int min_length = 0;
    int max_length = 0;

    [[nodiscard]] int present_symbols() const noexcept;
    [[nodiscard]] int distinct_lengths() const noexcept;
};

inline constexpr int kMaxStoredCodeLength = 64;

// Unrestricted-depth Huffman lengths with canonical codewords. Merges the two
// lightest nodes, ties broken by the smallest byte value each node contains.
// A lone present symbol gets length 1. Throws Error(ZeroTotal).
[[nodiscard]] HuffmanCode build_huffman(const Histogram256& h);

// Throws Error(MissingCode) if p puts mass on a symbol without a code.
[[nodiscard]] double huffman_expected_length(const HuffmanCode& c, const Pmf256& p);

struct HuffmanBits {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_count = 0;
};

// MSB-first packing, zero padded. Throws MissingCode or CodeTooLong.
[[nodiscard]] HuffmanBits huffman_encode(std::span<const std::uint8_t> data, const HuffmanCode& c);

// Bit-by-bit walk of the code tree. Throws TruncatedPayload if the bits run
// out, InvalidCode on a path with no leaf, TrailingGarbage if bits are left
// over after `symbols` symbols.
class HuffmanDecoder {
public:
    explicit HuffmanDecoder(const HuffmanCode& c);

    [[nodiscard]] std::vector<std::uint8_t> decode(std::span<const std::uint8_t> bytes, std::uint64_t bit_count,
                                                   std::uint64_t symbols) const;

private:
    struct Node {
        std::int32_t child[2] = {-1, -1};
        std::int32_t symbol = -1;
    };
    std::vector<Node> nodes_;
};

[[nodiscard]] std::vector<std::uint8_t> huffman_decode(const HuffmanBits& bits, const HuffmanCode& c,
                                                       std::uint64_t symbols);

} // namespace qlc
