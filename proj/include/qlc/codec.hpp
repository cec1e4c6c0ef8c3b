#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qlc/scheme.hpp"
#include "qlc/stats.hpp"

namespace qlc {

// Bijection between byte values and frequency ranks.
struct SymbolMapping {
    std::array<std::uint8_t, kAlphabetSize> rank_of{};  // byte value -> rank
    std::array<std::uint8_t, kAlphabetSize> value_of{}; // rank -> byte value

    // Throws Error(InvalidMapping) unless `value_of` is a permutation.
    [[nodiscard]] static SymbolMapping from_value_order(const SymbolOrder& value_of);
    [[nodiscard]] static SymbolMapping identity() noexcept;

    friend bool operator==(const SymbolMapping&, const SymbolMapping&) = default;
};

[[nodiscard]] SymbolMapping build_mapping(const Pmf256& p);

struct CodeEntry {
    std::uint32_t code_value = 0; // right-aligned codeword, emitted MSB first
    int code_length = 0;
};

// Byte value -> codeword.
struct EncoderTable {
    std::array<CodeEntry, kAlphabetSize> entries{};
};

// Requires a valid scheme.
[[nodiscard]] EncoderTable build_encoder_table(const QlcScheme& s, const SymbolMapping& m);

inline constexpr std::array<char, 4> kContainerMagic{'Q', 'L', 'C', '1'};
inline constexpr std::uint8_t kContainerVersion = 0x01;
// magic + version + scheme descriptor + mapping table + payload length
inline constexpr std::size_t kContainerHeaderSize = 4 + 1 + 8 + 256 + 8;

struct QlcContainer {
    std::uint8_t version = kContainerVersion;
    SchemeDescriptor scheme_descriptor{};
    std::array<std::uint8_t, kAlphabetSize> mapping_table{}; // rank -> original byte
    std::uint64_t payload_length = 0;                        // symbol count
    std::vector<std::uint8_t> payload;
    std::uint64_t payload_bits = 0; // exact bit count when produced by encode(); not serialized

    [[nodiscard]] std::vector<std::uint8_t> serialize() const;

    // Parses the byte layout only. Throws BadMagic, BadVersion, or
    // TruncatedPayload (header cut short). Contents are checked by decode.
    [[nodiscard]] static QlcContainer parse(std::span<const std::uint8_t> bytes);
};

struct EncodedPayload {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_count = 0;
};

[[nodiscard]] EncodedPayload encode_payload(std::span<const std::uint8_t> data, const EncoderTable& table);

// Requires a valid scheme; throws Error(InvalidScheme) otherwise.
[[nodiscard]] QlcContainer encode(std::span<const std::uint8_t> data, const QlcScheme& s, const SymbolMapping& m);

// Length-prefixed table decoder: three bits pick the area, which fixes the
// suffix width. Throws InvalidScheme, InvalidMapping, TruncatedPayload,
// InvalidCode or TrailingGarbage.
[[nodiscard]] std::vector<std::uint8_t> decode(const QlcContainer& c);

// One-bit-at-a-time reference decoder with the same contract as decode().
[[nodiscard]] std::vector<std::uint8_t> decode_bit_sequential(const QlcContainer& c);

} // namespace qlc
