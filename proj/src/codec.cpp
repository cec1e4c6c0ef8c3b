#include "qlc/codec.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "qlc/bitio.hpp"
#include "qlc/error.hpp"

namespace qlc {

SymbolMapping SymbolMapping::from_value_order(const SymbolOrder& value_of) {
    SymbolMapping m;
    std::array<bool, kAlphabetSize> seen{};
    for (std::size_t r = 0; r < kAlphabetSize; ++r) {
        const std::uint8_t v = value_of[r];
        if (seen[v]) {
            throw Error(ErrorKind::InvalidMapping, "byte value " + std::to_string(v) + " appears twice");
        }
        seen[v] = true;
        m.value_of[r] = v;
        m.rank_of[v] = static_cast<std::uint8_t>(r);
    }
    return m;
}

SymbolMapping SymbolMapping::identity() noexcept {
    SymbolMapping m;
    std::iota(m.value_of.begin(), m.value_of.end(), std::uint8_t{0});
    m.rank_of = m.value_of;
    return m;
}

SymbolMapping build_mapping(const Pmf256& p) {
    return SymbolMapping::from_value_order(rank_symbols(p));
}

EncoderTable build_encoder_table(const QlcScheme& s, const SymbolMapping& m) {
    EncoderTable table;
    for (std::size_t v = 0; v < kAlphabetSize; ++v) {
        const int rank = m.rank_of[v];
        const QlcArea& area = s.areas[s.area_of_rank(rank)];
        const auto suffix = static_cast<std::uint32_t>(rank - area.base_offset);
        table.entries[v] = CodeEntry{(static_cast<std::uint32_t>(area.area_code) << area.symbol_bits) | suffix,
                                     area.code_length};
    }
    return table;
}

std::vector<std::uint8_t> QlcContainer::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(kContainerHeaderSize + payload.size());
    out.insert(out.end(), kContainerMagic.begin(), kContainerMagic.end());
    out.push_back(version);
    out.insert(out.end(), scheme_descriptor.begin(), scheme_descriptor.end());
    out.insert(out.end(), mapping_table.begin(), mapping_table.end());
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(payload_length >> (8 * i)));
    }
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

QlcContainer QlcContainer::parse(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kContainerMagic.size() ||
        !std::equal(kContainerMagic.begin(), kContainerMagic.end(), bytes.begin(),
                    [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; })) {
        throw Error(ErrorKind::BadMagic, "not a QLC1 container");
    }
    if (bytes.size() < 5) {
        throw Error(ErrorKind::TruncatedPayload, "container ends before the version byte");
    }
    QlcContainer c;
    c.version = bytes[4];
    if (c.version != kContainerVersion) {
        throw Error(ErrorKind::BadVersion, "unsupported container version " + std::to_string(c.version));
    }
    if (bytes.size() < kContainerHeaderSize) {
        throw Error(ErrorKind::TruncatedPayload, "container header is " + std::to_string(bytes.size()) +
                                                     " bytes, expected " + std::to_string(kContainerHeaderSize));
    }
    std::size_t pos = 5;
    std::copy_n(bytes.begin() + pos, c.scheme_descriptor.size(), c.scheme_descriptor.begin());
    pos += c.scheme_descriptor.size();
    std::copy_n(bytes.begin() + pos, c.mapping_table.size(), c.mapping_table.begin());
    pos += c.mapping_table.size();
    c.payload_length = 0;
    for (int i = 0; i < 8; ++i) {
        c.payload_length |= static_cast<std::uint64_t>(bytes[pos + i]) << (8 * i);
    }
    pos += 8;
    c.payload.assign(bytes.begin() + pos, bytes.end());
    c.payload_bits = static_cast<std::uint64_t>(c.payload.size()) * 8;
    return c;
}

EncodedPayload encode_payload(std::span<const std::uint8_t> data, const EncoderTable& table) {
    BitWriter writer;
    writer.reserve_bits(static_cast<std::uint64_t>(data.size()) * 11);
    for (std::uint8_t v : data) {
        const CodeEntry& e = table.entries[v];
        writer.put(e.code_value, e.code_length);
    }
    const std::uint64_t bits = writer.bit_count();
    return EncodedPayload{std::move(writer).finish(), bits};
}

QlcContainer encode(std::span<const std::uint8_t> data, const QlcScheme& s, const SymbolMapping& m) {
    require_valid(s);
    auto payload = encode_payload(data, build_encoder_table(s, m));
    QlcContainer c;
    c.scheme_descriptor = s.descriptor();
    c.mapping_table = m.value_of;
    c.payload_length = data.size();
    c.payload = std::move(payload.bytes);
    c.payload_bits = payload.bit_count;
    return c;
}

namespace {

struct DecodeSetup {
    QlcScheme scheme;
    std::array<std::uint8_t, kAlphabetSize> output_of{}; // encoded symbol -> byte
    std::size_t reserve = 0;
};

// Header checks shared by both decoders; bit extraction is not shared.
DecodeSetup prepare(const QlcContainer& c) {
    if (c.version != kContainerVersion) {
        throw Error(ErrorKind::BadVersion, "unsupported container version " + std::to_string(c.version));
    }
    DecodeSetup setup{QlcScheme::from_descriptor(c.scheme_descriptor), {}, 0};
    std::array<bool, kAlphabetSize> seen{};
    for (std::uint8_t v : c.mapping_table) {
        if (seen[v]) {
            throw Error(ErrorKind::InvalidMapping, "mapping table repeats byte value " + std::to_string(v));
        }
        seen[v] = true;
    }
    setup.output_of = c.mapping_table;
    // A corrupted length field must not drive the allocation.
    const std::uint64_t most = static_cast<std::uint64_t>(c.payload.size()) * 8 /
                               static_cast<std::uint64_t>(setup.scheme.min_code_length());
    setup.reserve = static_cast<std::size_t>(std::min(c.payload_length, most));
    return setup;
}

[[noreturn]] void throw_truncated(std::uint64_t decoded, std::uint64_t expected) {
    throw Error(ErrorKind::TruncatedPayload, "payload exhausted after " + std::to_string(decoded) + " of " +
                                                 std::to_string(expected) + " symbols");
}

[[noreturn]] void throw_invalid_code(std::uint64_t index, int area, std::uint32_t suffix, int count) {
    throw Error(ErrorKind::InvalidCode, "symbol " + std::to_string(index) + ": suffix " + std::to_string(suffix) +
                                            " >= " + std::to_string(count) + " symbols in area " +
                                            std::to_string(area + 1));
}

} // namespace

std::vector<std::uint8_t> decode(const QlcContainer& c) {
    const DecodeSetup setup = prepare(c);

    struct AreaEntry {
        int symbol_bits;
        std::uint32_t base;
        std::uint32_t count;
    };
    std::array<AreaEntry, kNumAreas> areas{};
    for (int a = 0; a < kNumAreas; ++a) {
        const QlcArea& area = setup.scheme.areas[a];
        areas[a] = AreaEntry{area.symbol_bits, static_cast<std::uint32_t>(area.base_offset),
                             static_cast<std::uint32_t>(area.count)};
    }
    std::vector<std::uint8_t> out(setup.reserve);
    BitReader reader(c.payload);
    for (std::uint64_t i = 0; i < c.payload_length; ++i) {
        if (i == out.size()) {
            throw_truncated(i, c.payload_length);
        }
        const std::uint32_t word = reader.peek32();
        const std::uint32_t code = word >> (32 - kPrefixBits);
        const AreaEntry& area = areas[code];
        const int length = kPrefixBits + area.symbol_bits;
        if (reader.bits_remaining() < static_cast<std::uint64_t>(length)) {
            throw_truncated(i, c.payload_length);
        }
        const std::uint32_t suffix = area.symbol_bits == 0 ? 0 : (word << kPrefixBits) >> (32 - area.symbol_bits);
        if (suffix >= area.count) {
            throw_invalid_code(i, static_cast<int>(code), suffix, static_cast<int>(area.count));
        }
        reader.skip(length);
        out[i] = setup.output_of[area.base + suffix];
    }

    if (reader.bits_remaining() > 7) {
        throw Error(ErrorKind::TrailingGarbage,
                    std::to_string(reader.bits_remaining()) + " unread bits after the last symbol");
    }
    if (!reader.rest_is_zero()) {
        throw Error(ErrorKind::TrailingGarbage, "padding bits are not zero");
    }
    return out;
}

std::vector<std::uint8_t> decode_bit_sequential(const QlcContainer& c) {
    const DecodeSetup setup = prepare(c);
    const std::uint64_t total_bits = static_cast<std::uint64_t>(c.payload.size()) * 8;
    std::uint64_t pos = 0;
    std::uint64_t decoded = 0;

    auto next_bit = [&]() -> std::uint32_t {
        if (pos >= total_bits) {
            throw_truncated(decoded, c.payload_length);
        }
        const std::uint32_t bit = (c.payload[pos >> 3] >> (7 - (pos & 7))) & 1u;
        ++pos;
        return bit;
    };

    std::vector<std::uint8_t> out;
    out.reserve(setup.reserve);
    for (; decoded < c.payload_length; ++decoded) {
        std::uint32_t code = 0;
        for (int b = 0; b < kPrefixBits; ++b) {
            code = (code << 1) | next_bit();
        }
        const QlcArea& area = setup.scheme.areas[code];
        std::uint32_t suffix = 0;
        for (int b = 0; b < area.symbol_bits; ++b) {
            suffix = (suffix << 1) | next_bit();
        }
        if (suffix >= static_cast<std::uint32_t>(area.count)) {
            throw_invalid_code(decoded, static_cast<int>(code), suffix, area.count);
        }
        out.push_back(setup.output_of[area.base_offset + static_cast<int>(suffix)]);
    }

    if (total_bits - pos > 7) {
        throw Error(ErrorKind::TrailingGarbage, std::to_string(total_bits - pos) + " unread bits after the last symbol");
    }
    for (; pos < total_bits; ++pos) {
        if ((c.payload[pos >> 3] >> (7 - (pos & 7))) & 1u) {
            throw Error(ErrorKind::TrailingGarbage, "padding bits are not zero");
        }
    }
    return out;
}

} // namespace qlc
