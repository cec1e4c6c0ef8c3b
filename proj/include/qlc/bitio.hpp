#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace qlc {

// MSB-first bit packer: the first bit written lands in bit 7 of byte 0.
// Trailing bits of the final byte are zero.
class BitWriter {
public:
    BitWriter() = default;

    void reserve_bits(std::uint64_t nbits) { bytes_.reserve(static_cast<std::size_t>((nbits + 7) / 8)); }

    // Appends the low `nbits` of `value`, most significant first. nbits <= 32.
    void put(std::uint32_t value, int nbits) {
        acc_ = (acc_ << nbits) | (value & mask(nbits));
        pending_ += nbits;
        bit_count_ += static_cast<std::uint64_t>(nbits);
        if (pending_ >= 32) {
            pending_ -= 32;
            const auto word = static_cast<std::uint32_t>(acc_ >> pending_);
            const std::uint8_t out[4] = {static_cast<std::uint8_t>(word >> 24), static_cast<std::uint8_t>(word >> 16),
                                         static_cast<std::uint8_t>(word >> 8), static_cast<std::uint8_t>(word)};
            bytes_.insert(bytes_.end(), out, out + 4);
        }
    }

    // nbits <= 64.
    void put_wide(std::uint64_t value, int nbits) {
        if (nbits > 32) {
            put(static_cast<std::uint32_t>(value >> 32), nbits - 32);
            put(static_cast<std::uint32_t>(value), 32);
        } else {
            put(static_cast<std::uint32_t>(value), nbits);
        }
    }

    [[nodiscard]] std::uint64_t bit_count() const noexcept { return bit_count_; }

    // Flushes pending bits (zero padded) and hands over the buffer.
    [[nodiscard]] std::vector<std::uint8_t> finish() && {
        while (pending_ >= 8) {
            pending_ -= 8;
            bytes_.push_back(static_cast<std::uint8_t>(acc_ >> pending_));
        }
        if (pending_ > 0) {
            bytes_.push_back(static_cast<std::uint8_t>(acc_ << (8 - pending_)));
            pending_ = 0;
        }
        return std::move(bytes_);
    }

private:
    static constexpr std::uint64_t mask(int nbits) noexcept {
        return nbits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nbits) - 1;
    }

    std::vector<std::uint8_t> bytes_;
    std::uint64_t acc_ = 0;
    int pending_ = 0; // < 32 between calls
    std::uint64_t bit_count_ = 0;
};

// MSB-first reader over a byte span. Peeks load an unaligned 64-bit window
// at the current position; bits past the end read as zero.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) noexcept
        : bytes_(bytes), total_bits_(static_cast<std::uint64_t>(bytes.size()) * 8) {}

    [[nodiscard]] std::uint64_t bits_remaining() const noexcept { return total_bits_ - pos_; }

    // Next 32 bits, left-aligned, zero filled past the end.
    [[nodiscard]] std::uint32_t peek32() const noexcept {
        return static_cast<std::uint32_t>(window() >> 32);
    }

    // nbits in 1..32; does not check bounds.
    [[nodiscard]] std::uint32_t peek(int nbits) const noexcept { return peek32() >> (32 - nbits); }

    void skip(int nbits) noexcept { pos_ += static_cast<std::uint64_t>(nbits); }

    // nbits in 0..32; does not check bounds.
    std::uint32_t take(int nbits) noexcept {
        if (nbits == 0) {
            return 0;
        }
        const std::uint32_t v = peek(nbits);
        skip(nbits);
        return v;
    }

    [[nodiscard]] bool rest_is_zero() const noexcept {
        if (pos_ >= total_bits_) {
            return true;
        }
        const std::size_t byte = static_cast<std::size_t>(pos_ / 8);
        if (static_cast<std::uint8_t>(bytes_[byte] << (pos_ % 8)) != 0) {
            return false;
        }
        for (std::size_t i = byte + 1; i < bytes_.size(); ++i) {
            if (bytes_[i] != 0) {
                return false;
            }
        }
        return true;
    }

private:
    [[nodiscard]] std::uint64_t window() const noexcept {
        const std::size_t byte = static_cast<std::size_t>(pos_ / 8);
        std::uint64_t w = 0;
        if (byte + 8 <= bytes_.size()) {
            std::memcpy(&w, bytes_.data() + byte, 8);
            if constexpr (std::endian::native == std::endian::little) {
                w = __builtin_bswap64(w);
            }
        } else {
            for (std::size_t i = 0; i < 8 && byte + i < bytes_.size(); ++i) {
                w |= static_cast<std::uint64_t>(bytes_[byte + i]) << (56 - 8 * i);
            }
        }
        return w << (pos_ % 8);
    }

    std::span<const std::uint8_t> bytes_;
    std::uint64_t total_bits_ = 0;
    std::uint64_t pos_ = 0;
};

} // namespace qlc
