#include "qlc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qlc/error.hpp"

namespace qlc {

Histogram256 build_histogram(std::span<const std::uint8_t> data) noexcept {
    // Four interleaved tables break the store-to-load dependency on runs of
    // the same byte.
    std::array<std::array<std::uint64_t, kAlphabetSize>, 4> partial{};
    std::size_t i = 0;
    for (; i + 4 <= data.size(); i += 4) {
        ++partial[0][data[i]];
        ++partial[1][data[i + 1]];
        ++partial[2][data[i + 2]];
        ++partial[3][data[i + 3]];
    }
    for (; i < data.size(); ++i) {
        ++partial[0][data[i]];
    }

    Histogram256 h;
    for (std::size_t v = 0; v < kAlphabetSize; ++v) {
        h.counts[v] = partial[0][v] + partial[1][v] + partial[2][v] + partial[3][v];
    }
    h.total = data.size();
    return h;
}

Pmf256 to_pmf(const Histogram256& h) {
    if (h.total == 0) {
        throw Error(ErrorKind::ZeroTotal, "histogram is empty; supply data or a preset scheme");
    }
    Pmf256 p;
    const auto total = static_cast<double>(h.total);
    for (std::size_t v = 0; v < kAlphabetSize; ++v) {
        p.probs[v] = static_cast<double>(h.counts[v]) / total;
    }
    return p;
}

EntropyReport shannon_entropy(const Pmf256& p) noexcept {
    double h = 0.0;
    for (double pi : p.probs) {
        if (pi > 0.0) {
            h -= pi * std::log2(pi);
        }
    }
    // Rounding can leave a point mass at -0.0 or a uniform PMF a hair
    // outside [0, 8].
    h = std::clamp(h, 0.0, 8.0);
    return EntropyReport{h, compressibility(h)};
}

SymbolOrder rank_symbols(const Pmf256& p) noexcept {
    SymbolOrder order;
    std::iota(order.begin(), order.end(), std::uint8_t{0});
    std::stable_sort(order.begin(), order.end(), [&p](std::uint8_t a, std::uint8_t b) {
        return p.probs[a] > p.probs[b];
    });
    return order;
}

} // namespace qlc
