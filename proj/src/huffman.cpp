#include "qlc/huffman.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

#include "qlc/bitio.hpp"
#include "qlc/error.hpp"

namespace qlc {

int HuffmanCode::present_symbols() const noexcept {
    return static_cast<int>(std::count_if(lengths.begin(), lengths.end(), [](int l) { return l > 0; }));
}

int HuffmanCode::distinct_lengths() const noexcept {
    std::set<int> seen;
    for (int l : lengths) {
        if (l > 0) {
            seen.insert(l);
        }
    }
    return static_cast<int>(seen.size());
}

namespace {

struct TreeNode {
    std::uint64_t weight;
    int min_symbol;
    int left = -1;
    int right = -1;
};

void assign_canonical(HuffmanCode& code) {
    std::vector<int> symbols;
    for (int v = 0; v < static_cast<int>(kAlphabetSize); ++v) {
        if (code.lengths[v] > 0) {
            symbols.push_back(v);
        }
    }
    std::sort(symbols.begin(), symbols.end(), [&code](int a, int b) {
        return std::tie(code.lengths[a], a) < std::tie(code.lengths[b], b);
    });
    if (code.max_length > kMaxStoredCodeLength) {
        return;
    }
    std::uint64_t next = 0;
    int prev_length = code.lengths[symbols.front()];
    for (int v : symbols) {
        next <<= (code.lengths[v] - prev_length);
        prev_length = code.lengths[v];
        code.codewords[v] = next++;
    }
}

} // namespace

HuffmanCode build_huffman(const Histogram256& h) {
    if (h.total == 0) {
        throw Error(ErrorKind::ZeroTotal, "cannot build a Huffman code from an empty histogram");
    }

    std::vector<TreeNode> nodes;
    nodes.reserve(2 * kAlphabetSize);
    // Min-heap on (weight, smallest contained symbol).
    auto heavier = [&nodes](int a, int b) {
        return std::tie(nodes[a].weight, nodes[a].min_symbol) > std::tie(nodes[b].weight, nodes[b].min_symbol);
    };
    std::priority_queue<int, std::vector<int>, decltype(heavier)> heap(heavier);
    for (int v = 0; v < static_cast<int>(kAlphabetSize); ++v) {
        if (h.counts[v] > 0) {
            nodes.push_back(TreeNode{h.counts[v], v});
            heap.push(static_cast<int>(nodes.size()) - 1);
        }
    }

    HuffmanCode code;
    if (nodes.size() == 1) {
        code.lengths[nodes.front().min_symbol] = 1;
    } else {
        while (heap.size() > 1) {
            const int a = heap.top();
            heap.pop();
            const int b = heap.top();
            heap.pop();
            nodes.push_back(TreeNode{nodes[a].weight + nodes[b].weight,
                                     std::min(nodes[a].min_symbol, nodes[b].min_symbol), a, b});
            heap.push(static_cast<int>(nodes.size()) - 1);
        }
        // Depth-first walk from the root assigns leaf depths.
        std::vector<std::pair<int, int>> stack{{heap.top(), 0}};
        while (!stack.empty()) {
            const auto [index, depth] = stack.back();
            stack.pop_back();
            const TreeNode& node = nodes[index];
            if (node.left < 0) {
                code.lengths[node.min_symbol] = depth;
            } else {
                stack.emplace_back(node.left, depth + 1);
                stack.emplace_back(node.right, depth + 1);
            }
        }
    }

    code.min_length = std::numeric_limits<int>::max();
    for (int l : code.lengths) {
        if (l > 0) {
            code.min_length = std::min(code.min_length, l);
            code.max_length = std::max(code.max_length, l);
        }
    }
    assign_canonical(code);
    return code;
}

double huffman_expected_length(const HuffmanCode& c, const Pmf256& p) {
    double bits = 0.0;
    for (std::size_t v = 0; v < kAlphabetSize; ++v) {
        if (p.probs[v] > 0.0) {
            if (c.lengths[v] == 0) {
                throw Error(ErrorKind::MissingCode, "byte value " + std::to_string(v) + " has no Huffman code");
            }
            bits += p.probs[v] * c.lengths[v];
        }
    }
    return bits;
}

HuffmanBits huffman_encode(std::span<const std::uint8_t> data, const HuffmanCode& c) {
    if (c.max_length > kMaxStoredCodeLength) {
        throw Error(ErrorKind::CodeTooLong, "longest code is " + std::to_string(c.max_length) + " bits");
    }
    BitWriter writer;
    writer.reserve_bits(static_cast<std::uint64_t>(data.size()) * 8);
    for (std::uint8_t v : data) {
        const int length = c.lengths[v];
        if (length == 0) {
            throw Error(ErrorKind::MissingCode, "byte value " + std::to_string(v) + " has no Huffman code");
        }
        writer.put_wide(c.codewords[v], length);
    }
    const std::uint64_t bits = writer.bit_count();
    return HuffmanBits{std::move(writer).finish(), bits};
}

HuffmanDecoder::HuffmanDecoder(const HuffmanCode& c) {
    if (c.max_length > kMaxStoredCodeLength) {
        throw Error(ErrorKind::CodeTooLong, "longest code is " + std::to_string(c.max_length) + " bits");
    }
    nodes_.emplace_back();
    for (int v = 0; v < static_cast<int>(kAlphabetSize); ++v) {
        const int length = c.lengths[v];
        if (length == 0) {
            continue;
        }
        std::int32_t at = 0;
        for (int b = length - 1; b >= 0; --b) {
            const int bit = static_cast<int>((c.codewords[v] >> b) & 1u);
            if (nodes_[at].child[bit] < 0) {
                nodes_[at].child[bit] = static_cast<std::int32_t>(nodes_.size());
                nodes_.emplace_back();
            }
            at = nodes_[at].child[bit];
        }
        nodes_[at].symbol = v;
    }
}

std::vector<std::uint8_t> HuffmanDecoder::decode(std::span<const std::uint8_t> bytes, std::uint64_t bit_count,
                                                 std::uint64_t symbols) const {
    bit_count = std::min<std::uint64_t>(bit_count, static_cast<std::uint64_t>(bytes.size()) * 8);
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(std::min(symbols, bit_count)));
    std::uint64_t pos = 0;
    for (std::uint64_t i = 0; i < symbols; ++i) {
        std::int32_t at = 0;
        while (nodes_[at].symbol < 0) {
            if (pos >= bit_count) {
                throw Error(ErrorKind::TruncatedPayload, "bits exhausted after " + std::to_string(i) + " symbols");
            }
            const int bit = (bytes[pos >> 3] >> (7 - (pos & 7))) & 1;
            ++pos;
            at = nodes_[at].child[bit];
            if (at < 0) {
                throw Error(ErrorKind::InvalidCode, "bit path leaves the code tree at bit " + std::to_string(pos - 1));
            }
        }
        out.push_back(static_cast<std::uint8_t>(nodes_[at].symbol));
    }
    if (pos != bit_count) {
        throw Error(ErrorKind::TrailingGarbage, std::to_string(bit_count - pos) + " unread bits after the last symbol");
    }
    return out;
}

std::vector<std::uint8_t> huffman_decode(const HuffmanBits& bits, const HuffmanCode& c, std::uint64_t symbols) {
    return HuffmanDecoder(c).decode(bits.bytes, bits.bit_count, symbols);
}

} // namespace qlc
