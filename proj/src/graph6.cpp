#include "addpair/graph6.hpp"

#include <string>

#include "addpair/error.hpp"

namespace addpair {

namespace {

constexpr int kBias = 63;

std::size_t packed_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    const int header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw ParseError("multi-byte graph6 header (order > 62) is not supported", 0);
    if (header < kBias || header > kBias + kGraph6MaxOrder) {
        throw ParseError("invalid graph6 header character", 0);
    }
    const int n = header - kBias;
    const std::size_t expected = 1 + packed_length(n);
    for (std::size_t i = 1; i < text.size() && i < expected; ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > kBias + 63) throw ParseError("invalid graph6 data character", i);
    }
    if (text.size() < expected) {
        throw ParseError("truncated graph6 string: expected " + std::to_string(expected) + " bytes, got " +
                             std::to_string(text.size()),
                         text.size());
    }
    if (text.size() > expected) {
        throw ParseError("trailing bytes after graph6 string of order " + std::to_string(n), expected);
    }

    GraphBuilder builder(n);
    std::size_t bit = 0;
    auto next_bit = [&]() {
        const int group = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
        const bool set = (group >> (5 - bit % 6)) & 1;
        ++bit;
        return set;
    };
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (next_bit()) builder.add_edge(i, j);
        }
    }
    if (bit % 6 != 0) {
        const int group = static_cast<unsigned char>(text[expected - 1]) - kBias;
        if (group & ((1 << (6 - bit % 6)) - 1)) {
            throw ParseError("nonzero padding bits in final graph6 byte", expected - 1);
        }
    }
    return builder.build();
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw UnsupportedSize("graph6 writer supports order <= 62, got " + std::to_string(n));
    }
    std::string out(1 + packed_length(n), static_cast<char>(kBias));
    out[0] = static_cast<char>(n + kBias);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
        }
    }
    return out;
}

}  // namespace addpair
