#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace addpair {

inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} stored in a single machine word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t bits) : bits_(bits) {}

        constexpr int operator*() const { return std::countr_zero(bits_); }
        constexpr iterator& operator++() {
            bits_ &= bits_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t bits_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet{n >= kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    static constexpr VertexSet of(std::initializer_list<int> vertices) {
        std::uint64_t bits = 0;
        for (int v : vertices) bits |= std::uint64_t{1} << v;
        return VertexSet{bits};
    }
    static VertexSet from_vector(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s = s.with(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }
    constexpr int highest() const { return 63 - std::countl_zero(bits_); }
    constexpr VertexSet with(int v) const { return VertexSet{bits_ | (std::uint64_t{1} << v)}; }
    constexpr VertexSet without(int v) const { return VertexSet{bits_ & ~(std::uint64_t{1} << v)}; }
    /// Members strictly greater than v.
    constexpr VertexSet above(int v) const {
        return v >= kMaxVertices - 1 ? VertexSet{} : VertexSet{bits_ & (~std::uint64_t{0} << (v + 1))};
    }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{}; }

    std::vector<int> to_vector() const { return {begin(), end()}; }
    std::string to_string() const {
        std::string out = "{";
        for (int v : *this) {
            if (out.size() > 1) out += ",";
            out += std::to_string(v);
        }
        return out + "}";
    }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet{a.bits_ ^ b.bits_}; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member lists of a and b.
constexpr bool lex_less(VertexSet a, VertexSet b) {
    VertexSet diff = a ^ b;
    if (diff.empty()) return false;
    int d = diff.lowest();
    if (a.contains(d)) {
        // a has d next; b either continues with something larger or has ended.
        return !(b.above(d)).empty();
    }
    return (a.above(d)).empty();
}

}  // namespace addpair
