#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace exmatch {

inline constexpr int kMaxVertices = 128;

// Subset of the vertex universe [1, kMaxVertices]; vertex v lives at bit v-1.
struct VertexSet {
    std::uint64_t w0 = 0;
    std::uint64_t w1 = 0;

    static VertexSet full(int n) {
        VertexSet s;
        if (n >= 128) {
            s.w0 = s.w1 = ~std::uint64_t{0};
        } else if (n >= 64) {
            s.w0 = ~std::uint64_t{0};
            s.w1 = (std::uint64_t{1} << (n - 64)) - 1;
        } else if (n > 0) {
            s.w0 = (std::uint64_t{1} << n) - 1;
        }
        return s;
    }

    bool test(int v) const {
        return v <= 64 ? (w0 >> (v - 1)) & 1 : (w1 >> (v - 65)) & 1;
    }
    void set(int v) {
        if (v <= 64) w0 |= std::uint64_t{1} << (v - 1);
        else w1 |= std::uint64_t{1} << (v - 65);
    }
    void reset(int v) {
        if (v <= 64) w0 &= ~(std::uint64_t{1} << (v - 1));
        else w1 &= ~(std::uint64_t{1} << (v - 65));
    }

    int count() const { return std::popcount(w0) + std::popcount(w1); }
    bool empty() const { return (w0 | w1) == 0; }
    bool intersects(const VertexSet& o) const { return ((w0 & o.w0) | (w1 & o.w1)) != 0; }
    bool subset_of(const VertexSet& o) const { return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0; }

    // Smallest vertex, 0 when empty.
    int lowest() const {
        if (w0) return std::countr_zero(w0) + 1;
        if (w1) return std::countr_zero(w1) + 65;
        return 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = w0; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        for (std::uint64_t b = w1; b; b &= b - 1) out.push_back(std::countr_zero(b) + 65);
        return out;
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a.w0 &= b.w0; a.w1 &= b.w1; return a; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a.w0 |= b.w0; a.w1 |= b.w1; return a; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { a.w0 ^= b.w0; a.w1 ^= b.w1; return a; }
    VertexSet without(const VertexSet& o) const {
        VertexSet r = *this;
        r.w0 &= ~o.w0;
        r.w1 &= ~o.w1;
        return r;
    }
    bool operator==(const VertexSet&) const = default;
};

// Lexicographic order on ascending vertex lists, for sets of equal
// cardinality only: the owner of the lowest differing vertex comes first.
inline bool lex_less_same_card(const VertexSet& a, const VertexSet& b) {
    VertexSet d = a ^ b;
    int v = d.lowest();
    return v != 0 && a.test(v);
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::uint64_t h = s.w0 * 0x9e3779b97f4a7c15ULL;
        h ^= s.w1 + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace exmatch
