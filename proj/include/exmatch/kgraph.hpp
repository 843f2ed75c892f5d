#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "exmatch/vertex_set.hpp"

namespace exmatch {

// Immutable k-uniform hypergraph on the labelled vertex set [1, n].
// Edges are kept in lexicographic order of their ascending vertex lists;
// labels survive every operation and n never changes implicitly.
class KGraph {
public:
    KGraph() = default;

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(std::size_t i) const { return edges_[i]; }
    bool contains(const VertexSet& e) const { return index_.count(e) != 0; }

    // Degree of vertex v in [1, n].
    int degree(int v) const { return deg_[static_cast<std::size_t>(v - 1)]; }
    // Degrees indexed by v-1.
    const std::vector<int>& degrees() const { return deg_; }

    bool operator==(const KGraph& o) const {
        return n_ == o.n_ && k_ == o.k_ && edges_ == o.edges_;
    }

    // edges must each have exactly k vertices within [1, n]. With dedupe the
    // list is sorted and repeated edges collapse; without it a repeat is an
    // internal error (callers that forbid duplicates check before building).
    static KGraph build(int n, int k, std::vector<VertexSet> edges, bool dedupe);

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<VertexSet> edges_;
    std::unordered_set<VertexSet, VertexSetHash> index_;
    std::vector<int> deg_;
};

// Validates n >= k >= 2, n <= kMaxVertices, vertex ranges, edge arity;
// duplicate input edges collapse to one.
KGraph make_graph(int n, int k, const std::vector<std::vector<int>>& edges);

// Link family: residues of the edges through x (with/without a second
// vertex), on the same universe [1, n].
struct LinkFamily {
    int n = 0;
    int set_size = 0;             // k-1, or k-2 when with_v is given
    std::vector<VertexSet> sets;  // lex sorted, no duplicates possible
};

// N(x) by default; with_v = y gives N(x, y) (edges through both, minus both);
// avoid_v = y gives N(x, y-bar) (edges through x avoiding y, minus x).
// with_v and avoid_v cannot both be set and must differ from x.
LinkFamily link(const KGraph& g, int x, std::optional<int> with_v = std::nullopt,
                std::optional<int> avoid_v = std::nullopt);

// Sub-hypergraph on the edges contained in s (s subset of [1, n]); vertex
// labels and n are preserved.
KGraph induced(const KGraph& g, const VertexSet& s);

std::vector<int> isolated_vertices(const KGraph& g);

// Non-trivial = every vertex of [1, n] lies on an edge.
bool is_nontrivial(const KGraph& g);

}  // namespace exmatch
