#include "exmatch/kgraph.hpp"

#include <algorithm>
#include <string>

#include "exmatch/errors.hpp"

namespace exmatch {

KGraph KGraph::build(int n, int k, std::vector<VertexSet> edges, bool dedupe) {
    if (k < 2 || n < k) throw domain_error("require n >= k >= 2");
    if (n > kMaxVertices)
        throw domain_error("graph operations support n <= " + std::to_string(kMaxVertices));
    VertexSet universe = VertexSet::full(n);
    for (const VertexSet& e : edges) {
        if (e.count() != k) throw domain_error("edge is not a k-set");
        if (!e.subset_of(universe)) throw domain_error("edge vertex outside [1, n]");
    }
    std::sort(edges.begin(), edges.end(), lex_less_same_card);
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        if (!dedupe) throw internal_error("duplicate edge in internally built graph");
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    KGraph g;
    g.n_ = n;
    g.k_ = k;
    g.edges_ = std::move(edges);
    g.index_.reserve(g.edges_.size() * 2);
    g.deg_.assign(static_cast<std::size_t>(n), 0);
    for (const VertexSet& e : g.edges_) {
        g.index_.insert(e);
        for (int v : e.to_vector()) ++g.deg_[static_cast<std::size_t>(v - 1)];
    }
    return g;
}

KGraph make_graph(int n, int k, const std::vector<std::vector<int>>& edges) {
    if (k < 2 || n < k) throw domain_error("require n >= k >= 2");
    std::vector<VertexSet> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != k) throw domain_error("edge is not a k-set");
        VertexSet m;
        for (int v : e) {
            if (v < 1 || v > n) throw domain_error("edge vertex outside [1, n]");
            if (m.test(v)) throw domain_error("repeated vertex inside an edge");
            m.set(v);
        }
        masks.push_back(m);
    }
    return KGraph::build(n, k, std::move(masks), /*dedupe=*/true);
}

LinkFamily link(const KGraph& g, int x, std::optional<int> with_v, std::optional<int> avoid_v) {
    if (x < 1 || x > g.n()) throw domain_error("link vertex outside [1, n]");
    if (with_v && avoid_v) throw domain_error("with_v and avoid_v cannot both be set");
    for (std::optional<int> o : {with_v, avoid_v}) {
        if (!o) continue;
        if (*o < 1 || *o > g.n()) throw domain_error("link vertex outside [1, n]");
        if (*o == x) throw domain_error("link vertices must be distinct");
    }

    VertexSet removed;
    removed.set(x);
    if (with_v) removed.set(*with_v);

    LinkFamily out;
    out.n = g.n();
    out.set_size = g.k() - (with_v ? 2 : 1);
    for (const VertexSet& e : g.edges()) {
        if (!e.test(x)) continue;
        if (with_v && !e.test(*with_v)) continue;
        if (avoid_v && e.test(*avoid_v)) continue;
        out.sets.push_back(e.without(removed));
    }
    // Edge order is lex; dropping the same vertices keeps residues lex too
    // only for N(x); for N(x,y) it still holds since x, y are shared. No
    // duplicates can arise either way.
    std::sort(out.sets.begin(), out.sets.end(), lex_less_same_card);
    return out;
}

KGraph induced(const KGraph& g, const VertexSet& s) {
    if (!s.subset_of(VertexSet::full(g.n()))) throw domain_error("S must be a subset of [1, n]");
    std::vector<VertexSet> kept;
    for (const VertexSet& e : g.edges())
        if (e.subset_of(s)) kept.push_back(e);
    return KGraph::build(g.n(), g.k(), std::move(kept), /*dedupe=*/false);
}

std::vector<int> isolated_vertices(const KGraph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) == 0) out.push_back(v);
    return out;
}

bool is_nontrivial(const KGraph& g) {
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) == 0) return false;
    return true;
}

}  // namespace exmatch
