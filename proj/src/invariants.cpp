#include "exmatch/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "exmatch/errors.hpp"
#include "exmatch/numbers.hpp"

namespace exmatch {
namespace {

struct NodeCounter {
    std::uint64_t used = 0;
    std::uint64_t limit;
    explicit NodeCounter(Budget b) : limit(b.limit) {}
    void tick() {
        if (++used > limit) throw budget_error("node budget exhausted", used);
    }
};

// Maximum matching over an explicit edge list. Branches include-first on the
// lex-smallest edge disjoint from the current union, so matchings are visited
// in lexicographic order of their edge-index sequences and the first optimum
// found is the lex-least one. Capacity bound: free vertices still reachable
// in the suffix, divided by k.
struct MatchingSearch {
    const std::vector<VertexSet>& edges;
    int k;
    NodeCounter& nodes;
    std::vector<VertexSet> suffix_union;

    VertexSet used;
    std::vector<std::size_t> cur;
    std::vector<std::size_t> best_idx;
    int best = 0;

    MatchingSearch(const std::vector<VertexSet>& eds, int arity, NodeCounter& counter)
        : edges(eds), k(arity), nodes(counter) {
        suffix_union.assign(edges.size() + 1, VertexSet{});
        for (std::size_t j = edges.size(); j-- > 0;)
            suffix_union[j] = suffix_union[j + 1] | edges[j];
    }

    void seed_greedy() {
        VertexSet u;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (edges[j].intersects(u)) continue;
            best_idx.push_back(j);
            u = u | edges[j];
        }
        best = static_cast<int>(best_idx.size());
    }

    void dfs(std::size_t i) {
        nodes.tick();
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_idx = cur;
        }
        for (std::size_t j = i; j < edges.size(); ++j) {
            if (edges[j].intersects(used)) continue;
            int avail = suffix_union[j].without(used).count();
            if (static_cast<int>(cur.size()) + avail / k <= best) return;
            VertexSet saved = used;
            cur.push_back(j);
            used = used | edges[j];
            dfs(j + 1);
            used = saved;
            cur.pop_back();
        }
    }
};

// Decision form: a matching of size t avoiding `avoid`, with early exit.
bool matching_decision(const std::vector<VertexSet>& edges, int k, int t, const VertexSet& avoid,
                       NodeCounter& nodes) {
    if (t <= 0) return true;
    std::vector<VertexSet> eds;
    for (const VertexSet& e : edges)
        if (!e.intersects(avoid)) eds.push_back(e);
    std::vector<VertexSet> suffix(eds.size() + 1);
    for (std::size_t j = eds.size(); j-- > 0;) suffix[j] = suffix[j + 1] | eds[j];

    VertexSet used;
    auto dfs = [&](auto&& self, std::size_t i, int cnt) -> bool {
        nodes.tick();
        if (cnt == t) return true;
        for (std::size_t j = i; j < eds.size(); ++j) {
            if (eds[j].intersects(used)) continue;
            int avail = suffix[j].without(used).count();
            if (cnt + avail / k < t) return false;
            VertexSet saved = used;
            used = used | eds[j];
            if (self(self, j + 1, cnt + 1)) return true;
            used = saved;
        }
        return false;
    };
    return dfs(dfs, 0, 0);
}

// Lex-ascending k-subsets of [n]; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::string format_matching(const std::vector<VertexSet>& edges, std::size_t count) {
    std::ostringstream out;
    for (std::size_t i = 0; i < count && i < edges.size(); ++i) {
        if (i) out << ", ";
        out << '{';
        bool first = true;
        for (int v : edges[i].to_vector()) {
            if (!first) out << ',';
            out << v;
            first = false;
        }
        out << '}';
    }
    return out.str();
}

}  // namespace

InvariantResult matching_number(const KGraph& g, Budget budget) {
    NodeCounter counter(budget);
    MatchingSearch s(g.edges(), g.k(), counter);
    s.seed_greedy();
    s.dfs(0);

    InvariantResult r;
    r.value = s.best;
    for (std::size_t j : s.best_idx) r.witness_edges.push_back(g.edge(j));
    r.nodes = counter.used;
    return r;
}

InvariantResult cover_number(const KGraph& g, Budget budget) {
    NodeCounter counter(budget);

    // Seed bound: vertices of a greedy maximal matching form a cover.
    VertexSet gu;
    for (const VertexSet& e : g.edges()) {
        if (e.intersects(gu)) continue;
        gu = gu | e;
    }
    int best = gu.count() + 1;  // bound only; size-(best-1) covers stay reachable
    VertexSet best_cover;
    bool found = false;
    VertexSet cover;

    auto uncovered_lb = [&]() {
        // Greedy matching among uncovered edges: disjoint uncovered edges
        // need distinct cover vertices.
        VertexSet u;
        int lb = 0;
        for (const VertexSet& e : g.edges()) {
            if (e.intersects(cover) || e.intersects(u)) continue;
            u = u | e;
            ++lb;
        }
        return lb;
    };

    auto dfs = [&](auto&& self) -> void {
        counter.tick();
        const VertexSet* open = nullptr;
        for (const VertexSet& e : g.edges()) {
            if (!e.intersects(cover)) {
                open = &e;
                break;
            }
        }
        if (!open) {
            int size = cover.count();
            if (size < best) {
                best = size;
                best_cover = cover;
                found = true;
            }
            return;
        }
        if (cover.count() + uncovered_lb() >= best) return;
        for (int v : open->to_vector()) {
            cover.set(v);
            self(self);
            cover.reset(v);
        }
    };
    dfs(dfs);

    if (!found) throw internal_error("cover search ended with no cover");
    InvariantResult r;
    r.value = best;
    r.witness_vertices = best_cover;
    r.nodes = counter.used;
    return r;
}

InvariantResult clique_number(const KGraph& g, Budget budget) {
    NodeCounter counter(budget);
    const int n = g.n();
    const int k = g.k();

    // Any (k-1)-set is vacuously complete.
    int best = k - 1;
    VertexSet best_w;
    for (int v = 1; v <= k - 1; ++v) best_w.set(v);

    Bint member_deg_floor = binomial(best, k - 1);

    std::vector<int> w;  // current clique, ascending
    auto extends = [&](int v) {
        // With |w| < k-1 any vertex extends; otherwise every (k-1)-subset of
        // w must close into an edge with v.
        int m = static_cast<int>(w.size());
        if (m < k - 1) return true;
        std::vector<int> idx(static_cast<std::size_t>(k - 1));
        for (int i = 0; i < k - 1; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet e;
            for (int i : idx) e.set(w[static_cast<std::size_t>(i)]);
            e.set(v);
            if (!g.contains(e)) return false;
            int i = k - 2;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k - 1; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        return true;
    };

    auto dfs = [&](auto&& self, int from) -> void {
        counter.tick();
        if (static_cast<int>(w.size()) > best) {
            best = static_cast<int>(w.size());
            best_w = VertexSet::of(w);
            member_deg_floor = binomial(best, k - 1);
        }
        for (int v = from; v <= n; ++v) {
            if (static_cast<int>(w.size()) + (n - v + 1) <= best) return;
            // A clique beating the incumbent needs members of degree
            // >= C(best, k-1).
            if (Bint(g.degree(v)) < member_deg_floor) continue;
            if (!extends(v)) continue;
            w.push_back(v);
            self(self, v + 1);
            w.pop_back();
        }
    };
    dfs(dfs, 1);

    InvariantResult r;
    r.value = best;
    r.witness_vertices = best_w;
    r.nodes = counter.used;
    return r;
}

bool has_matching_avoiding(const KGraph& g, int t, const VertexSet& avoid, Budget budget) {
    NodeCounter counter(budget);
    return matching_decision(g.edges(), g.k(), t, avoid, counter);
}

KGraph saturate(const KGraph& g, int s, Budget budget) {
    if (s < 0) throw domain_error("saturate: s must be >= 0");
    NodeCounter counter(budget);

    if (matching_decision(g.edges(), g.k(), s + 1, VertexSet{}, counter)) {
        InvariantResult full = matching_number(g, Budget{budget.limit});
        throw domain_error("saturate: nu(F) = " + std::to_string(full.value) + " exceeds s = " +
                           std::to_string(s) + "; (s+1)-matching witness: " +
                           format_matching(full.witness_edges, static_cast<std::size_t>(s) + 1));
    }

    std::vector<VertexSet> edges = g.edges();
    std::unordered_set<VertexSet, VertexSetHash> present(edges.begin(), edges.end());

    std::vector<int> c(static_cast<std::size_t>(g.k()));
    for (int i = 0; i < g.k(); ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        counter.tick();
        VertexSet e = VertexSet::of(c);
        if (!present.count(e)) {
            // Adding e keeps nu <= s iff no s-matching avoids e's vertices.
            if (!matching_decision(edges, g.k(), s, e, counter)) {
                edges.push_back(e);
                present.insert(e);
            }
        }
        if (!next_combination(c, g.n())) break;
    }
    return KGraph::build(g.n(), g.k(), std::move(edges), /*dedupe=*/false);
}

bool is_saturated(const KGraph& g, int s, Budget budget) {
    if (s < 0) throw domain_error("is_saturated: s must be >= 0");
    NodeCounter counter(budget);
    if (matching_decision(g.edges(), g.k(), s + 1, VertexSet{}, counter)) return false;

    std::vector<int> c(static_cast<std::size_t>(g.k()));
    for (int i = 0; i < g.k(); ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        counter.tick();
        VertexSet e = VertexSet::of(c);
        if (!g.contains(e)) {
            if (!matching_decision(g.edges(), g.k(), s, e, counter)) return false;
        }
        if (!next_combination(c, g.n())) break;
    }
    return true;
}

}  // namespace exmatch
