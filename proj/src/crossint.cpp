#include "exmatch/crossint.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>

#include "exmatch/errors.hpp"

namespace exmatch {

CrossCheck is_cross_intersecting(const CrossSystem& sys) {
    if (sys.t < 2) throw domain_error("cross system needs t >= 2");
    if (static_cast<int>(sys.families.size()) != sys.t)
        throw domain_error("cross system holds " + std::to_string(sys.families.size()) +
                           " families, expected t = " + std::to_string(sys.t));
    for (const KGraph& f : sys.families)
        if (f.n() != sys.n || f.k() != sys.k)
            throw domain_error("cross system families disagree on n or k");

    CrossCheck out;
    for (int a = 0; a < sys.t; ++a) {
        for (int b = a + 1; b < sys.t; ++b) {
            for (const VertexSet& ea : sys.families[static_cast<std::size_t>(a)].edges()) {
                for (const VertexSet& eb : sys.families[static_cast<std::size_t>(b)].edges()) {
                    if (!ea.intersects(eb)) {
                        out.ok = false;
                        out.family_a = a + 1;
                        out.family_b = b + 1;
                        out.edge_a = ea;
                        out.edge_b = eb;
                        return out;
                    }
                }
            }
        }
    }
    return out;
}

Bint sfq_bound(int n, int k, int t) {
    if (k < 1) throw domain_error("sfq_bound requires k >= 1");
    if (n < 2 * k) throw domain_error("sfq_bound requires n >= 2k");
    if (t < 2) throw domain_error("sfq_bound requires t >= 2");
    Bint first = binomial(n, k) - binomial(n - k, k) + t - 1;
    Bint second = Bint(t) * binomial(n - 1, k - 1);
    return std::max(first, second);
}

namespace {

// Lex-ordered k-sets of [n].
std::vector<VertexSet> universe(int n, int k) {
    std::vector<VertexSet> out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(j)] = j + 1;
    while (true) {
        out.push_back(VertexSet::of(c));
        int j = k - 1;
        while (j >= 0 && c[static_cast<std::size_t>(j)] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++c[static_cast<std::size_t>(j)];
        for (int t2 = j + 1; t2 < k; ++t2)
            c[static_cast<std::size_t>(t2)] = c[static_cast<std::size_t>(t2 - 1)] + 1;
    }
    return out;
}

struct CandidateBest {
    Bint sum = -1;
    std::uint32_t a1 = 0;
    std::uint32_t tr = 0;
};

// Set-lex on edge-index sets: owner of the lowest differing index is smaller.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t d = a ^ b;
    if (d == 0) return false;
    return (a >> std::countr_zero(d)) & 1;
}

}  // namespace

CrossOracleResult max_cross_sum_oracle(int n, int k, int t, int threads) {
    if (k < 2 || n < k) throw domain_error("require n >= k >= 2");
    if (t < 2) throw domain_error("oracle requires t >= 2");
    Bint total = binomial(n, k);
    if (total > 22) throw domain_error("oracle guard: C(n,k) must be <= 22");
    if (threads < 1) throw domain_error("threads must be >= 1");

    const std::vector<VertexSet> edges = universe(n, k);
    const int m = static_cast<int>(edges.size());
    std::vector<std::uint32_t> meets(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (edges[static_cast<std::size_t>(i)].intersects(edges[static_cast<std::size_t>(j)]))
                meets[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

    const std::uint64_t space = std::uint64_t{1} << m;
    auto evaluate = [&](std::uint64_t lo, std::uint64_t hi) {
        CandidateBest best;
        for (std::uint64_t a1 = lo; a1 < hi; ++a1) {
            if (a1 == 0) continue;
            std::uint32_t s = static_cast<std::uint32_t>(a1);
            // Transversal family of A_1: indices whose edge meets all of A_1.
            std::uint32_t tr = 0;
            for (int j = 0; j < m; ++j)
                if ((s & ~meets[static_cast<std::size_t>(j)]) == 0) tr |= std::uint32_t{1} << j;
            if (tr == 0) continue;  // families must be non-empty
            if (t >= 3) {
                // A_2..A_t pairwise cross-intersecting forces the transversal
                // family to be intersecting.
                bool ok = true;
                for (std::uint32_t rest = tr; rest && ok; rest &= rest - 1) {
                    int j = std::countr_zero(rest);
                    if (tr & ~meets[static_cast<std::size_t>(j)]) ok = false;
                }
                if (!ok) continue;
            }
            Bint sum = Bint(std::popcount(s)) +
                       Bint(t - 1) * static_cast<unsigned>(std::popcount(tr));
            if (sum > best.sum || (sum == best.sum && mask_lex_less(s, best.a1))) {
                best.sum = sum;
                best.a1 = s;
                best.tr = tr;
            }
        }
        return best;
    };

    std::vector<CandidateBest> partial(static_cast<std::size_t>(threads));
    if (threads == 1) {
        partial[0] = evaluate(1, space);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (space + static_cast<std::uint64_t>(threads) - 1) /
                              static_cast<std::uint64_t>(threads);
        for (int c = 0; c < threads; ++c) {
            std::uint64_t lo = chunk * static_cast<std::uint64_t>(c);
            std::uint64_t hi = std::min(space, lo + chunk);
            pool.emplace_back([&, lo, hi, c] { partial[static_cast<std::size_t>(c)] = evaluate(lo, hi); });
        }
        for (auto& th : pool) th.join();
    }

    CandidateBest best;
    for (const CandidateBest& p : partial) {
        if (p.sum < 0) continue;
        if (p.sum > best.sum || (p.sum == best.sum && mask_lex_less(p.a1, best.a1)))
            best = p;
    }
    if (best.sum < 0) throw internal_error("oracle found no candidate");

    auto to_graph = [&](std::uint32_t mask) {
        std::vector<VertexSet> es;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            es.push_back(edges[static_cast<std::size_t>(std::countr_zero(rest))]);
        return KGraph::build(n, k, std::move(es), /*dedupe=*/false);
    };

    CrossOracleResult out;
    out.max_sum = best.sum;
    out.candidates = space - 1;
    out.certificate.n = n;
    out.certificate.k = k;
    out.certificate.t = t;
    out.certificate.families.push_back(to_graph(best.a1));
    for (int j = 1; j < t; ++j) out.certificate.families.push_back(to_graph(best.tr));
    return out;
}

}  // namespace exmatch
