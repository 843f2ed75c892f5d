#pragma once

#include <vector>

#include "exmatch/kgraph.hpp"
#include "exmatch/numbers.hpp"

namespace exmatch {

// t k-uniform families on a common [n].
struct CrossSystem {
    int n = 0;
    int k = 0;
    int t = 0;
    std::vector<KGraph> families;
};

struct CrossCheck {
    bool ok = true;
    // First failing pair in (family index, family index, lex edge) order.
    int family_a = 0;
    int family_b = 0;
    VertexSet edge_a;
    VertexSet edge_b;
};

// Every pair of edges from distinct families intersects. Mismatched n or k
// across families is an error.
CrossCheck is_cross_intersecting(const CrossSystem& sys);

// max{ C(n,k) - C(n-k,k) + t - 1, t*C(n-1,k-1) }; requires n >= 2k, t >= 2.
Bint sfq_bound(int n, int k, int t);

struct CrossOracleResult {
    Bint max_sum;
    CrossSystem certificate;  // lexicographically least maximizer
    std::uint64_t candidates = 0;
};

// Exact maximum of sum |A_i| over non-empty cross-intersecting t-tuples,
// searched by enumerating A_1 over non-empty subsets of C([n],k) and
// completing A_2 = ... = A_t to the transversal family of A_1 (every k-set
// meeting all of A_1); a completion is kept only when the full tuple is
// cross-intersecting (for t >= 3 that needs the transversal family to be
// intersecting). Guard: C(n,k) <= 22.
CrossOracleResult max_cross_sum_oracle(int n, int k, int t, int threads = 1);

}  // namespace exmatch
