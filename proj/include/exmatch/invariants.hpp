#pragma once

#include <cstdint>
#include <vector>

#include "exmatch/kgraph.hpp"

namespace exmatch {

// Node allowance for one whole operation (all search-tree nodes it spends,
// including nested solver calls). Exhaustion raises budget_error.
struct Budget {
    std::uint64_t limit = 100'000'000ULL;
};

struct InvariantResult {
    int value = 0;
    // Lex-least optimal witness: a matching as an edge list, a cover or a
    // clique as a vertex set.
    std::vector<VertexSet> witness_edges;
    VertexSet witness_vertices;
    std::uint64_t nodes = 0;
};

// Maximum matching. Branch and bound on the lex-smallest remaining edge;
// first-found incumbents make the witness the lexicographically least
// maximum matching.
InvariantResult matching_number(const KGraph& g, Budget budget = {});

// Minimum vertex cover. Branches on the vertices of the lex-first uncovered
// edge in ascending order; witness is the lex-least minimum cover.
InvariantResult cover_number(const KGraph& g, Budget budget = {});

// Largest W with every k-subset of W an edge. Any set of size k-1 is
// vacuously complete, so the value is at least k-1. Witness is the lex-least
// maximum clique.
InvariantResult clique_number(const KGraph& g, Budget budget = {});

// True iff g has a matching of size t whose edges avoid the vertices in
// `avoid`. Shared decision core; exposed for reuse and tests.
bool has_matching_avoiding(const KGraph& g, int t, const VertexSet& avoid, Budget budget = {});

// Adds lex-ascending missing k-sets while nu stays <= s; the result is
// s-saturated. Requires nu(g) <= s (violation reported with an (s+1)-matching
// witness in the error message).
KGraph saturate(const KGraph& g, int s, Budget budget = {});

// nu(g) <= s and every missing edge would push nu past s.
bool is_saturated(const KGraph& g, int s, Budget budget = {});

}  // namespace exmatch
