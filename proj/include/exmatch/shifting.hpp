#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exmatch/kgraph.hpp"
#include "exmatch/numbers.hpp"

namespace exmatch {

// One recorded compression step. x = y = 0 marks a renaming-only terminal
// step (the final renormalization that found no further shift to apply).
struct ShiftStep {
    int x = 0;
    int y = 0;
    std::uint64_t moved = 0;  // edges actually replaced
    std::uint64_t pot_before = 0;
    std::uint64_t pot_after = 0;
    std::vector<int> perm;  // perm[v-1] = new label of v; empty = identity
};

struct ShiftTrace {
    std::vector<ShiftStep> steps;
    KGraph final;
};

// S_{x,y}: each edge containing y but not x is replaced by the same edge
// with y swapped for x, unless that set is already an edge. Size preserved.
KGraph shift(const KGraph& g, int x, int y);

// Variant that also reports how many edges moved.
std::pair<KGraph, std::uint64_t> shift_counted(const KGraph& g, int x, int y);

// Sum over vertices of degree squared.
std::uint64_t potential(const KGraph& g);

// S_{i,j}(F) = F for all i < j with both in y.
bool is_shifted_on(const KGraph& g, const VertexSet& y);

// Applies shifts in lexicographic (i,j) sweeps over y until a sweep changes
// nothing. Terminates: every applied shift strictly lowers the total vertex
// label sum over all edges.
ShiftTrace shift_closure(const KGraph& g, const VertexSet& y);

// Relabels so degrees are non-increasing, ties by original label. Returns the
// relabelled graph and perm with perm[v-1] = new label of v.
std::pair<KGraph, std::vector<int>> normalize_degrees(const KGraph& g);

struct StepResult {
    ShiftStep step;
    KGraph result;
};

// First pair x < y <= m (lex order) whose shift changes the graph; applies it
// and checks the potential strictly increased (guaranteed while degrees are
// non-increasing). Requires deg(1) >= ... >= deg(n); absent when already
// shifted on [m].
std::optional<StepResult> meaningful_shift_step(const KGraph& g, int m);

// Evidence gathered when a shift would isolate a vertex: for non-trivial F
// with an isolated vertex in S_{x,y}(F), necessarily N(x,y) is empty and
// |N(x,y-bar)| + |N(y,x-bar)| <= C(n-2, k-1).
struct IsolationEvidence {
    int x = 0;
    int y = 0;
    int isolated_vertex = 0;
    std::uint64_t n_xy = 0;
    std::uint64_t n_x_avoid_y = 0;
    std::uint64_t n_y_avoid_x = 0;
    Bint cap;  // C(n-2, k-1)
    bool conditions_hold = false;
};

struct ProcedureResult {
    bool success = false;
    ShiftTrace trace;  // up to the failure point when success is false
    std::optional<IsolationEvidence> failure;
};

// Repeats normalize_degrees + meaningful_shift_step aiming at shiftedness on
// [m], renormalizing after every applied shift and keeping the graph
// non-trivial. A step that would isolate a vertex stops the run with the
// evidence above; that is a legal outcome, not an error. Trivial input is a
// domain error.
ProcedureResult nontrivial_shift_procedure(const KGraph& g, int m);

// One step per line: `x y moved=<count> pot <before>-><after> perm=<cycles or id>`.
std::string format_trace(const ShiftTrace& t);

// Cycle notation for a permutation given as perm[v-1] = image; "id" when
// empty or identity.
std::string format_perm(const std::vector<int>& perm);

}  // namespace exmatch
