#include "exmatch/shifting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "exmatch/errors.hpp"

namespace exmatch {

std::pair<KGraph, std::uint64_t> shift_counted(const KGraph& g, int x, int y) {
    if (x < 1 || y > g.n() || x >= y) throw domain_error("shift requires 1 <= x < y <= n");
    std::vector<VertexSet> out;
    out.reserve(g.size());
    std::uint64_t moved = 0;
    for (const VertexSet& e : g.edges()) {
        if (e.test(y) && !e.test(x)) {
            VertexSet r = e;
            r.reset(y);
            r.set(x);
            if (!g.contains(r)) {
                out.push_back(r);
                ++moved;
                continue;
            }
        }
        out.push_back(e);
    }
    // Replacements never collide: a moved edge lands outside F, and two
    // distinct movers differ outside {x,y}; kept edges containing x differ
    // from any replacement's source pattern.
    return {KGraph::build(g.n(), g.k(), std::move(out), /*dedupe=*/false), moved};
}

KGraph shift(const KGraph& g, int x, int y) { return shift_counted(g, x, y).first; }

std::uint64_t potential(const KGraph& g) {
    std::uint64_t p = 0;
    for (int d : g.degrees()) p += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
    return p;
}

bool is_shifted_on(const KGraph& g, const VertexSet& y) {
    if (!y.subset_of(VertexSet::full(g.n()))) throw domain_error("Y must be a subset of [1, n]");
    std::vector<int> ys = y.to_vector();
    // S_{i,j}(F) = F iff every edge with j but not i has its replacement in F.
    for (const VertexSet& e : g.edges()) {
        for (std::size_t b = 0; b < ys.size(); ++b) {
            int j = ys[b];
            if (!e.test(j)) continue;
            for (std::size_t a = 0; a < b; ++a) {
                int i = ys[a];
                if (e.test(i)) continue;
                VertexSet r = e;
                r.reset(j);
                r.set(i);
                if (!g.contains(r)) return false;
            }
        }
    }
    return true;
}

ShiftTrace shift_closure(const KGraph& g, const VertexSet& y) {
    if (!y.subset_of(VertexSet::full(g.n()))) throw domain_error("Y must be a subset of [1, n]");
    std::vector<int> ys = y.to_vector();
    ShiftTrace trace;
    KGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < ys.size(); ++a) {
            for (std::size_t b = a + 1; b < ys.size(); ++b) {
                std::uint64_t before = potential(cur);
                auto [next, moved] = shift_counted(cur, ys[a], ys[b]);
                if (moved == 0) continue;
                ShiftStep step;
                step.x = ys[a];
                step.y = ys[b];
                step.moved = moved;
                step.pot_before = before;
                step.pot_after = potential(next);
                trace.steps.push_back(std::move(step));
                cur = std::move(next);
                changed = true;
            }
        }
    }
    trace.final = std::move(cur);
    return trace;
}

std::pair<KGraph, std::vector<int>> normalize_degrees(const KGraph& g) {
    const int n = g.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> perm(static_cast<std::size_t>(n));  // perm[v-1] = new label
    for (int pos = 0; pos < n; ++pos)
        perm[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)] - 1)] = pos + 1;

    std::vector<VertexSet> edges;
    edges.reserve(g.size());
    for (const VertexSet& e : g.edges()) {
        VertexSet r;
        for (int v : e.to_vector()) r.set(perm[static_cast<std::size_t>(v - 1)]);
        edges.push_back(r);
    }
    return {KGraph::build(n, g.k(), std::move(edges), /*dedupe=*/false), std::move(perm)};
}

std::optional<StepResult> meaningful_shift_step(const KGraph& g, int m) {
    if (m < 1 || m > g.n()) throw domain_error("require 1 <= m <= n");
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) < g.degree(v + 1))
            throw domain_error("degrees must be non-increasing (call normalize_degrees first)");

    for (int x = 1; x < m; ++x) {
        for (int y = x + 1; y <= m; ++y) {
            std::uint64_t before = potential(g);
            auto [next, moved] = shift_counted(g, x, y);
            if (moved == 0) continue;
            StepResult res;
            res.step.x = x;
            res.step.y = y;
            res.step.moved = moved;
            res.step.pot_before = before;
            res.step.pot_after = potential(next);
            if (res.step.pot_after <= res.step.pot_before)
                throw internal_error("potential did not increase under a degree-sorted shift");
            res.result = std::move(next);
            return res;
        }
    }
    return std::nullopt;
}

ProcedureResult nontrivial_shift_procedure(const KGraph& g, int m) {
    if (!is_nontrivial(g)) throw domain_error("input must be non-trivial (no isolated vertex)");
    if (m < 1 || m > g.n()) throw domain_error("require 1 <= m <= n");

    ProcedureResult out;
    KGraph cur = g;
    while (true) {
        auto [normed, perm] = normalize_degrees(cur);
        cur = std::move(normed);
        std::optional<StepResult> step = meaningful_shift_step(cur, m);
        if (!step) {
            // Terminal renaming-only step keeps the trace replayable: the
            // final graph is the renormalized one.
            ShiftStep last;
            last.pot_before = last.pot_after = potential(cur);
            last.perm = std::move(perm);
            out.trace.steps.push_back(std::move(last));
            out.trace.final = std::move(cur);
            out.success = true;
            return out;
        }
        // Only y can lose degree under S_{x,y}; isolation check before commit.
        if (step->result.degree(step->step.y) == 0) {
            IsolationEvidence ev;
            ev.x = step->step.x;
            ev.y = step->step.y;
            ev.isolated_vertex = step->step.y;
            ev.n_xy = link(cur, ev.x, ev.y).sets.size();
            ev.n_x_avoid_y = link(cur, ev.x, std::nullopt, ev.y).sets.size();
            ev.n_y_avoid_x = link(cur, ev.y, std::nullopt, ev.x).sets.size();
            ev.cap = binomial(cur.n() - 2, cur.k() - 1);
            ev.conditions_hold =
                ev.n_xy == 0 && Bint(ev.n_x_avoid_y) + Bint(ev.n_y_avoid_x) <= ev.cap;
            out.trace.final = std::move(cur);
            out.failure = std::move(ev);
            out.success = false;
            return out;
        }
        step->step.perm = std::move(perm);
        out.trace.steps.push_back(std::move(step->step));
        cur = std::move(step->result);
    }
}

std::string format_perm(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    bool identity = true;
    for (int v = 1; v <= n; ++v)
        if (perm[static_cast<std::size_t>(v - 1)] != v) identity = false;
    if (identity) return "id";

    std::ostringstream out;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v = 1; v <= n; ++v) {
        if (seen[static_cast<std::size_t>(v - 1)] || perm[static_cast<std::size_t>(v - 1)] == v)
            continue;
        out << '(' << v;
        seen[static_cast<std::size_t>(v - 1)] = true;
        int w = perm[static_cast<std::size_t>(v - 1)];
        while (w != v) {
            out << ' ' << w;
            seen[static_cast<std::size_t>(w - 1)] = true;
            w = perm[static_cast<std::size_t>(w - 1)];
        }
        out << ')';
    }
    return out.str();
}

std::string format_trace(const ShiftTrace& t) {
    std::ostringstream out;
    for (const ShiftStep& s : t.steps) {
        out << s.x << ' ' << s.y << " moved=" << s.moved << " pot " << s.pot_before << "->"
            << s.pot_after << " perm=" << format_perm(s.perm) << '\n';
    }
    return out.str();
}

}  // namespace exmatch
