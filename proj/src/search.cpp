#include "exmatch/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "exmatch/errors.hpp"
#include "exmatch/shifting.hpp"

namespace exmatch {
namespace {

std::vector<VertexSet> lex_universe(int n, int k) {
    std::vector<VertexSet> out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(j)] = j + 1;
    while (true) {
        out.push_back(VertexSet::of(c));
        int j = k - 1;
        while (j >= 0 && c[static_cast<std::size_t>(j)] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++c[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < k; ++t)
            c[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

// Immediate predecessors under coordinatewise domination: lower one
// coordinate by one where the result is still a strictly ascending k-set.
std::vector<std::vector<std::uint32_t>> build_preds(const std::vector<VertexSet>& uni) {
    std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> index;
    index.reserve(uni.size() * 2);
    for (std::size_t i = 0; i < uni.size(); ++i)
        index.emplace(uni[i], static_cast<std::uint32_t>(i));
    std::vector<std::vector<std::uint32_t>> preds(uni.size());
    for (std::size_t i = 0; i < uni.size(); ++i) {
        std::vector<int> vs = uni[i].to_vector();
        for (std::size_t p = 0; p < vs.size(); ++p) {
            int lowered = vs[p] - 1;
            if (lowered < 1) continue;
            if (p > 0 && lowered <= vs[p - 1]) continue;
            VertexSet q = uni[i];
            q.reset(vs[p]);
            q.set(lowered);
            preds[i].push_back(index.at(q));
        }
    }
    return preds;
}

// Set-lex on index masks stored as word arrays.
bool words_lex_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t d = a[w] ^ b[w];
        if (d) return (a[w] >> std::countr_zero(d)) & 1;
    }
    return false;
}

// Matching decision on a raw edge list: a matching of size t avoiding
// nothing; edges already filtered by the caller.
bool small_matching_decision(const std::vector<VertexSet>& eds, int k, int t,
                             const VertexSet& avoid) {
    if (t <= 0) return true;
    std::vector<VertexSet> kept;
    kept.reserve(eds.size());
    for (const VertexSet& e : eds)
        if (!e.intersects(avoid)) kept.push_back(e);
    std::vector<VertexSet> suffix(kept.size() + 1);
    for (std::size_t j = kept.size(); j-- > 0;) suffix[j] = suffix[j + 1] | kept[j];
    VertexSet used;
    auto dfs = [&](auto&& self, std::size_t i, int cnt) -> bool {
        if (cnt == t) return true;
        for (std::size_t j = i; j < kept.size(); ++j) {
            if (kept[j].intersects(used)) continue;
            if (cnt + suffix[j].without(used).count() / k < t) return false;
            VertexSet saved = used;
            used = used | kept[j];
            if (self(self, j + 1, cnt + 1)) return true;
            used = saved;
        }
        return false;
    };
    return dfs(dfs, 0, 0);
}

struct TaskResult {
    long long best = -1;
    std::vector<std::uint64_t> mask;
};

struct SearchContext {
    const SearchProblem* p = nullptr;
    const std::vector<VertexSet>* uni = nullptr;
    const std::vector<std::vector<std::uint32_t>>* preds = nullptr;  // shifted only
    std::vector<VertexSet> suffix_cover;
    long long threshold = 0;  // best warm size; ties at this level still explored
    std::atomic<std::uint64_t>* nodes = nullptr;
    std::atomic<bool>* aborted = nullptr;
};

struct TaskAbort {};

// One independent slice of the search: all families whose lowest chosen
// universe indices equal `base` (extended when `extend`). Results do not
// depend on scheduling: no state is shared with other slices except the
// monotone node counter.
class SliceRunner {
public:
    SliceRunner(const SearchContext& ctx) : ctx_(ctx) {
        const std::size_t m = ctx_.uni->size();
        words_.assign((m + 63) / 64, 0);
        full_ = VertexSet::full(ctx_.p->n);
    }

    std::optional<TaskResult> run(const std::vector<std::uint32_t>& base, bool extend) {
        tick();
        for (std::uint32_t idx : base)
            if (!push_checked(idx)) return rewind(base, std::nullopt);
        consider();
        if (extend) dfs(base.empty() ? 0 : base.back() + 1);
        std::optional<TaskResult> out;
        if (result_.best >= 0) out = result_;
        return rewind(base, std::move(out));
    }

private:
    std::optional<TaskResult> rewind(const std::vector<std::uint32_t>& base,
                                     std::optional<TaskResult> out) {
        for (std::size_t i = base.size(); i-- > 0;) pop(base[i]);
        return out;
    }

    void tick() {
        if (ctx_.aborted->load(std::memory_order_relaxed)) throw TaskAbort{};
        if (ctx_.nodes->fetch_add(1, std::memory_order_relaxed) + 1 > ctx_.p->budget) {
            ctx_.aborted->store(true, std::memory_order_relaxed);
            throw TaskAbort{};
        }
    }

    bool includable(std::uint32_t idx) const {
        if (ctx_.preds) {
            for (std::uint32_t q : (*ctx_.preds)[idx])
                if (!(words_[q >> 6] >> (q & 63) & 1)) return false;
        }
        // nu may not pass s: an s-matching avoiding the new edge would
        // complete to an (s+1)-matching.
        return !small_matching_decision(chosen_, ctx_.p->k, ctx_.p->s, (*ctx_.uni)[idx]);
    }

    bool push_checked(std::uint32_t idx) {
        if (!includable(idx)) return false;
        push(idx);
        return true;
    }

    void push(std::uint32_t idx) {
        words_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        chosen_.push_back((*ctx_.uni)[idx]);
        cover_stack_.push_back(covered_);
        covered_ = covered_ | (*ctx_.uni)[idx];
    }

    void pop(std::uint32_t idx) {
        words_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
        chosen_.pop_back();
        covered_ = cover_stack_.back();
        cover_stack_.pop_back();
    }

    void consider() {
        if (ctx_.p->require_nontrivial && !(covered_ == full_)) return;
        long long cnt = static_cast<long long>(chosen_.size());
        if (cnt > result_.best || (cnt == result_.best && words_lex_less(words_, result_.mask))) {
            result_.best = cnt;
            result_.mask = words_;
        }
    }

    void dfs(std::size_t from) {
        tick();
        const std::size_t m = ctx_.uni->size();
        const long long needed = std::max(ctx_.threshold, result_.best);
        for (std::size_t j = from; j < m; ++j) {
            if (static_cast<long long>(chosen_.size() + (m - j)) < needed) return;
            if (ctx_.p->require_nontrivial &&
                !full_.subset_of(covered_ | ctx_.suffix_cover[j])) return;
            if (!push_checked(static_cast<std::uint32_t>(j))) continue;
            consider();
            dfs(j + 1);
            pop(static_cast<std::uint32_t>(j));
        }
    }

    SearchContext ctx_;
    std::vector<std::uint64_t> words_;
    std::vector<VertexSet> chosen_;
    std::vector<VertexSet> cover_stack_;
    VertexSet covered_;
    VertexSet full_;
    TaskResult result_;
};

struct WarmStart {
    long long size = 0;
    KGraph graph;
    bool valid = false;
};

WarmStart best_warm(const SearchProblem& p) {
    WarmStart out;
    std::vector<FamilySpec> candidates;
    candidates.push_back({FamilyKind::E0, p.n, p.k, p.s, 1});
    candidates.push_back({FamilyKind::E1, p.n, p.k, p.s, 1});
    candidates.push_back({FamilyKind::A, p.n, p.k, p.s, 1});
    candidates.push_back({FamilyKind::A, p.n, p.k, p.s, p.k});
    candidates.push_back({FamilyKind::CompleteClique, p.n, p.k, p.s, 1});
    for (const FamilySpec& spec : candidates) {
        KGraph g;
        try {
            g = gen_family(spec);
        } catch (const domain_error&) {
            continue;
        }
        if (has_matching_avoiding(g, p.s + 1, VertexSet{})) continue;
        if (p.require_nontrivial && !is_nontrivial(g)) continue;
        if (p.restrict_shifted && !is_shifted_on(g, VertexSet::full(p.n))) continue;
        if (!out.valid || static_cast<long long>(g.size()) > out.size) {
            out.size = static_cast<long long>(g.size());
            out.graph = g;
            out.valid = true;
        }
    }
    return out;
}

}  // namespace

Certificate max_family(const SearchProblem& p, int threads) {
    if (p.k < 2 || p.n < p.k) throw domain_error("require n >= k >= 2");
    if (p.s < 0) throw domain_error("require s >= 0");
    if (threads < 1) throw domain_error("threads must be >= 1");
    if (p.n > kMaxVertices) throw domain_error("search supports n <= 128");
    if (p.s == 0 && p.require_nontrivial)
        throw domain_error("no non-trivial family has nu <= 0");

    Bint size = binomial(p.n, p.k);
    if (!p.restrict_shifted && size > 36)
        throw domain_error("unrestricted search guard: C(n,k) <= 36 (use the shifted mode)");
    if (p.restrict_shifted && size > 1'000'000)
        throw domain_error("shifted search guard: C(n,k) <= 10^6");

    const std::vector<VertexSet> uni = lex_universe(p.n, p.k);
    const std::size_t m = uni.size();
    std::vector<std::vector<std::uint32_t>> preds;
    if (p.restrict_shifted) preds = build_preds(uni);

    SearchContext ctx;
    ctx.p = &p;
    ctx.uni = &uni;
    ctx.preds = p.restrict_shifted ? &preds : nullptr;
    ctx.suffix_cover.assign(m + 1, VertexSet{});
    for (std::size_t j = m; j-- > 0;) ctx.suffix_cover[j] = ctx.suffix_cover[j + 1] | uni[j];

    WarmStart warm = best_warm(p);
    ctx.threshold = warm.valid ? warm.size : 0;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    ctx.nodes = &nodes;
    ctx.aborted = &aborted;

    // Independent slices keyed by the lowest chosen indices; two-level split
    // when the universe is small, one-level otherwise. Slice results and node
    // totals do not depend on worker count or scheduling.
    struct Slice {
        std::vector<std::uint32_t> base;
        bool extend = false;
    };
    std::vector<Slice> slices;
    slices.push_back({{}, false});  // the empty family
    if (m <= 64) {
        for (std::uint32_t i = 0; i < m; ++i) slices.push_back({{i}, false});
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = i + 1; j < m; ++j) slices.push_back({{i, j}, true});
    } else {
        for (std::uint32_t i = 0; i < m; ++i) slices.push_back({{i}, true});
    }

    std::vector<std::optional<TaskResult>> results(slices.size());
    std::atomic<std::size_t> next{0};
    bool budget_hit = false;

    auto worker = [&]() {
        SliceRunner runner(ctx);
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= slices.size()) return;
            try {
                results[i] = runner.run(slices[i].base, slices[i].extend);
            } catch (const TaskAbort&) {
                return;
            }
        }
    };

    int workers = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(threads), slices.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    budget_hit = aborted.load();

    Certificate cert;
    cert.lower_bound_only = p.restrict_shifted && p.require_nontrivial;

    if (budget_hit) {
        // Partial exploration is discarded so the outcome stays independent
        // of scheduling; the warm start is still a valid family.
        cert.exhaustive = false;
        cert.nodes = p.budget;
        if (warm.valid) {
            cert.best_size = warm.size;
            cert.witness = warm.graph;
        } else {
            cert.best_size = 0;
            cert.witness = KGraph::build(p.n, p.k, {}, false);
        }
        return cert;
    }

    TaskResult best;
    for (const std::optional<TaskResult>& r : results) {
        if (!r) continue;
        if (r->best > best.best || (r->best == best.best && words_lex_less(r->mask, best.mask)))
            best = *r;
    }
    if (best.best < 0) {
        // Only possible when even the empty family is infeasible, i.e. the
        // non-trivial constraint with no feasible family; s >= 1 always
        // admits the full star, so this is unreachable.
        throw internal_error("search found no feasible family");
    }

    std::vector<VertexSet> edges;
    for (std::size_t j = 0; j < m; ++j)
        if (best.mask[j >> 6] >> (j & 63) & 1) edges.push_back(uni[j]);
    cert.best_size = best.best;
    cert.witness = KGraph::build(p.n, p.k, std::move(edges), /*dedupe=*/false);
    cert.exhaustive = true;
    cert.nodes = nodes.load();
    return cert;
}

std::string format_cert(const SearchProblem& p, const Certificate& c) {
    std::ostringstream out;
    out << "problem=n=" << p.n << " k=" << p.k << " s=" << p.s << " nontrivial="
        << (p.require_nontrivial ? "true" : "false") << " shifted="
        << (p.restrict_shifted ? "true" : "false") << " budget=" << p.budget << '\n';
    out << "best=" << c.best_size << '\n';
    out << "exhaustive=" << (c.exhaustive ? "true" : "false") << '\n';
    out << "nodes=" << c.nodes << '\n';
    return out.str();
}

VerifyReport verify_report(int n, int k, int s, const std::vector<std::string>& modes,
                           std::uint64_t budget, int threads) {
    VerifyReport report;
    report.n = n;
    report.k = k;
    report.s = s;
    report.bounds = bounds_report(n, k, s);

    for (const std::string& mode : modes) {
        if (mode != "unconstrained" && mode != "nontrivial")
            throw domain_error("unknown verify mode: " + mode);
        SearchProblem p;
        p.n = n;
        p.k = k;
        p.s = s;
        p.require_nontrivial = mode == "nontrivial";
        p.restrict_shifted = false;
        p.budget = budget;

        VerifyMode vm;
        vm.mode = mode;
        vm.cert = max_family(p, threads);

        auto add = [&](const std::string& name, const std::optional<Bint>& value) {
            if (!value) return;
            VerifyEntry e;
            e.bound_name = name;
            e.bound_value = *value;
            Bint opt(vm.cert.best_size);
            e.relation = opt < *value ? "<" : (opt > *value ? ">" : "=");
            e.asserted = mode == "unconstrained" && name == "emc" &&
                         (k == 2 || (s == 1 && n > 2 * k));
            if (e.asserted) {
                e.status = "asserted";
                e.holds = opt == *value;
            } else {
                // Stability-type bounds only hold past a threshold on s; an
                // exceeded bound at small parameters is evidence of being
                // below it, not a failure.
                e.status = opt > *value ? "report-only: s below s_0" : "report-only";
                e.holds = true;
            }
            vm.entries.push_back(std::move(e));
        };

        for (int i = 1; i <= k; ++i)
            add("a" + std::to_string(i), report.bounds.a[static_cast<std::size_t>(i - 1)]);
        add("emc", report.bounds.emc);
        add("bde", report.bounds.bde);
        add("hm", report.bounds.hm);
        add("fk", report.bounds.fk);
        add("e0", report.bounds.e0);
        add("e1", report.bounds.e1);
        add("stability", report.bounds.stability);
        add("big_clique", report.bounds.big_clique);

        report.modes.push_back(std::move(vm));
    }
    return report;
}

}  // namespace exmatch
