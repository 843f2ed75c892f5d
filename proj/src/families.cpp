#include "exmatch/families.hpp"

#include <algorithm>

#include "exmatch/errors.hpp"

namespace exmatch {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::A: return "A";
        case FamilyKind::B: return "B";
        case FamilyKind::E0: return "E0";
        case FamilyKind::E1: return "E1";
        case FamilyKind::CompleteClique: return "complete_clique";
        case FamilyKind::FullStar: return "full_star";
    }
    throw internal_error("unknown family kind");
}

std::optional<FamilyKind> family_kind_from_string(const std::string& name) {
    if (name == "A") return FamilyKind::A;
    if (name == "B") return FamilyKind::B;
    if (name == "E0") return FamilyKind::E0;
    if (name == "E1") return FamilyKind::E1;
    if (name == "complete_clique") return FamilyKind::CompleteClique;
    if (name == "full_star") return FamilyKind::FullStar;
    return std::nullopt;
}

namespace {

void validate(const FamilySpec& spec) {
    if (spec.k < 2) throw domain_error("require k >= 2");
    switch (spec.kind) {
        case FamilyKind::A:
            if (spec.s < 1) throw domain_error("A(i) requires s >= 1");
            if (spec.i < 1 || spec.i > spec.k) throw domain_error("A(i) requires 1 <= i <= k");
            if (spec.n < (spec.s + 1) * spec.i - 1)
                throw domain_error("A(i) requires n >= (s+1)i - 1");
            break;
        case FamilyKind::B:
            if (spec.s < 1) throw domain_error("B requires s >= 1");
            if (spec.n < spec.s + spec.k) throw domain_error("B requires n >= s + k");
            break;
        case FamilyKind::E0:
        case FamilyKind::E1:
            if (spec.s < 1) throw domain_error("E0/E1 require s >= 1");
            if (spec.n < spec.k * spec.s + spec.k - 1)
                throw domain_error("E0/E1 require n >= ks + k - 1");
            break;
        case FamilyKind::CompleteClique:
        case FamilyKind::FullStar:
            break;
    }
    if (spec.n < spec.k) throw domain_error("require n >= k");
}

}  // namespace

int min_domain_n(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::A: return std::max(spec.k, (spec.s + 1) * spec.i - 1);
        case FamilyKind::B: return spec.s + spec.k;
        case FamilyKind::E0:
        case FamilyKind::E1: return spec.k * spec.s + spec.k - 1;
        case FamilyKind::CompleteClique:
        case FamilyKind::FullStar: return spec.k;
    }
    throw internal_error("unknown family kind");
}

KGraph gen_family(const FamilySpec& spec, const Bint& cap) {
    validate(spec);
    const int n = spec.n, k = spec.k, s = spec.s;
    if (binomial(n, k) > cap)
        throw budget_error("gen_family: C(n,k) exceeds the enumeration cap");

    const int N = k * s + k - 2;  // E0/E1 clique prefix
    VertexSet prefix_a = VertexSet::full((s + 1) * spec.i - 1);
    VertexSet prefix_s1 = VertexSet::full(s - 1);
    VertexSet prefix_k1 = VertexSet::full(k - 1);
    VertexSet prefix_n = VertexSet::full(std::min(N, n));
    VertexSet big_s;  // S = {s+1, ..., s+k}
    for (int v = s + 1; v <= s + k; ++v) big_s.set(v);

    auto keep = [&](const VertexSet& e) {
        switch (spec.kind) {
            case FamilyKind::A:
                return (e & prefix_a).count() >= spec.i;
            case FamilyKind::B:
                return e.intersects(prefix_s1) || e == big_s ||
                       (e.test(s) && e.intersects(big_s));
            case FamilyKind::E0: {
                if (e.subset_of(prefix_n)) return true;
                VertexSet tail = e.without(prefix_n);
                if (tail.count() != 1) return false;
                if (tail.lowest() == N + 1) return e.intersects(prefix_k1);
                return (e & prefix_n) == prefix_k1;
            }
            case FamilyKind::E1: {
                if (e.subset_of(prefix_n)) return true;
                return e.without(prefix_n).count() == 1 && e.test(1);
            }
            case FamilyKind::CompleteClique:
                return true;
            case FamilyKind::FullStar:
                return e.test(1);
        }
        throw internal_error("unknown family kind");
    };

    std::vector<VertexSet> edges;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(j)] = j + 1;
    while (true) {
        VertexSet e = VertexSet::of(c);
        if (keep(e)) edges.push_back(e);
        int j = k - 1;
        while (j >= 0 && c[static_cast<std::size_t>(j)] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++c[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < k; ++t)
            c[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(t - 1)] + 1;
    }
    return KGraph::build(n, k, std::move(edges), /*dedupe=*/false);
}

Bint count_family(const FamilySpec& spec) {
    validate(spec);
    const long long n = spec.n, k = spec.k, s = spec.s;
    switch (spec.kind) {
        case FamilyKind::A: {
            const long long m = (s + 1) * spec.i - 1;
            Bint total = 0;
            for (long long j = spec.i; j <= k; ++j)
                total += binomial(m, j) * binomial(n - m, k - j);
            return total;
        }
        case FamilyKind::B:
            return binomial(n, k) - binomial(n - s, k) - binomial(n - s - k, k - 1) + 1;
        case FamilyKind::E0: {
            const long long N = k * s + k - 2;
            const long long ell = n - k * (s + 1);
            return binomial(N, k) + binomial(N, k - 1) - binomial(k * s - 1, k - 1) + ell + 1;
        }
        case FamilyKind::E1: {
            const long long N = k * s + k - 2;
            const long long ell = n - k * (s + 1);
            return binomial(N, k) + (ell + 2) * binomial(N - 1, k - 2);
        }
        case FamilyKind::CompleteClique:
            return binomial(n, k);
        case FamilyKind::FullStar:
            return binomial(n - 1, k - 1);
    }
    throw internal_error("unknown family kind");
}

CompareResult e0_e1_compare(int k, long long s, long long ell) {
    if (k < 3) throw domain_error("e0_e1_compare requires k >= 3");
    if (s < 1) throw domain_error("e0_e1_compare requires s >= 1");
    if (ell < 0) throw domain_error("e0_e1_compare requires ell >= 0");

    // n = k(s+1) + ell; closed forms, no graph materialization.
    const Bint N = Bint(k) * s + k - 2;
    // Top arguments here are all >= 0, so 0 <= a < b falls out as zero via a
    // zero factor and every stepwise division stays exact.
    auto big_binomial = [](const Bint& a, long long b) {
        if (b < 0) return Bint(0);
        Bint r = 1;
        for (long long i = 1; i <= b; ++i) {
            r *= a - b + i;
            r /= i;
        }
        return r;
    };
    CompareResult out;
    out.e0 = big_binomial(N, k) + big_binomial(N, k - 1) -
             big_binomial(Bint(k) * s - 1, k - 1) + ell + 1;
    out.e1 = big_binomial(N, k) + Bint(ell + 2) * big_binomial(N - 1, k - 2);
    Bint diff = out.e1 - out.e0;
    out.sign = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    out.predicted_e1 = k <= ell + 3;
    return out;
}

namespace {

Bint floor_rat(const Brat& q) {
    Bint num = boost::multiprecision::numerator(q);
    Bint den = boost::multiprecision::denominator(q);  // > 0 canonical
    Bint quo = num / den;                              // truncation
    if (num < 0 && quo * den != num) --quo;
    return quo;
}

}  // namespace

BoundReport bounds_report(int n, int k, int s, const Brat& eps) {
    if (k < 2) throw domain_error("require k >= 2");
    if (n < k) throw domain_error("require n >= k");
    if (s < 1) throw domain_error("require s >= 1");

    BoundReport r;
    r.n = n;
    r.k = k;
    r.s = s;
    r.ell = static_cast<long long>(n) - static_cast<long long>(k) * (s + 1);
    r.eps = eps;
    r.a.assign(static_cast<std::size_t>(k), std::nullopt);

    for (int i = 1; i <= k; ++i) {
        FamilySpec spec{FamilyKind::A, n, k, s, i};
        if (n >= (s + 1) * i - 1) r.a[static_cast<std::size_t>(i - 1)] = count_family(spec);
    }
    if (r.a.front() && r.a.back()) r.emc = std::max(*r.a.front(), *r.a.back());
    if (n >= s + k) r.bde = count_family({FamilyKind::B, n, k, s, 1});
    if (s == 1 && n > 2 * k)
        r.hm = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1;
    if (n >= k * s + k - 1) {
        r.e0 = count_family({FamilyKind::E0, n, k, s, 1});
        r.e1 = count_family({FamilyKind::E1, n, k, s, 1});
        r.stability = std::max(*r.e0, *r.e1);
        r.stability_winner = *r.e1 > *r.e0 ? "E1" : (*r.e0 > *r.e1 ? "E0" : "tie");
    }
    r.predicted_winner = k > r.ell + 3 ? "E0" : "E1";

    bool have_all_tail = r.bde.has_value();
    for (int i = 2; i <= k; ++i)
        if (!r.a[static_cast<std::size_t>(i - 1)]) have_all_tail = false;
    if (have_all_tail) {
        Bint best = *r.bde;
        for (int i = 2; i <= k; ++i) best = std::max(best, *r.a[static_cast<std::size_t>(i - 1)]);
        r.fk = best;
    }

    if (eps > 0 && eps < 1) {
        const Brat k4 = Brat(Bint(k) * k * k * k);
        Bint inner_top = floor_rat(Brat(1 - eps) * k * s);
        // C(ks+k-1, k) - (398/100) C(floor((1-eps)ks), k-1) + (2 + 8 eps k^4) C(n, k-1)
        Brat value = Brat(binomial(static_cast<long long>(k) * s + k - 1, k));
        {
            long long top = static_cast<long long>(inner_top);
            value -= Brat(398, 100) * Brat(binomial(top, k - 1));
        }
        value += (Brat(2) + Brat(8) * eps * k4) * Brat(binomial(n, k - 1));
        r.big_clique = floor_rat(value);
    }
    // n(1/k - 1/(2k^2)) - 1 < s  <=>  n(2k-1) - 2k^2 < 2k^2 s ;  s <= (n-k+1)/k
    const Bint two_k2 = Bint(2) * k * k;
    r.big_clique_in_window =
        Bint(n) * (2 * k - 1) - two_k2 < two_k2 * s && Bint(k) * s <= Bint(n) - k + 1;

    return r;
}

}  // namespace exmatch
