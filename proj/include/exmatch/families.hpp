#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exmatch/kgraph.hpp"
#include "exmatch/numbers.hpp"

namespace exmatch {

enum class FamilyKind { A, B, E0, E1, CompleteClique, FullStar };

std::string to_string(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_string(const std::string& name);

// Named constructions on [n]:
//   A(i): k-sets with at least i vertices in [(s+1)i - 1].
//   B:    k-sets meeting [s-1], plus S = {s+1..s+k}, plus k-sets through s
//         that meet S.
//   E0:   with N = ks+k-2: all k-sets in [N]; k-sets = X ∪ {N+1} with
//         X ⊆ [N] meeting [k-1]; and [k-1] ∪ {x} for x >= N+2.
//   E1:   all k-sets in [N]; k-sets with exactly one vertex above N and
//         containing 1.
//   complete_clique: every k-set of [n].   full_star: every k-set through 1.
// s is meaningful for A/B/E0/E1 only; i for A only.
struct FamilySpec {
    FamilyKind kind = FamilyKind::A;
    int n = 0;
    int k = 0;
    int s = 1;
    int i = 1;
};

// Smallest n the kind is defined for (given k, s, i).
int min_domain_n(const FamilySpec& spec);

// Explicit edge list in lex order. Refuses (budget error) when C(n,k)
// exceeds cap; the count functions below have no such limit.
KGraph gen_family(const FamilySpec& spec, const Bint& cap = Bint(10'000'000));

// Closed-form exact size of gen_family(spec).
Bint count_family(const FamilySpec& spec);

struct CompareResult {
    Bint e0;
    Bint e1;
    int sign = 0;            // sign of e1 - e0
    bool predicted_e1 = false;  // k <= ell + 3
};

// |E0| vs |E1| at n = k(s+1) + ell. For k <= ell+3 the sign is >= 0 for
// every s >= 1; for k > ell+3 the sign is reported without assertion.
CompareResult e0_e1_compare(int k, long long s, long long ell);

// Catalogue of bound values at (n, k, s); entries whose own domain fails are
// absent, never a whole-report failure.
struct BoundReport {
    int n = 0, k = 0, s = 0;
    long long ell = 0;  // n - k(s+1)
    Brat eps;

    std::vector<std::optional<Bint>> a;  // a[i-1] = |A(i)|, i = 1..k
    std::optional<Bint> emc;             // max(|A(1)|, |A(k)|)
    std::optional<Bint> bde;             // |B|
    std::optional<Bint> hm;              // s = 1 and n > 2k only
    std::optional<Bint> fk;              // max(|A(2)|..|A(k)|, |B|)
    std::optional<Bint> e0;
    std::optional<Bint> e1;
    std::optional<Bint> stability;       // max(e0, e1)
    std::optional<Bint> big_clique;

    std::string stability_winner;        // "E0", "E1" or "tie"
    std::string predicted_winner;        // "E0" when k > ell+3, else "E1"
    bool big_clique_in_window = false;   // n(1/k - 1/(2k^2)) - 1 < s <= (n-k+1)/k
};

// eps must lie in (0,1) for the big_clique entry; outside that the entry is
// absent. big_clique is evaluated in exact rationals with 3.98 = 398/100,
// the inner binomial's top argument floor((1-eps)ks), and a final floor.
BoundReport bounds_report(int n, int k, int s, const Brat& eps = Brat(1, 10));

}  // namespace exmatch
