#pragma once

#include <optional>
#include <vector>

#include "qlab/qset.hpp"

namespace qlab {

// The Cauchy completion of a Q-set: carrier = all singletons in canonical
// order, hom(mu, lambda) = lambda* . mu = \/_x lambda(x) . mu(x) (composite
// across |x|).  Three equivalent formulas for the hom are computed and must
// agree; the result is separated and symmetric, and the embedding below is
// fully faithful.  All of those are asserted at construction (internal
// errors), except Cauchy completeness of the result, which costs a second
// singleton enumeration and is left to check_completion_laws.
struct Completion {
    QSet hat;
    std::vector<Singleton> carrier;  // aligned with hat element indices
    std::vector<int> yoneda;         // x |-> index of alpha(x, -) in carrier
};

Completion cauchy_completion(const QSet& x, std::uint64_t budget = 5000000);

// Where a singleton of x sits inside the completed carrier (-1 if absent,
// which construction rules out for genuine singletons).
int completion_index(const Completion& c, const Singleton& s);

// The image of f: X -> Y between the completions: f^(mu) = graph(f) . mu.
// Per-index map from cx.hat to cy.hat.
std::vector<int> hat_functor(const QSet& x, const QSet& y, const std::vector<int>& f,
                             const Completion& cx, const Completion& cy);

// For separated Cauchy complete Y: the unique map X^ -> Y with
// transpose(f) . yoneda = f.  Precondition: y separated and Cauchy complete.
std::vector<int> transpose_map(const QSet& x, const QSet& y, const std::vector<int>& f,
                               const Completion& cx, std::uint64_t budget = 5000000);

// ---- restriction ------------------------------------------------------------

// The row alpha(a, -) /\ p as a singleton of extent p.  Precondition:
// p & (alpha(a,a) -> p) = p, i.e. p is relatively idempotent below the extent
// of a.  That the result satisfies ss1..ss4 is a theorem (internal check).
Singleton restricted_row(const QSet& x, int a, Elem p);

// The element realizing restricted_row, for Q-sets where it exists (always,
// when x is separated and Cauchy complete).
std::optional<int> restrict_in(const QSet& x, int a, Elem p);

// For separated Cauchy complete Y and an element with extent q: the functor
// (C_q, /\) -> Y sending p to the restriction of that element, indexed like
// qset_cq(dq, q).  Asserted to be the unique functor sending q itself to the
// chosen element.
std::vector<int> cq_functor(const QSet& y, int elem);

// Functor (C_p, /\) -> (C_q, /\) by inclusion exists iff p is relatively
// idempotent below q; asserted against that predicate, then returned.
bool cq_inclusion_exists(const Quantale& q, Elem p, Elem r);

// ---- equalizers -------------------------------------------------------------

struct Equalizer {
    QSet obj;                  // { x | f(x) = g(x) } with the restricted hom
    std::vector<int> include;  // equalizer index -> x index
};

// Precondition: f, g functors between symmetric separated Cauchy complete
// Q-sets.  The returned object is again symmetric, separated and Cauchy
// complete (asserted).
Equalizer equalizer_ccsym(const QSet& x, const QSet& y, const std::vector<int>& f,
                          const std::vector<int>& g, std::uint64_t budget = 5000000);

// Universal property of the equalizer against one probe: every t: W -> X
// with f t = g t factors uniquely through the inclusion.
WitnessReport equalizer_universal_check(const QSet& x, const QSet& y,
                                        const std::vector<int>& f, const std::vector<int>& g,
                                        const Equalizer& e, const QSet& probe,
                                        std::uint64_t budget = 2000000);

// ---- comparisons ------------------------------------------------------------

// Isomorphism of Q-sets: a bijection preserving alpha exactly.
bool qset_isomorphic(const QSet& a, const QSet& b);

// The completion of the one-element Q-set {q} has carrier C_q and hom = meet.
WitnessReport point_completion_check(std::shared_ptr<const DQ> dq, Elem q,
                                     std::uint64_t budget = 5000000);

// Law bundle for one Q-set: hom formulas agree, completion is separated /
// symmetric / Cauchy complete, the canonical embedding is fully faithful and
// (when x is separated) injective, and completing twice adds nothing.
ReportList check_completion_laws(const QSet& x, std::uint64_t budget = 5000000);

}  // namespace qlab
