#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlab/lattice.hpp"
#include "qlab/quantale.hpp"
#include "qlab/report.hpp"

namespace qlab {

// An arrow of a finite quantaloid: endpooints are object ids, idx is the
// local index inside hom(src, tgt).
struct QArrow {
    int src = 0;
    int tgt = 0;
    int idx = 0;
    bool operator==(const QArrow&) const = default;
};

// A finite quantaloid: finitely many objects, a finite complete lattice of
// arrows between each ordered pair, composition preserving joins in both
// arguments, and (optionally) an identity-on-objects involution reversing
// arrows.  All structure is tabulated at construction.
class FiniteQuantaloid {
public:
    using ComposeFn = std::function<int(int p, int q, int r, int v, int u)>;
    using InvolveFn = std::function<int(int p, int q, int u)>;

    // compose(p,q,r,v,u) = local index of (v: q->r) after (u: p->q) in
    // hom(p,r).  involve(p,q,u) = local index in hom(q,p).  The tables are
    // filled eagerly; shapes are validated, the algebraic laws are not (use
    // check_quantaloid_axioms).
    static FiniteQuantaloid build(std::vector<std::string> object_names,
                                  std::vector<FiniteLattice> homs,  // n*n, row-major src*n+tgt
                                  std::vector<int> identities,      // local index in hom(q,q)
                                  const ComposeFn& compose,
                                  const InvolveFn* involve = nullptr);

    int objects() const { return static_cast<int>(object_names_.size()); }
    const std::string& object_name(int q) const { return object_names_[q]; }
    const FiniteLattice& hom(int p, int q) const { return homs_[p * objects() + q]; }

    QArrow arrow(int p, int q, int local) const;
    QArrow identity(int q) const { return {q, q, identities_[q]}; }
    QArrow compose(const QArrow& v, const QArrow& u) const;  // v after u

    bool leq(const QArrow& a, const QArrow& b) const;        // same endpoints required
    QArrow join(const QArrow& a, const QArrow& b) const;
    QArrow bottom(int p, int q) const;
    QArrow top(int p, int q) const;

    bool involutive() const { return !inv_.empty(); }
    QArrow involve(const QArrow& u) const;

    // Largest v with v . u <= w  (w: p->r, u: p->q; result q->r).
    QArrow lres(const QArrow& w, const QArrow& u) const;
    // Largest u with v . u <= w  (v: q->r, w: p->r; result p->q).
    QArrow rres(const QArrow& v, const QArrow& w) const;

    std::string arrow_name(const QArrow& a) const;  // "h: h -> 1"

private:
    std::vector<std::string> object_names_;
    std::vector<FiniteLattice> homs_;
    std::vector<int> identities_;
    // composition tables per (p,q,r): [v * |hom(p,q)| + u] -> local in hom(p,r)
    std::vector<std::vector<int>> comp_;
    std::vector<std::vector<int>> inv_;  // per (p,q): local -> local in hom(q,p)

    int table_at(int p, int q, int r, int v, int u) const {
        int n = objects();
        return comp_[(p * n + q) * n + r][v * hom(p, q).size() + u];
    }
};

// Category laws, join preservation of composition in both arguments, and the
// involution laws when present.  Subsets larger than `subset_bound` elements
// per hom are checked on a deterministic sample.
ReportList check_quantaloid_axioms(const FiniteQuantaloid& k, int subset_bound = 12);

// Right adjoint of u, if any: computed as the residual u \ 1_cod, verified by
// the unit/counit inequalities, and cross-checked against an exhaustive scan
// of the opposite hom (any disagreement is an internal error).
std::optional<QArrow> right_adjoint_of(const FiniteQuantaloid& k, const QArrow& u);

// For a left adjoint u: p->q with right adjoint u*: checks v . u = v / u* for
// every v: q->r and u* . w = u \ w for every w: r->q.  Precondition: u is a
// left adjoint.
WitnessReport map_calculation_check(const FiniteQuantaloid& k, const QArrow& u);

// The one-object quantaloid on a quantale: hom(*,*) = Q, composition = tensor,
// identity = unit, involution = the identity map.
FiniteQuantaloid one_object_quantaloid(const Quantale& q);

}  // namespace qlab
