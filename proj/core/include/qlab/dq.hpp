#pragma once

#include <memory>

#include "qlab/quantale.hpp"
#include "qlab/quantaloid.hpp"
#include "qlab/report.hpp"

namespace qlab {

// The quantaloid associated with a divisible quantale Q: one object per
// element, hom(p, q) = { u | u <= p /\ q } ordered as in Q, composition of
// u: p -> q and v: q -> r given by v & (q -> u) (equivalently (q -> v) & u),
// identity on q is q itself, and the involution keeps the underlying element
// while swapping endpoints.
//
// Arrows carry local hom indices; this wrapper translates between those and
// the global elements of Q.
class DQ {
public:
    // Precondition: q is divisible (else precondition_error).  The resulting
    // quantaloid is validated against the axiom checker; a failure there is
    // an internal error, not an input error.
    static std::shared_ptr<const DQ> build(const Quantale& q);

    const Quantale& base() const { return q_; }
    const FiniteQuantaloid& quantaloid() const { return *k_; }
    std::shared_ptr<const FiniteQuantaloid> quantaloid_ptr() const { return k_; }

    // The arrow p -> q carrying element u; throws input_error unless
    // u <= p /\ q.
    QArrow arrow(Elem p, Elem q, Elem u) const;
    // The global element an arrow carries.
    Elem value(const QArrow& a) const;
    // Local index of u inside hom(p, q), or -1 when u is not below p /\ q.
    int local_of(Elem p, Elem q, Elem u) const;
    Elem elem_of(int p, int q, int local) const;

private:
    Quantale q_;
    std::shared_ptr<const FiniteQuantaloid> k_;
    std::vector<std::vector<Elem>> carrier_;  // per pair p*n+q: local -> global
    std::vector<std::vector<int>> local_;     // per pair: global -> local or -1

    explicit DQ(Quantale q) : q_(std::move(q)) {}
};

// Structural checks specific to DQ(Q), beyond the generic quantaloid axioms:
// hom carriers are exactly the downsets of meets, identities are the objects
// themselves, composition agrees with both divisibility-equivalent forms,
// and the involution is an isomorphism hom(p,q) = hom(q,p) fixing values.
ReportList check_dq_structure(const DQ& dq);

}  // namespace qlab
