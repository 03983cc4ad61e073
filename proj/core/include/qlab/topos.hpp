#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qlab/completion.hpp"
#include "qlab/qset.hpp"

namespace qlab {

// Probe objects for diagram checks: every 1- and 2-element symmetric
// separated Cauchy complete Q-set (up to isomorphism), every (C_r, /\), and
// (Q, /\) itself when it qualifies.  Deterministic order.
std::vector<QSet> default_probes(std::shared_ptr<const DQ> dq,
                                 std::uint64_t budget = 200000);

// The Cauchy complete sub-Q-sets of (C_q, /\) are exactly the C_p with
// p & (q -> p) = p: each is a downset of the refinement order with a top,
// and nothing else qualifies.  Exhaustive over subsets of C_q.
WitnessReport cc_subobjects_check(std::shared_ptr<const DQ> dq, Elem q,
                                  std::uint64_t budget = 5000000);

// (C_{p <sqcap> q}, /\) with the two inclusions is the pullback of
// (C_p, /\) -> (Q, /\) <- (C_q, /\): the square commutes, C_p n C_q is
// exactly C_{p <sqcap> q}, and every probe cone factors uniquely.
WitnessReport pullback_check(std::shared_ptr<const DQ> dq, Elem p, Elem q,
                             const std::vector<QSet>& probes,
                             std::uint64_t budget = 2000000);

// The completion of the two-element Q-set Z = {z_p, z_q} with
// alpha(z_p, z_q) = p <sqcap> q is the pushout of
// (C_p, /\) <- (C_{p <sqcap> q}, /\) -> (C_q, /\): the square commutes and
// every probe cocone factors through a unique mediator.
WitnessReport pushout_check(std::shared_ptr<const DQ> dq, Elem p, Elem q,
                            const std::vector<QSet>& probes,
                            std::uint64_t budget = 2000000);

// The canonical functor Z -> (Q, /\) (identity on the two underlying
// elements) exists always and is fully faithful exactly when
// p <sqcap> q = p /\ q.  The report passes when that biconditional holds.
WitnessReport embedding_check(std::shared_ptr<const DQ> dq, Elem p, Elem q);

// Three equivalent readings of "the tensor is a frame":
//   (a) tensor = binary meet,
//   (b) every q satisfies q & (T -> q) = q,
//   (c) refined meets agree with lattice meets everywhere.
// One report per reading plus an agreement line.  Precondition: divisible.
ReportList frame_equivalence_check(const Quantale& q);

// The certificate chain: for a frame, the no-obstruction line; otherwise the
// least non-idempotent q, its idempotency defect, the disagreeing pair of
// meets, the missing Cauchy complete subobject of (C_T, /\), and the failing
// embedding for (q, T).
ReportList topos_witness(std::shared_ptr<const DQ> dq, std::uint64_t budget = 5000000);

}  // namespace qlab
