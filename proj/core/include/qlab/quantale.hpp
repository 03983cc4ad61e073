#pragma once

#include <array>
#include <string>
#include <vector>

#include "qlab/lattice.hpp"
#include "qlab/report.hpp"

namespace qlab {

// A finite commutative unital quantale: a complete lattice with a
// sup-preserving commutative monoid structure (tensor &, unit 1).  The
// residual -> is derived from the tensor table; construction validates
// every axiom and throws input_error with a witness on failure.
//
// Immutable after construction; all queries are O(1) table lookups.
class Quantale {
public:
    Quantale() = default;

    // Validates the monoid/quantale axioms (associativity, commutativity,
    // unit, distribution of & over joins, residual adjunction).  On failure
    // throws input_error carrying the first failing report line.
    // `subset_bound`: join-distribution is checked over all subsets when
    // n <= subset_bound, over deterministic samples above.
    static Quantale create(std::string name, FiniteLattice lattice, std::vector<Elem> tensor,
                           Elem unit, int subset_bound = 12);

    const std::string& name() const { return name_; }
    const FiniteLattice& lattice() const { return lat_; }
    int size() const { return lat_.size(); }
    const std::string& elem_name(Elem a) const { return lat_.name(a); }

    // Lattice conveniences.
    bool leq(Elem a, Elem b) const { return lat_.leq(a, b); }
    Elem join(Elem a, Elem b) const { return lat_.join(a, b); }
    Elem meet(Elem a, Elem b) const { return lat_.meet(a, b); }
    Elem bottom() const { return lat_.bottom(); }
    Elem top() const { return lat_.top(); }

    Elem tensor(Elem a, Elem b) const;
    Elem unit() const { return unit_; }

    // residual(p, q) = join{ s | p & s <= q }; satisfies
    // p & q <= r  iff  p <= residual(q, r).
    Elem residual(Elem p, Elem q) const;

    bool idempotent(Elem q) const { return tensor(q, q) == q; }
    bool integral() const { return unit_ == lat_.top(); }

    // Divisibility verdict: u = q & (q -> u) whenever u <= q.  Cached at
    // construction, as are the other three equivalent formulations.
    bool divisible() const { return conditions_[0]; }
    const std::array<bool, 4>& divisibility_conditions() const { return conditions_; }

    // True iff the tensor table equals the binary-meet table.
    bool is_frame() const { return frame_; }

private:
    std::string name_;
    FiniteLattice lat_;
    std::vector<Elem> tensor_;
    std::vector<Elem> res_;
    Elem unit_ = 0;
    std::array<bool, 4> conditions_{};
    bool frame_ = false;
};

// One report per axiom: table well-formedness, associativity, commutativity,
// unit law, join-distribution (binary, empty, and subset joins), residual
// adjunction.  Works on raw tables so that bad inputs can be examined
// without constructing a Quantale.
ReportList check_quantale_axioms(const FiniteLattice& lat, const std::vector<Elem>& tensor,
                                 Elem unit, int subset_bound = 12);
ReportList check_quantale_axioms(const Quantale& q, int subset_bound = 12);

// Evaluates the four equivalent characterisations of divisibility
// independently:
//   (i)   u = q & (q -> u) whenever u <= q
//   (ii)  v & (q -> u) = (q -> v) & u whenever u, v <= q
//   (iii) u <= q implies u = q & p for some p
//   (iv)  p /\ q = p & (p -> q) for all p, q
// Returns: overall verdict (= condition (i)), one line per condition, a
// cross-condition consistency line (the four are provably equivalent, so
// disagreement flags an implementation bug), and an integrality line
// (a divisible unit is forced to be the top element).
ReportList divisibility_report(const Quantale& q);

// The set { q | q & q = q }, in index order.
std::vector<Elem> idempotents(const Quantale& q);

// Verifies the idempotents are closed under binary meet and arbitrary
// joins.  Guaranteed for divisible tensors; may genuinely fail otherwise,
// in which case the verdict is fail with the violating pair/subset.
WitnessReport idempotent_subframe_check(const Quantale& q, int subset_bound = 12);

// is_frame verified both ways: tensor = meet table, and
// integral + everything idempotent.  The two routes are equivalent and
// cross-checked; a mismatch is reported as fail.
WitnessReport frame_report(const Quantale& q);

// For divisible q: the underlying lattice is distributive —
// p /\ (join S) = join { p /\ s } over all subsets S (sampled above the
// bound).  Throws precondition_error when the tensor is not divisible.
WitnessReport underlying_frame_check(const Quantale& q, int subset_bound = 12);

// v o_q u = v & (q -> u) for u, v <= q.  Asserts agreement with the dual
// form (q -> v) & u, which divisibility guarantees.  Throws
// precondition_error when u or v is not below q or the tensor is not
// divisible.
Elem circ(const Quantale& q, Elem at, Elem v, Elem u);

// The quantale on the downset of q with tensor o_q and unit q.  Requires
// divisibility; the result is re-validated through Quantale::create.
Quantale downset_quantale(const Quantale& q, Elem at);

// C_q = { p <= q | p & (q -> p) = p }, in index order.
std::vector<Elem> relative_idempotents(const Quantale& q, Elem at);

// Verifies C_q is a subframe of the downset quantale of q: contains bottom
// and q, closed under binary meet and arbitrary joins.  Guaranteed under
// divisibility; may fail otherwise (reported, not thrown).
WitnessReport cq_subframe_check(const Quantale& q, Elem at, int subset_bound = 12);

// For p in C_q: p & (q -> r) equals p /\ r for every r; returns that value
// and asserts the equality.  Throws precondition_error when p is not in
// C_q or the tensor is not divisible.
Elem meet_via_residual(const Quantale& q, Elem at, Elem p, Elem r);

}  // namespace qlab
