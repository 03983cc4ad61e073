#pragma once

#include <optional>
#include <span>

#include "qlab/quantale.hpp"

namespace qlab {

// The relative-idempotency order on a divisible quantale:
//   p [= q  iff  p <= q and p & (q -> p) = p   (i.e. p lies in C_q).
// Construction verifies the order axioms plus the two structural lemmas
// (sandwich and join) that everything downstream leans on; since those are
// theorems for divisible tensors, a violation throws internal_check_error.
class SqleqPoset {
public:
    SqleqPoset() = default;

    // Throws precondition_error when q is not divisible.
    // `subset_bound`: the join lemma is checked over all subsets when
    // n <= subset_bound, over deterministic samples above.
    static SqleqPoset build(const Quantale& q, int subset_bound = 12);

    const Quantale& base() const { return q_; }
    int size() const { return q_.size(); }

    bool sqleq(Elem p, Elem q) const;

    // C_q as a sorted list of element ids.
    const std::vector<Elem>& C(Elem q) const;

    struct MeetResult {
        Elem value = 0;
        bool empty_input = false;  // meet of the empty set: formula gives top
        bool true_meet = true;     // greatest-lower-bound property verified
    };

    // join{ p | p [= a for all a in A }.  For nonempty A this is the
    // greatest [=-lower bound (asserted).  For empty A the formula yields
    // join Q = top, which is a genuine [=-meet only when q [= top for
    // every q (the frame case); the flags report what happened instead of
    // guessing.
    MeetResult sqcap(std::span<const Elem> A) const;

    // If A has any [=-upper bound, join A is the least one (asserted) and
    // is returned; otherwise absent.
    std::optional<Elem> sq_join(std::span<const Elem> A) const;

    // Covering pairs of the [= order.
    std::vector<std::pair<Elem, Elem>> hasse() const;

private:
    Quantale q_;
    std::vector<std::uint8_t> rel_;
    std::vector<std::vector<Elem>> cq_;
};

// Report-producing re-verification used by the checking suite: partial
// order, containment in <=, C_q = principal lower set, sandwich lemma
// (p <= q <= r and p [= r imply p [= q), join lemma (a [= q for all a in A
// implies join A [= q), the conditional least-upper-bound property, and
// the empty-meet anomaly (warn when some q is not [= top).
ReportList check_sqleq_laws(const SqleqPoset& s, int subset_bound = 12);

}  // namespace qlab
