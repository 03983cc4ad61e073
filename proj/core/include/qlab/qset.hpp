#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/dq.hpp"
#include "qlab/qcategory.hpp"
#include "qlab/report.hpp"
#include "qlab/textio.hpp"

namespace qlab {

// A Q-set: a set with a Q-valued equality alpha, over a divisible quantale.
//   s1: alpha(x, y) <= alpha(x, x) /\ alpha(y, y)
//   s2: alpha(x, y) = alpha(y, x)
//   s3: alpha(y, z) & (alpha(y, y) -> alpha(x, y)) <= alpha(x, z)
// Equivalently, a symmetric category over the downset quantaloid of Q whose
// type map is forced to be x |-> alpha(x, x).  Construction validates the
// axioms; the category() bridge exposes the generic enriched view.
class QSet {
public:
    static QSet create(std::shared_ptr<const DQ> dq, std::string name,
                       std::vector<std::string> elem_names, std::vector<Elem> alpha);

    const DQ& dq() const { return *dq_; }
    std::shared_ptr<const DQ> dq_ptr() const { return dq_; }
    const Quantale& base() const { return dq_->base(); }
    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(elem_names_.size()); }
    const std::string& elem_name(int x) const { return elem_names_[x]; }
    const std::vector<std::string>& elem_names() const { return elem_names_; }
    Elem alpha(int x, int y) const { return alpha_[static_cast<size_t>(x) * size() + y]; }
    Elem type(int x) const { return alpha(x, x); }

    const QCategory& category() const { return cat_; }

private:
    std::shared_ptr<const DQ> dq_;
    std::string name_;
    std::vector<std::string> elem_names_;
    std::vector<Elem> alpha_;
    QCategory cat_;

    QSet() = default;
};

// The axioms on raw data, one report per law (no divisibility requirement;
// callers gate on that separately when they need the quantaloid view).
ReportList check_qset_axioms(const Quantale& q, const std::vector<std::string>& elem_names,
                             const std::vector<Elem>& alpha);

// Resolves element names of a parsed file against the quantale and validates.
QSet bind_qset_file(const QSetFile& file, std::shared_ptr<const DQ> dq);
std::string serialize_qset(const QSet& x);

// ---- stock Q-sets -----------------------------------------------------------

// One element of extent q.
QSet qset_point(std::shared_ptr<const DQ> dq, Elem q);
// The relatively idempotent elements below q with alpha = binary meet.
QSet qset_cq(std::shared_ptr<const DQ> dq, Elem q);
// All of Q with alpha = binary meet.
QSet qset_meet(std::shared_ptr<const DQ> dq);
// An arbitrary carrier with alpha = binary meet.
QSet qset_sub_meet(std::shared_ptr<const DQ> dq, std::vector<Elem> carrier, std::string name);

// ---- singletons -------------------------------------------------------------

// A singleton of X: extent plus one value per element of X, canonically
// ordered by (extent, values).
struct Singleton {
    Elem extent = 0;
    std::vector<Elem> values;
    auto operator<=>(const Singleton&) const = default;
};

std::string singleton_name(const QSet& x, const Singleton& s);  // "(h,0)"

// The four singleton conditions for a candidate map (values[i] is the value
// at element i):
//   ss1: mu(x) <= alpha(x, x)
//   ss2: mu(x) & (alpha(x, x) -> alpha(x, y)) <= mu(y)
//   ss3: |mu| <= \/_x mu(x) & (alpha(x, x) -> mu(x))      where |mu| = \/_x mu(x)
//   ss4: mu(x) & (|mu| -> mu(y)) <= alpha(x, y)
bool is_singleton(const QSet& x, const std::vector<Elem>& values);

// All singletons by direct application of ss1..ss4 over the candidate space
// prod_x |down(alpha(x, x))| (precondition_error above `budget` candidates).
std::vector<Singleton> singletons_by_conditions(const QSet& x,
                                                std::uint64_t budget = 5000000);
// All singletons as the left-adjoint distributors from one-element Q-sets,
// computed through the generic distributor layer.
std::vector<Singleton> singletons_by_adjoint(const QSet& x, std::uint64_t budget = 5000000);
// Both routes, asserted to agree, with mu* = mu checked on every result
// (disagreement is an internal error).
std::vector<Singleton> enumerate_singletons(const QSet& x, std::uint64_t budget = 5000000);
// The agreement of the two routes as a report instead of an assertion.
WitnessReport singleton_duality_check(const QSet& x, std::uint64_t budget = 5000000);

// Index of an element whose row alpha(a, -) realizes s, if any.
std::optional<int> represent(const QSet& x, const Singleton& s);
// Every singleton is of the form alpha(a, -).
bool is_cauchy_complete(const QSet& x, std::uint64_t budget = 5000000);

}  // namespace qlab
