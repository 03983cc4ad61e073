#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/quantaloid.hpp"
#include "qlab/report.hpp"

namespace qlab {

// A category enriched in a finite quantaloid: every element x has a type
// |x| (an object of the base), and hom(x, y) is an arrow |x| -> |y|, stored
// as its local index.  Unit and composition laws are what
// check_qcategory_axioms verifies; construction itself only checks shapes.
struct QCategory {
    std::shared_ptr<const FiniteQuantaloid> base;
    std::string name;
    std::vector<std::string> elem_names;
    std::vector<int> types;
    std::vector<int> hom;  // row-major x*size+y, local index in hom(types[x], types[y])

    int size() const { return static_cast<int>(elem_names.size()); }
    int hom_at(int x, int y) const { return hom[static_cast<size_t>(x) * size() + y]; }
    QArrow arrow(int x, int y) const { return {types[x], types[y], hom_at(x, y)}; }
};

QCategory make_qcategory(std::shared_ptr<const FiniteQuantaloid> base, std::string name,
                         std::vector<std::string> elem_names, std::vector<int> types,
                         std::vector<int> hom);  // shape checks only

// Unit inequality 1_{|x|} <= hom(x, x) and composition inequality
// hom(y, z) . hom(x, y) <= hom(x, z).
ReportList check_qcategory_axioms(const QCategory& x);

// x <= y in the underlying order: same type and 1_{|x|} <= hom(x, y).
bool underlying_leq(const QCategory& x, int a, int b);
// No two distinct elements with x <= y and y <= x.
bool is_separated(const QCategory& x);
// hom(x, y) = hom(y, x)° (needs an involutive base).
bool is_symmetric(const QCategory& x);

// ---- distributors -----------------------------------------------------------
//
// A distributor phi: X -|-> Y is a matrix of arrows phi(x, y): |x| -> |y|,
// stored row-major x*|Y|+y as local hom indices.

using Dist = std::vector<int>;

Dist identity_dist(const QCategory& x);
QArrow dist_arrow(const QCategory& x, const QCategory& y, const Dist& phi, int a, int b);

// The bimodule law hom_Y(y, y') . phi(x, y) . hom_X(x', x) <= phi(x', y').
bool is_distributor(const QCategory& x, const QCategory& y, const Dist& phi);

bool dist_leq(const QCategory& x, const QCategory& y, const Dist& a, const Dist& b);

// (psi . phi)(x, z) = \/_y psi(y, z) . phi(x, y)
Dist dist_compose(const QCategory& x, const QCategory& y, const QCategory& z,
                  const Dist& phi, const Dist& psi);
// Largest psi with psi . phi <= xi:  (xi / phi)(y, z) = /\_x xi(x, z) / phi(x, y)
Dist dist_lres(const QCategory& x, const QCategory& y, const QCategory& z, const Dist& xi,
               const Dist& phi);
// Largest phi with psi . phi <= xi:  (psi \ xi)(x, y) = /\_z psi(y, z) \ xi(x, z)
Dist dist_rres(const QCategory& x, const QCategory& y, const QCategory& z, const Dist& psi,
               const Dist& xi);

// Right adjoint of phi: X -|-> Y, if any: candidate phi \ hom_Y, checked by
// unit/counit; when the full matrix space of Y -|-> X has at most
// `exhaustive_budget` entries it is also scanned exhaustively and any
// disagreement with the candidate is an internal error.
std::optional<Dist> right_adjoint_dist(const QCategory& x, const QCategory& y,
                                       const Dist& phi,
                                       std::uint64_t exhaustive_budget = 200000);

// Both residual adjunctions at the distributor level, quantified over all
// matrices when the space fits the budget (notes when sampled down).
WitnessReport dist_adjunction_check(const QCategory& x, const QCategory& y,
                                    const QCategory& z, const Dist& phi, const Dist& xi,
                                    std::uint64_t exhaustive_budget = 200000);

// ---- functors ---------------------------------------------------------------

// f maps element indices of X to element indices of Y.
bool is_functor(const QCategory& x, const QCategory& y, const std::vector<int>& f);
Dist graph_fwd(const QCategory& x, const QCategory& y, const std::vector<int>& f);
Dist graph_bwd(const QCategory& x, const QCategory& y, const std::vector<int>& f);
// Pointwise hom_X(a, b) = hom_Y(fa, fb); cross-checked against the graph
// composite f* . f = hom_X (disagreement is an internal error).
bool is_fully_faithful(const QCategory& x, const QCategory& y, const std::vector<int>& f);

// Every functor X -> Y, enumerated over the type-preserving maps in odometer
// order; nullopt when that map space exceeds `budget`.
std::optional<std::vector<std::vector<int>>> all_functors(const QCategory& x,
                                                          const QCategory& y,
                                                          std::uint64_t budget = 2000000);

}  // namespace qlab
