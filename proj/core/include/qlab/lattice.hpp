#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qlab {

// Index of an element in its carrier.  All structures here are small and
// finite; elements are dense 0-based indices with printable names kept
// alongside.
using Elem = int;

// A finite lattice given by its order relation.  Construction validates
// that the relation is a partial order and that every pair has a least
// upper bound and a greatest lower bound (for a finite poset that makes
// the lattice complete, with bottom = join of nothing and top = meet of
// nothing).  Join/meet tables are precomputed; lookups are O(1).
class FiniteLattice {
public:
    FiniteLattice() = default;

    // `leq` is row-major n*n: leq[a*n+b] != 0 means a <= b.  The relation
    // must already be reflexive, antisymmetric and transitive.  Violations
    // throw input_error naming the offending elements.
    static FiniteLattice from_relation(std::vector<std::string> names,
                                       std::vector<std::uint8_t> leq);

    // Builds the order as the reflexive-transitive closure of the given
    // `a <= b` pairs, then validates as above.
    static FiniteLattice from_pairs(std::vector<std::string> names,
                                    const std::vector<std::pair<Elem, Elem>>& pairs);

    int size() const { return n_; }
    const std::string& name(Elem a) const;
    const std::vector<std::string>& names() const { return names_; }
    Elem index_of(const std::string& name) const;  // -1 if absent

    bool leq(Elem a, Elem b) const;
    Elem join(Elem a, Elem b) const;
    Elem meet(Elem a, Elem b) const;
    Elem bottom() const { return bottom_; }
    Elem top() const { return top_; }

    Elem join_of(std::span<const Elem> xs) const;  // bottom for empty input
    Elem meet_of(std::span<const Elem> xs) const;  // top for empty input

    // True when b covers a: a < b with nothing strictly between.
    bool covers(Elem a, Elem b) const;
    std::vector<std::pair<Elem, Elem>> cover_pairs() const;

    // Elements below q, in index order (q included).
    std::vector<Elem> downset(Elem q) const;

    void check(Elem a) const;  // throws input_error if out of range

private:
    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<std::uint8_t> leq_;
    std::vector<Elem> join_;
    std::vector<Elem> meet_;
    Elem bottom_ = 0;
    Elem top_ = 0;

    void validate_and_fill();
};

}  // namespace qlab
