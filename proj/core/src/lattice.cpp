#include "qlab/lattice.hpp"

#include <algorithm>
#include <set>

#include "qlab/error.hpp"

namespace qlab {

void FiniteLattice::check(Elem a) const {
    if (a < 0 || a >= n_)
        throw input_error("element index " + std::to_string(a) + " out of range [0," +
                          std::to_string(n_) + ")");
}

bool FiniteLattice::leq(Elem a, Elem b) const {
    check(a);
    check(b);
    return leq_[static_cast<std::size_t>(a) * n_ + b] != 0;
}

Elem FiniteLattice::join(Elem a, Elem b) const {
    check(a);
    check(b);
    return join_[static_cast<std::size_t>(a) * n_ + b];
}

Elem FiniteLattice::meet(Elem a, Elem b) const {
    check(a);
    check(b);
    return meet_[static_cast<std::size_t>(a) * n_ + b];
}

const std::string& FiniteLattice::name(Elem a) const {
    check(a);
    return names_[a];
}

Elem FiniteLattice::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

FiniteLattice FiniteLattice::from_relation(std::vector<std::string> names,
                                           std::vector<std::uint8_t> leq) {
    FiniteLattice l;
    l.n_ = static_cast<int>(names.size());
    if (l.n_ == 0) throw input_error("lattice carrier must be non-empty");
    if (leq.size() != static_cast<std::size_t>(l.n_) * l.n_)
        throw input_error("order relation has " + std::to_string(leq.size()) +
                          " entries, expected " + std::to_string(l.n_ * l.n_));
    l.names_ = std::move(names);
    l.leq_ = std::move(leq);
    l.validate_and_fill();
    return l;
}

FiniteLattice FiniteLattice::from_pairs(std::vector<std::string> names,
                                        const std::vector<std::pair<Elem, Elem>>& pairs) {
    const int n = static_cast<int>(names.size());
    if (n == 0) throw input_error("lattice carrier must be non-empty");
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw input_error("order pair (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range");
        leq[static_cast<std::size_t>(a) * n + b] = 1;
    }
    // Warshall transitive closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[static_cast<std::size_t>(i) * n + k])
                for (int j = 0; j < n; ++j)
                    if (leq[static_cast<std::size_t>(k) * n + j])
                        leq[static_cast<std::size_t>(i) * n + j] = 1;
    return from_relation(std::move(names), std::move(leq));
}

void FiniteLattice::validate_and_fill() {
    std::set<std::string> seen;
    for (const auto& nm : names_) {
        if (nm.empty()) throw input_error("element names must be non-empty");
        if (!seen.insert(nm).second) throw input_error("duplicate element name '" + nm + "'");
    }

    auto le = [&](Elem a, Elem b) { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; };

    for (int a = 0; a < n_; ++a)
        if (!le(a, a)) throw input_error("order not reflexive at '" + names_[a] + "'");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b && le(a, b) && le(b, a))
                throw input_error("order not antisymmetric: '" + names_[a] + "' and '" +
                                  names_[b] + "' are mutually comparable");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (le(a, b))
                for (int c = 0; c < n_; ++c)
                    if (le(b, c) && !le(a, c))
                        throw input_error("order not transitive: " + names_[a] + " <= " +
                                          names_[b] + " <= " + names_[c] + " but not " +
                                          names_[a] + " <= " + names_[c]);

    join_.assign(static_cast<std::size_t>(n_) * n_, -1);
    meet_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            // least upper bound: an upper bound below every upper bound
            Elem lub = -1;
            for (int c = 0; c < n_; ++c) {
                if (!le(a, c) || !le(b, c)) continue;
                bool least = true;
                for (int d = 0; d < n_ && least; ++d)
                    if (le(a, d) && le(b, d) && !le(c, d)) least = false;
                if (least) {
                    lub = c;
                    break;
                }
            }
            if (lub < 0)
                throw input_error("no least upper bound for '" + names_[a] + "' and '" +
                                  names_[b] + "'");
            join_[static_cast<std::size_t>(a) * n_ + b] = lub;

            Elem glb = -1;
            for (int c = 0; c < n_; ++c) {
                if (!le(c, a) || !le(c, b)) continue;
                bool greatest = true;
                for (int d = 0; d < n_ && greatest; ++d)
                    if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
                if (greatest) {
                    glb = c;
                    break;
                }
            }
            if (glb < 0)
                throw input_error("no greatest lower bound for '" + names_[a] + "' and '" +
                                  names_[b] + "'");
            meet_[static_cast<std::size_t>(a) * n_ + b] = glb;
        }
    }

    // Finite + binary joins/meets: bottom and top exist.
    Elem bot = 0, top = 0;
    for (int a = 1; a < n_; ++a) {
        bot = meet_[static_cast<std::size_t>(bot) * n_ + a];
        top = join_[static_cast<std::size_t>(top) * n_ + a];
    }
    bottom_ = bot;
    top_ = top;
}

Elem FiniteLattice::join_of(std::span<const Elem> xs) const {
    Elem acc = bottom_;
    for (Elem x : xs) acc = join(acc, x);
    return acc;
}

Elem FiniteLattice::meet_of(std::span<const Elem> xs) const {
    Elem acc = top_;
    for (Elem x : xs) acc = meet(acc, x);
    return acc;
}

bool FiniteLattice::covers(Elem a, Elem b) const {
    if (a == b || !leq(a, b)) return false;
    for (int c = 0; c < n_; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
    return true;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::cover_pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (covers(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<Elem> FiniteLattice::downset(Elem q) const {
    check(q);
    std::vector<Elem> out;
    for (int a = 0; a < n_; ++a)
        if (leq(a, q)) out.push_back(a);
    return out;
}

}  // namespace qlab
