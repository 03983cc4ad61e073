#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlab/lattice.hpp"

namespace qlab::detail {

// Visit subsets of {0..n-1}: all 2^n of them when n <= bound, otherwise a
// fixed-size deterministic sample (plus the empty and full subsets, which
// are the usual boundary cases).
template <class F>
void for_each_subset(int n, int bound, F&& visit) {
    std::vector<Elem> subset;
    if (n <= bound && n < 63) {
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            subset.clear();
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) subset.push_back(i);
            visit(static_cast<const std::vector<Elem>&>(subset));
        }
        return;
    }
    std::mt19937_64 rng(0x51ab5eedULL ^ static_cast<std::uint64_t>(n));
    constexpr int kSamples = 4096;
    for (int s = 0; s < kSamples; ++s) {
        subset.clear();
        for (int i = 0; i < n; ++i)
            if (rng() & 1) subset.push_back(i);
        visit(static_cast<const std::vector<Elem>&>(subset));
    }
    subset.clear();
    visit(static_cast<const std::vector<Elem>&>(subset));
    subset.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) subset[static_cast<std::size_t>(i)] = i;
    visit(static_cast<const std::vector<Elem>&>(subset));
}

inline std::string subset_string(const FiniteLattice& lat, const std::vector<Elem>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += lat.name(xs[i]);
    }
    out += "}";
    return out;
}

}  // namespace qlab::detail
