#pragma once

#include "qlab/quantale.hpp"

namespace qlab {

// n-element chain 0 < q1 < ... < 1 with tensor = meet (a frame).
Quantale chain_frame(int n);

// Powerset of k atoms ordered by inclusion, tensor = intersection.
Quantale boolean_frame(int k);

// n-element Lukasiewicz chain: elements 0..n-1, i & j = max(0, i+j-(n-1)),
// unit n-1.  Divisible; a frame only for n <= 2.
Quantale lukasiewicz_chain(int n);

// Componentwise product quantale.
Quantale product(const Quantale& a, const Quantale& b);

}  // namespace qlab
