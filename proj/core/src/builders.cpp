#include "qlab/builders.hpp"

#include <algorithm>

#include "qlab/error.hpp"

namespace qlab {

namespace {

// 0 < q1 < q2 < ... < 1, with the conventional short names for the chains
// that come up constantly in examples.
std::vector<std::string> chain_names(int n) {
    if (n < 1) throw input_error("chain builders need n >= 1");
    if (n == 1) return {"1"};
    if (n == 2) return {"0", "1"};
    if (n == 3) return {"0", "h", "1"};
    if (n == 4) return {"0", "a", "b", "1"};
    std::vector<std::string> names;
    names.push_back("0");
    for (int i = 1; i + 1 < n; ++i) names.push_back("q" + std::to_string(i));
    names.push_back("1");
    return names;
}

FiniteLattice chain_lattice(int n) {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = 1;
    return FiniteLattice::from_relation(chain_names(n), std::move(leq));
}

}  // namespace

Quantale chain_frame(int n) {
    FiniteLattice lat = chain_lattice(n);
    std::vector<Elem> tensor(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tensor[static_cast<std::size_t>(i) * n + j] = std::min(i, j);
    return Quantale::create("chain(" + std::to_string(n) + ")", std::move(lat), std::move(tensor),
                            n - 1);
}

Quantale boolean_frame(int k) {
    if (k < 0) throw input_error("boolean_frame needs k >= 0");
    if (k > 10) throw input_error("boolean_frame: k > 10 is past the intended finite scale");
    const int n = 1 << k;
    std::vector<std::string> names(n);
    for (int mask = 0; mask < n; ++mask) {
        if (mask == 0) {
            names[mask] = "0";
            continue;
        }
        std::string nm;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) nm += static_cast<char>('a' + i);
        names[mask] = nm;
    }
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((x & y) == x) leq[static_cast<std::size_t>(x) * n + y] = 1;
    std::vector<Elem> tensor(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) tensor[static_cast<std::size_t>(x) * n + y] = x & y;
    return Quantale::create("boolean(" + std::to_string(k) + ")",
                            FiniteLattice::from_relation(std::move(names), std::move(leq)),
                            std::move(tensor), n - 1);
}

Quantale lukasiewicz_chain(int n) {
    FiniteLattice lat = chain_lattice(n);
    std::vector<Elem> tensor(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            tensor[static_cast<std::size_t>(i) * n + j] = std::max(0, i + j - (n - 1));
    return Quantale::create("lukasiewicz(" + std::to_string(n) + ")", std::move(lat),
                            std::move(tensor), n - 1);
}

Quantale product(const Quantale& a, const Quantale& b) {
    const int na = a.size(), nb = b.size(), n = na * nb;
    auto idx = [&](int i, int j) { return i * nb + j; };
    std::vector<std::string> names(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            names[idx(i, j)] = "(" + a.elem_name(i) + "," + b.elem_name(j) + ")";
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    if (a.leq(i, k) && b.leq(j, l))
                        leq[static_cast<std::size_t>(idx(i, j)) * n + idx(k, l)] = 1;
    std::vector<Elem> tensor(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    tensor[static_cast<std::size_t>(idx(i, j)) * n + idx(k, l)] =
                        idx(a.tensor(i, k), b.tensor(j, l));
    return Quantale::create("product(" + a.name() + "," + b.name() + ")",
                            FiniteLattice::from_relation(std::move(names), std::move(leq)),
                            std::move(tensor), idx(a.unit(), b.unit()));
}

}  // namespace qlab
