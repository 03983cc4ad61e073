#pragma once

// Small helpers shared by the test programs.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "qlab/builders.hpp"
#include "qlab/quantale.hpp"

namespace testutil {

// The drastic tensor on the 4-chain 0 < a < b < 1: x & y = 0 unless one
// argument is the unit.  The smallest integral chain quantale that is not
// divisible (on a 3-chain the drastic and Lukasiewicz tensors coincide).
inline qlab::Quantale drastic4() {
    auto lat = qlab::FiniteLattice::from_pairs({"0", "a", "b", "1"},
                                               {{0, 1}, {1, 2}, {2, 3}});
    std::vector<qlab::Elem> tensor(16, 0);
    for (int i = 0; i < 4; ++i) {
        tensor[static_cast<size_t>(3) * 4 + i] = i;
        tensor[static_cast<size_t>(i) * 4 + 3] = i;
    }
    return qlab::Quantale::create("drastic4", std::move(lat), std::move(tensor), 3);
}

// Run a command line, capture combined stdout/stderr and the exit status.
inline std::string run_cmd(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int st = pclose(p);
    exit_code = (st >= 0 && WIFEXITED(st)) ? WEXITSTATUS(st) : -1;
    return out;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    os << text;
}

}  // namespace testutil
