#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qlab {

enum class Verdict { pass, warn, fail };

const char* to_string(Verdict v);

// One line of evidence: which law was checked, how it went, and the data
// that lets a reader re-check the claim by hand.  `law` states the property
// itself; `witness` is an ordered key/value payload (counterexample parts,
// distinguished elements, sizes).  `note` carries free-form detail such as
// sampling bounds.
struct WitnessReport {
    std::string check;  // dotted id, e.g. "quantale.divisible"
    Verdict verdict = Verdict::pass;
    std::string law;
    std::vector<std::pair<std::string, std::string>> witness;
    std::string note;

    WitnessReport& with(std::string key, std::string value) {
        for (auto& [k, v] : witness)
            if (k == key) {
                v = std::move(value);
                return *this;
            }
        witness.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

using ReportList = std::vector<WitnessReport>;

// Worst verdict in the list (pass < warn < fail); pass for an empty list.
Verdict worst(const ReportList& reports);

inline bool passed(const ReportList& reports) { return worst(reports) != Verdict::fail; }

// Render one report as a single stable text line:
//   [PASS] quantale.divisible: u = q & (q -> u) for all u <= q  {q=h, u=0}
std::string to_line(const WitnessReport& r);

// The first report carrying the worst verdict, rendered via to_line; empty
// string for an empty list.
std::string worst_line(const ReportList& reports);

}  // namespace qlab
