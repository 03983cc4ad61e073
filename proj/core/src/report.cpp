#include "qlab/report.hpp"

#include <sstream>

namespace qlab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::warn: return "warn";
        case Verdict::fail: return "fail";
    }
    return "?";
}

Verdict worst(const ReportList& reports) {
    Verdict w = Verdict::pass;
    for (const auto& r : reports) {
        if (static_cast<int>(r.verdict) > static_cast<int>(w)) w = r.verdict;
    }
    return w;
}

std::string to_line(const WitnessReport& r) {
    std::ostringstream os;
    switch (r.verdict) {
        case Verdict::pass: os << "[PASS] "; break;
        case Verdict::warn: os << "[WARN] "; break;
        case Verdict::fail: os << "[FAIL] "; break;
    }
    os << r.check << ": " << r.law;
    if (!r.witness.empty()) {
        os << "  {";
        bool first = true;
        for (const auto& [k, v] : r.witness) {
            if (!first) os << ", ";
            first = false;
            os << k << "=" << v;
        }
        os << "}";
    }
    if (!r.note.empty()) os << "  (" << r.note << ")";
    return os.str();
}

std::string worst_line(const ReportList& reports) {
    if (reports.empty()) return {};
    Verdict w = worst(reports);
    for (const auto& r : reports)
        if (r.verdict == w) return to_line(r);
    return {};
}

}  // namespace qlab
