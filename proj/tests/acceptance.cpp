// The exit gate: one scenario per line, each with a hard wall-clock limit.
// argv[1] is the path to the qlab binary (used by the last scenario only).

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/builders.hpp"
#include "qlab/completion.hpp"
#include "qlab/qset.hpp"
#include "qlab/sqleq.hpp"
#include "qlab/suite.hpp"
#include "qlab/topos.hpp"

#include "oracle.hpp"
#include "util.hpp"

using namespace qlab;

namespace {

int failures = 0;
std::string qlab_bin;

void scenario(int n, const std::string& what, double limit_s,
              const std::function<bool(std::string&)>& fn) {
    std::string note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = fn(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > limit_s) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over the time limit");
    }
    if (!ok) ++failures;
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << n << ". " << what << "  (" << std::fixed;
    line.precision(2);
    line << dt << "s, limit " << limit_s << "s)";
    if (!ok && !note.empty()) line << "  -- " << note;
    std::cout << line.str() << "\n";
}

std::string wvalue(const WitnessReport& r, const std::string& key) {
    for (const auto& [k, v] : r.witness)
        if (k == key) return v;
    return {};
}

const WitnessReport* find(const ReportList& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.check == id) return &r;
    return nullptr;
}

// Every symmetric alpha-table over Q with at most max_x elements that
// satisfies the three axioms, exhaustively.
std::vector<QSet> symmetric_family(std::shared_ptr<const DQ> dq, int max_x) {
    const Quantale& q = dq->base();
    std::vector<QSet> fam;
    for (int m = 0; m <= max_x; ++m) {
        const int k = m * (m + 1) / 2;
        std::vector<Elem> free(k, 0);
        std::vector<std::string> names;
        for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
        int counter = 0;
        for (;;) {
            std::vector<Elem> alpha(static_cast<size_t>(m) * m, 0);
            int t = 0;
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j) {
                    alpha[static_cast<size_t>(i) * m + j] = free[t];
                    alpha[static_cast<size_t>(j) * m + i] = free[t];
                    ++t;
                }
            if (worst(check_qset_axioms(q, names, alpha)) == Verdict::pass)
                fam.push_back(QSet::create(dq, "s" + std::to_string(m) + "-" +
                                                   std::to_string(counter++),
                                           names, alpha));
            int i = 0;
            while (i < k && free[i] == q.size() - 1) free[i++] = 0;
            if (i == k) break;
            ++free[i];
        }
    }
    return fam;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2) qlab_bin = argv[1];

    scenario(1, "chains with the truncated-sum tensor are divisible non-frames; "
                "the stock frames are frames", 1.0, [](std::string& note) {
        for (int n = 3; n <= 6; ++n) {
            Quantale q = lukasiewicz_chain(n);
            for (bool c : q.divisibility_conditions())
                if (!c) {
                    note = q.name() + " not divisible";
                    return false;
                }
            if (q.is_frame()) {
                note = q.name() + " claims to be a frame";
                return false;
            }
        }
        for (const Quantale& f : {chain_frame(2), boolean_frame(2), boolean_frame(3)}) {
            if (!f.is_frame() || !f.divisible()) {
                note = f.name() + " should be a frame";
                return false;
            }
        }
        return true;
    });

    scenario(2, "the obstruction certificate pins the half point and keeps its shape "
                "across the divisible non-frames", 1.0, [](std::string& note) {
        auto dq3 = DQ::build(lukasiewicz_chain(3));
        ReportList rs = topos_witness(dq3);
        if (worst(rs) != Verdict::pass) {
            note = "certificate has a failing line: " + worst_line(rs);
            return false;
        }
        const WitnessReport* ni = find(rs, "topos.witness.non-idempotent");
        const WitnessReport* defect = find(rs, "topos.witness.defect");
        const WitnessReport* meets = find(rs, "topos.witness.meets");
        if (!ni || !defect || !meets) {
            note = "certificate lines missing";
            return false;
        }
        if (wvalue(*ni, "q") != "h" || wvalue(*defect, "q&(T->q)") != "0" ||
            wvalue(*meets, "q<sqcap>T") != "0" || wvalue(*meets, "q/\\T") != "h") {
            note = "wrong witness values on the 3-chain";
            return false;
        }

        std::vector<std::string> shape;
        for (const auto& r : rs) shape.push_back(r.check);
        for (const Quantale& q : {lukasiewicz_chain(4), lukasiewicz_chain(5),
                                  product(lukasiewicz_chain(3), chain_frame(2))}) {
            ReportList other = topos_witness(DQ::build(q));
            if (worst(other) != Verdict::pass) {
                note = q.name() + ": " + worst_line(other);
                return false;
            }
            std::vector<std::string> s2;
            for (const auto& r : other) s2.push_back(r.check);
            if (s2 != shape) {
                note = q.name() + " produced a different certificate shape";
                return false;
            }
        }
        return true;
    });

    scenario(3, "the three frame readings agree on every corpus quantale", 5.0,
             [](std::string& note) {
        for (const std::string& spec : default_corpus()) {
            Quantale q = resolve_corpus_entry(spec);
            if (q.size() > 8) continue;
            ReportList rs = frame_equivalence_check(q);
            if (worst(rs) != Verdict::pass) {
                note = spec + ": " + worst_line(rs);
                return false;
            }
            const std::string expect = q.is_frame() ? "yes" : "no";
            for (const char* id :
                 {"topos.frame-tensor", "topos.frame-refinement", "topos.frame-meets"}) {
                const WitnessReport* r = find(rs, id);
                if (!r || wvalue(*r, "holds") != expect) {
                    note = spec + ": reading " + id + " disagrees";
                    return false;
                }
            }
        }
        return true;
    });

    scenario(4, "both singleton routes coincide on every small symmetric table", 60.0,
             [](std::string& note) {
        struct Job {
            Quantale q;
            int max_x;
        };
        int members = 0;
        for (const Job& job : {Job{lukasiewicz_chain(3), 3}, Job{lukasiewicz_chain(4), 2}}) {
            auto dq = DQ::build(job.q);
            for (const QSet& x : symmetric_family(dq, job.max_x)) {
                auto by_cond = singletons_by_conditions(x);
                auto by_adj = singletons_by_adjoint(x);
                auto both = enumerate_singletons(x);  // re-checks mu* = mu throughout
                if (by_cond != by_adj || by_cond != both) {
                    note = job.q.name() + "/" + x.name() + ": the routes disagree";
                    return false;
                }
                ++members;
            }
        }
        if (members < 100) {
            note = "family suspiciously small: " + std::to_string(members);
            return false;
        }
        note = std::to_string(members) + " tables";
        return true;
    });

    scenario(5, "completions of that family are complete, separated, symmetric and stable",
             120.0, [](std::string& note) {
        struct Job {
            Quantale q;
            int max_x;
        };
        for (const Job& job : {Job{lukasiewicz_chain(3), 3}, Job{lukasiewicz_chain(4), 2}}) {
            auto dq = DQ::build(job.q);
            for (const QSet& x : symmetric_family(dq, job.max_x)) {
                if (worst(check_completion_laws(x)) != Verdict::pass) {
                    note = job.q.name() + "/" + x.name() + ": " +
                           worst_line(check_completion_laws(x));
                    return false;
                }
                Completion c = cauchy_completion(x);
                if (!is_cauchy_complete(c.hat) || !is_separated(c.hat.category()) ||
                    !is_symmetric(c.hat.category())) {
                    note = job.q.name() + "/" + x.name() + ": completion not in the class";
                    return false;
                }
                Completion cc = cauchy_completion(c.hat);
                if (!qset_isomorphic(cc.hat, c.hat)) {
                    note = job.q.name() + "/" + x.name() + ": completing twice changed it";
                    return false;
                }
            }
        }
        return true;
    });

    scenario(6, "the completion of a point is its relative-idempotent downset, "
                "corpus-wide", 5.0, [](std::string& note) {
        for (const std::string& spec : default_corpus()) {
            auto dq = DQ::build(resolve_corpus_entry(spec));
            for (Elem q = 0; q < dq->base().size(); ++q) {
                WitnessReport r = point_completion_check(dq, q);
                if (r.verdict != Verdict::pass) {
                    note = spec + "/" + dq->base().elem_name(q) + ": " + to_line(r);
                    return false;
                }
            }
        }
        return true;
    });

    scenario(7, "complete subobjects of the point completions are exactly the "
                "refinement downsets", 10.0, [](std::string& note) {
        for (const Quantale& q :
             {lukasiewicz_chain(3), lukasiewicz_chain(4), boolean_frame(2)}) {
            auto dq = DQ::build(q);
            for (Elem at = 0; at < q.size(); ++at) {
                WitnessReport r = cc_subobjects_check(dq, at);
                if (r.verdict != Verdict::pass) {
                    note = q.name() + "/" + q.elem_name(at) + ": " + to_line(r);
                    return false;
                }
            }
        }
        return true;
    });

    scenario(8, "pullbacks and pushouts hold for all pairs; the span embedding fails "
                "exactly at the meet defects", 60.0, [](std::string& note) {
        for (const Quantale& q : {lukasiewicz_chain(3), boolean_frame(2)}) {
            auto dq = DQ::build(q);
            auto probes = default_probes(dq);
            SqleqPoset s = SqleqPoset::build(q);
            for (Elem p = 0; p < q.size(); ++p)
                for (Elem r = p; r < q.size(); ++r) {
                    WitnessReport pb = pullback_check(dq, p, r, probes);
                    WitnessReport po = pushout_check(dq, p, r, probes);
                    WitnessReport em = embedding_check(dq, p, r);
                    if (pb.verdict != Verdict::pass || po.verdict != Verdict::pass) {
                        note = q.name() + ": diagram failure at (" + q.elem_name(p) + ", " +
                               q.elem_name(r) + ")";
                        return false;
                    }
                    if (em.verdict != Verdict::pass) {
                        note = q.name() + ": embedding biconditional broken";
                        return false;
                    }
                    bool ff = wvalue(em, "fully-faithful") == "yes";
                    bool agree =
                        s.sqcap(std::vector<Elem>{p, r}).value == q.meet(p, r);
                    if (ff != agree) {
                        note = q.name() + ": embedding verdict out of line at (" +
                               q.elem_name(p) + ", " + q.elem_name(r) + ")";
                        return false;
                    }
                }
        }
        return true;
    });

    scenario(9, "the reference values recomputed by the brute-force oracle match the "
                "library", 5.0, [](std::string& note) {
        oracle::Q oq = oracle::lukasiewicz(3);
        Quantale q = lukasiewicz_chain(3);

        if (oracle::cq(oq, 2) != std::vector<int>{0, 2} ||
            oracle::cq(oq, 1) != std::vector<int>{0, 1}) {
            note = "oracle departs from the frozen downsets";
            return false;
        }
        if (relative_idempotents(q, 2) != std::vector<Elem>{0, 2} ||
            relative_idempotents(q, 1) != std::vector<Elem>{0, 1}) {
            note = "library departs from the frozen downsets";
            return false;
        }

        if (oracle::sqcap(oq, 1, 2) != 0) {
            note = "oracle refined meet of (h, 1) is not 0";
            return false;
        }
        SqleqPoset s = SqleqPoset::build(q);
        if (s.sqcap(std::vector<Elem>{1, 2}).value != 0) {
            note = "library refined meet of (h, 1) is not 0";
            return false;
        }

        std::vector<std::vector<int>> alpha{{1, 0}, {0, 2}};
        auto ss = oracle::singletons(oq, alpha);
        std::vector<std::pair<int, std::vector<int>>> frozen{
            {0, {0, 0}}, {1, {1, 0}}, {2, {0, 2}}};
        if (ss != frozen) {
            note = "oracle departs from the frozen completed carrier";
            return false;
        }
        auto dq = DQ::build(q);
        Completion c =
            cauchy_completion(QSet::create(dq, "span", {"zp", "zq"}, {1, 0, 0, 2}));
        if (c.carrier.size() != 3) {
            note = "library carrier has the wrong size";
            return false;
        }
        for (size_t i = 0; i < 3; ++i)
            if (c.carrier[i].extent != frozen[i].first ||
                c.carrier[i].values !=
                    std::vector<Elem>(frozen[i].second.begin(), frozen[i].second.end())) {
                note = "library carrier departs from the frozen values";
                return false;
            }
        return true;
    });

    scenario(10, "the full check run is byte-identical across worker counts", 120.0,
             [](std::string& note) {
        if (qlab_bin.empty()) {
            note = "no qlab binary path given";
            return false;
        }
        int rc1 = 0, rc8 = 0;
        std::string a = testutil::run_cmd(qlab_bin + " verify --jobs 1", rc1);
        std::string b = testutil::run_cmd(qlab_bin + " verify --jobs 8", rc8);
        if (rc1 != 0 || rc8 != 0) {
            note = "verify exited " + std::to_string(rc1) + " / " + std::to_string(rc8);
            return false;
        }
        if (a != b) {
            note = "outputs differ";
            return false;
        }
        if (a.find("0 fail") == std::string::npos) {
            note = "unexpected failures in the run";
            return false;
        }
        return true;
    });

    std::cout << (failures == 0 ? "acceptance: all scenarios hold\n"
                                : "acceptance: " + std::to_string(failures) + " FAILED\n");
    return failures == 0 ? 0 : 1;
}
