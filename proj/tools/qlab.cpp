// qlab: inspect and verify finite commutative quantales and the Q-sets over
// them.  See the README for the file formats and the check catalogue.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlab/builders.hpp"
#include "qlab/completion.hpp"
#include "qlab/dq.hpp"
#include "qlab/error.hpp"
#include "qlab/qset.hpp"
#include "qlab/quantale.hpp"
#include "qlab/sqleq.hpp"
#include "qlab/suite.hpp"
#include "qlab/textio.hpp"
#include "qlab/topos.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitSuite = 3;

struct Cli {
    std::string format = "text";
    std::vector<std::string> files;
    std::vector<std::string> corpus;
    int max_q = 6;
    int max_x = 4;
    int jobs = 1;
};

bool json_mode(const Cli& cli) { return cli.format == "json"; }

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json report_json(const qlab::WitnessReport& r) {
    ordered_json witness = ordered_json::array();
    for (const auto& [k, v] : r.witness) witness.push_back(ordered_json{{"key", k}, {"value", v}});
    return ordered_json{{"check", r.check},
                        {"verdict", qlab::to_string(r.verdict)},
                        {"law", r.law},
                        {"witness", witness},
                        {"note", r.note}};
}

ordered_json reports_json(const qlab::ReportList& rs) {
    ordered_json out = ordered_json::array();
    for (const auto& r : rs) out.push_back(report_json(r));
    return out;
}

void print_reports(const qlab::ReportList& rs) {
    for (const auto& r : rs) std::cout << qlab::to_line(r) << "\n";
}

// ---- input loading -----------------------------------------------------------

struct LoadedQuantale {
    std::string label;  // the argument as given
    qlab::Quantale q;
};

struct LoadedQSet {
    std::string label;
    qlab::QSet x;
};

// Arguments are builder expressions, quantale files, or Q-set files.  A Q-set
// binds to a quantale loaded earlier in the argument list whose name matches
// its `over` clause, or failing that to a builder expression of that name.
class InputLoader {
public:
    void add(const std::string& arg) {
        if (const auto text = slurp(arg)) {
            if (qlab::sniff_kind(*text) == qlab::FileKind::quantale) {
                quantales_.push_back({arg, qlab::parse_quantale(*text)});
            } else {
                const qlab::QSetFile f = qlab::parse_qset_file(*text);
                qsets_.push_back({arg, qlab::bind_qset_file(f, dq_for(f.quantale_name))});
            }
            return;
        }
        quantales_.push_back({arg, qlab::resolve_corpus_entry(arg)});
    }

    const std::vector<LoadedQuantale>& quantales() const { return quantales_; }
    const std::vector<LoadedQSet>& qsets() const { return qsets_; }

    std::shared_ptr<const qlab::DQ> dq_for(const std::string& name) {
        if (const auto it = dqs_.find(name); it != dqs_.end()) return it->second;
        for (const auto& lq : quantales_)
            if (lq.q.name() == name) return dqs_[name] = qlab::DQ::build(lq.q);
        try {
            const qlab::Quantale q = qlab::resolve_corpus_entry(name);
            return dqs_[name] = qlab::DQ::build(q);
        } catch (const qlab::parse_error&) {
            throw qlab::input_error("Q-set declared over unknown quantale '" + name +
                                    "': not among the loaded files and not a builder expression");
        }
    }

private:
    std::vector<LoadedQuantale> quantales_;
    std::vector<LoadedQSet> qsets_;
    std::map<std::string, std::shared_ptr<const qlab::DQ>> dqs_;
};

// ---- validate ----------------------------------------------------------------

int cmd_validate(const Cli& cli) {
    ordered_json doc{{"command", "validate"}, {"files", ordered_json::array()}};
    int rc = kExitPass;

    InputLoader loader;  // shared so later Q-sets can bind to earlier quantale files
    for (const std::string& arg : cli.files) {
        ordered_json entry{{"file", arg}};
        try {
            const std::size_t nq = loader.quantales().size();
            loader.add(arg);
            if (loader.quantales().size() > nq) {
                const qlab::Quantale& q = loader.quantales().back().q;
                const qlab::ReportList reps = qlab::check_quantale_axioms(q);
                entry["kind"] = "quantale";
                entry["name"] = q.name();
                entry["size"] = q.size();
                entry["reports"] = reports_json(reps);
                if (!json_mode(cli)) {
                    std::cout << "== " << arg << ": quantale " << q.name() << " (" << q.size()
                              << " elements)\n";
                    print_reports(reps);
                }
                if (qlab::worst(reps) == qlab::Verdict::fail) rc = std::max(rc, kExitInput);
            } else {
                const qlab::QSet& x = loader.qsets().back().x;
                std::vector<qlab::Elem> alpha(static_cast<std::size_t>(x.size()) * x.size());
                for (int a = 0; a < x.size(); ++a)
                    for (int b = 0; b < x.size(); ++b)
                        alpha[static_cast<std::size_t>(a) * x.size() + b] = x.alpha(a, b);
                const qlab::ReportList reps =
                    qlab::check_qset_axioms(x.base(), x.elem_names(), alpha);
                entry["kind"] = "qset";
                entry["name"] = x.name();
                entry["quantale"] = x.base().name();
                entry["size"] = x.size();
                entry["reports"] = reports_json(reps);
                if (!json_mode(cli)) {
                    std::cout << "== " << arg << ": qset " << x.name() << " over "
                              << x.base().name() << " (" << x.size() << " elements)\n";
                    print_reports(reps);
                }
                if (qlab::worst(reps) == qlab::Verdict::fail) rc = std::max(rc, kExitInput);
            }
        } catch (const qlab::parse_error& e) {
            entry["error"] = e.what();
            if (!json_mode(cli)) std::cout << "[FAIL] " << arg << ": " << e.what() << "\n";
            rc = std::max(rc, kExitUsage);
        } catch (const qlab::error& e) {
            entry["error"] = e.what();
            if (!json_mode(cli)) std::cout << "[FAIL] " << arg << ": " << e.what() << "\n";
            rc = std::max(rc, kExitInput);
        }
        doc["files"].push_back(std::move(entry));
    }
    if (json_mode(cli)) std::cout << doc.dump(2) << "\n";
    return rc;
}

// ---- analyze -----------------------------------------------------------------

std::string set_string(const qlab::Quantale& q, const std::vector<qlab::Elem>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += q.elem_name(xs[i]);
    }
    return s + "}";
}

void print_matrix(const qlab::Quantale& q,
                  const std::function<std::string(qlab::Elem, qlab::Elem)>& cell) {
    std::size_t w = 1;
    for (qlab::Elem a = 0; a < q.size(); ++a) w = std::max(w, q.elem_name(a).size());
    for (qlab::Elem a = 0; a < q.size(); ++a)
        for (qlab::Elem b = 0; b < q.size(); ++b) w = std::max(w, cell(a, b).size());
    const auto pad = [&](const std::string& s) {
        return std::string(w - std::min(w, s.size()), ' ') + s;
    };
    std::cout << "  " << pad("") << " |";
    for (qlab::Elem b = 0; b < q.size(); ++b) std::cout << " " << pad(q.elem_name(b));
    std::cout << "\n";
    for (qlab::Elem a = 0; a < q.size(); ++a) {
        std::cout << "  " << pad(q.elem_name(a)) << " |";
        for (qlab::Elem b = 0; b < q.size(); ++b) std::cout << " " << pad(cell(a, b));
        std::cout << "\n";
    }
}

int cmd_analyze(const Cli& cli) {
    ordered_json doc{{"command", "analyze"}, {"quantales", ordered_json::array()}};

    InputLoader loader;
    for (const std::string& arg : cli.files) loader.add(arg);
    if (!loader.qsets().empty())
        throw qlab::input_error("analyze expects quantales, not Q-set files");

    for (const auto& [label, q] : loader.quantales()) {
        const auto& conds = q.divisibility_conditions();
        std::vector<qlab::Elem> idem = qlab::idempotents(q);

        ordered_json entry{{"file", label},
                           {"name", q.name()},
                           {"size", q.size()},
                           {"divisible", q.divisible()},
                           {"conditions", ordered_json::array({conds[0], conds[1], conds[2],
                                                               conds[3]})},
                           {"frame", q.is_frame()}};
        ordered_json idem_names = ordered_json::array();
        for (qlab::Elem e : idem) idem_names.push_back(q.elem_name(e));
        entry["idempotents"] = idem_names;

        if (!json_mode(cli)) {
            std::cout << "quantale " << q.name() << " (" << q.size() << " elements: ";
            for (qlab::Elem e = 0; e < q.size(); ++e)
                std::cout << (e ? ", " : "") << q.elem_name(e);
            std::cout << ")\n";
            std::cout << "unit: " << q.elem_name(q.unit()) << "   top: " << q.elem_name(q.top())
                      << "   bottom: " << q.elem_name(q.bottom()) << "\n";
            std::cout << "divisible: " << (q.divisible() ? "yes" : "no") << "   [(i) "
                      << (conds[0] ? "yes" : "no") << "  (ii) " << (conds[1] ? "yes" : "no")
                      << "  (iii) " << (conds[2] ? "yes" : "no") << "  (iv) "
                      << (conds[3] ? "yes" : "no") << "]\n";
            std::cout << "frame: " << (q.is_frame() ? "yes" : "no") << "\n";
            std::cout << "idempotents: " << set_string(q, idem) << "\n";
        }

        if (!q.divisible()) {
            entry["refinement"] = nullptr;
            if (!json_mode(cli))
                std::cout << "refinement analysis skipped: the tensor is not divisible\n\n";
            doc["quantales"].push_back(std::move(entry));
            continue;
        }

        const qlab::SqleqPoset sq = qlab::SqleqPoset::build(q, cli.max_q);
        const auto hasse = sq.hasse();
        ordered_json edges = ordered_json::array();
        for (const auto& [a, b] : hasse)
            edges.push_back(ordered_json::array({q.elem_name(a), q.elem_name(b)}));
        ordered_json cq = ordered_json::object();
        for (qlab::Elem e = 0; e < q.size(); ++e) {
            ordered_json members = ordered_json::array();
            for (qlab::Elem p : sq.C(e)) members.push_back(q.elem_name(p));
            cq[q.elem_name(e)] = members;
        }
        ordered_json meets = ordered_json::array();
        for (qlab::Elem a = 0; a < q.size(); ++a) {
            ordered_json row = ordered_json::array();
            for (qlab::Elem b = 0; b < q.size(); ++b)
                row.push_back(q.elem_name(sq.sqcap(std::vector<qlab::Elem>{a, b}).value));
            meets.push_back(std::move(row));
        }
        entry["refinement"] =
            ordered_json{{"hasse", edges}, {"cq", cq}, {"refined_meet", meets}};

        if (!json_mode(cli)) {
            std::cout << "refinement (p [= q) hasse edges: ";
            if (hasse.empty()) std::cout << "(none)";
            for (std::size_t i = 0; i < hasse.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << q.elem_name(hasse[i].first) << " [= "
                          << q.elem_name(hasse[i].second);
            }
            std::cout << "\n";
            std::cout << "C_q table:\n";
            for (qlab::Elem e = 0; e < q.size(); ++e)
                std::cout << "  C_" << q.elem_name(e) << " = " << set_string(q, sq.C(e)) << "\n";
            std::cout << "refined meet (p <sqcap> q):\n";
            print_matrix(q, [&](qlab::Elem a, qlab::Elem b) {
                return q.elem_name(sq.sqcap(std::vector<qlab::Elem>{a, b}).value);
            });
            std::cout << "\n";
        }
        doc["quantales"].push_back(std::move(entry));
    }
    if (json_mode(cli)) std::cout << doc.dump(2) << "\n";
    return kExitPass;
}

// ---- singletons / complete ---------------------------------------------------

std::vector<LoadedQSet> require_qsets(const Cli& cli, InputLoader& loader) {
    for (const std::string& arg : cli.files) loader.add(arg);
    if (loader.qsets().empty())
        throw qlab::parse_error("no Q-set file among the arguments", 1);
    return loader.qsets();
}

int cmd_singletons(const Cli& cli) {
    ordered_json doc{{"command", "singletons"}, {"qsets", ordered_json::array()}};
    InputLoader loader;
    for (const LoadedQSet& lx : require_qsets(cli, loader)) {
        const qlab::QSet& x = lx.x;
        const std::vector<qlab::Singleton> ss = qlab::enumerate_singletons(x);
        const bool cc = qlab::is_cauchy_complete(x);

        ordered_json list = ordered_json::array();
        for (const auto& s : ss) {
            ordered_json values = ordered_json::array();
            for (qlab::Elem v : s.values) values.push_back(x.base().elem_name(v));
            list.push_back(ordered_json{{"extent", x.base().elem_name(s.extent)},
                                        {"values", values}});
        }
        doc["qsets"].push_back(ordered_json{{"file", lx.label},
                                            {"name", x.name()},
                                            {"quantale", x.base().name()},
                                            {"size", x.size()},
                                            {"singletons", list},
                                            {"cauchy_complete", cc}});
        if (!json_mode(cli)) {
            std::cout << "qset " << x.name() << " over " << x.base().name() << " (" << x.size()
                      << " elements): " << ss.size() << " singleton"
                      << (ss.size() == 1 ? "" : "s") << "\n";
            for (const auto& s : ss)
                std::cout << "  " << qlab::singleton_name(x, s) << "  extent "
                          << x.base().elem_name(s.extent) << "\n";
            std::cout << (cc ? "already Cauchy complete" : "not Cauchy complete") << "\n";
        }
    }
    if (json_mode(cli)) std::cout << doc.dump(2) << "\n";
    return kExitPass;
}

int cmd_complete(const Cli& cli) {
    ordered_json doc{{"command", "complete"}, {"qsets", ordered_json::array()}};
    InputLoader loader;
    for (const LoadedQSet& lx : require_qsets(cli, loader)) {
        const qlab::QSet& x = lx.x;
        const qlab::Completion c = qlab::cauchy_completion(x);
        const qlab::QSet& hat = c.hat;

        ordered_json carrier = ordered_json::array();
        for (std::size_t i = 0; i < c.carrier.size(); ++i)
            carrier.push_back(ordered_json{
                {"name", hat.elem_name(static_cast<int>(i))},
                {"extent", x.base().elem_name(c.carrier[i].extent)}});
        ordered_json hom = ordered_json::array();
        for (int a = 0; a < hat.size(); ++a) {
            ordered_json row = ordered_json::array();
            for (int b = 0; b < hat.size(); ++b)
                row.push_back(x.base().elem_name(hat.alpha(a, b)));
            hom.push_back(std::move(row));
        }
        ordered_json yo = ordered_json::array();
        for (int a = 0; a < x.size(); ++a)
            yo.push_back(ordered_json::array(
                {x.elem_name(a), hat.elem_name(c.yoneda[a])}));
        doc["qsets"].push_back(ordered_json{{"file", lx.label},
                                            {"name", x.name()},
                                            {"quantale", x.base().name()},
                                            {"size", x.size()},
                                            {"completion_size", hat.size()},
                                            {"carrier", carrier},
                                            {"hom", hom},
                                            {"yoneda", yo}});
        if (!json_mode(cli)) {
            std::cout << "completion of " << x.name() << " over " << x.base().name() << ": "
                      << hat.size() << " element" << (hat.size() == 1 ? "" : "s")
                      << (hat.size() == x.size() ? " (size unchanged)" : "") << "\n";
            for (int a = 0; a < hat.size(); ++a)
                std::cout << "  " << hat.elem_name(a) << "  extent "
                          << x.base().elem_name(hat.type(a)) << "\n";
            std::cout << "hom:\n";
            std::size_t w = 1;
            for (int a = 0; a < hat.size(); ++a)
                for (int b = 0; b < hat.size(); ++b)
                    w = std::max(w, x.base().elem_name(hat.alpha(a, b)).size());
            for (int a = 0; a < hat.size(); ++a) {
                std::cout << " ";
                for (int b = 0; b < hat.size(); ++b) {
                    const std::string s = x.base().elem_name(hat.alpha(a, b));
                    std::cout << " " << std::string(w - std::min(w, s.size()), ' ') << s;
                }
                std::cout << "\n";
            }
            std::cout << "canonical embedding:\n";
            for (int a = 0; a < x.size(); ++a)
                std::cout << "  " << x.elem_name(a) << " -> " << hat.elem_name(c.yoneda[a])
                          << "\n";
        }
    }
    if (json_mode(cli)) std::cout << doc.dump(2) << "\n";
    return kExitPass;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const Cli& cli) {
    qlab::SuiteConfig cfg;
    cfg.corpus = cli.corpus;
    for (const std::string& f : cli.files) cfg.corpus.push_back(f);
    cfg.max_q = cli.max_q;
    cfg.max_x = cli.max_x;
    cfg.jobs = cli.jobs;

    const qlab::SuiteResult res = qlab::run_suite(cfg);

    if (json_mode(cli)) {
        ordered_json doc{{"command", "verify"},
                         {"verdict", qlab::to_string(res.verdict)},
                         {"passes", res.passes},
                         {"warns", res.warns},
                         {"fails", res.fails},
                         {"runs", ordered_json::array()}};
        for (const auto& run : res.runs)
            doc["runs"].push_back(ordered_json{{"spec", run.spec},
                                               {"name", run.name},
                                               {"size", run.size},
                                               {"reports", reports_json(run.reports)}});
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& run : res.runs) {
            std::cout << "== " << run.name << " (" << run.size << " elements)";
            if (run.spec != run.name) std::cout << "  [" << run.spec << "]";
            std::cout << "\n";
            print_reports(run.reports);
            std::cout << "\n";
        }
        std::cout << "== summary: " << res.runs.size() << " quantales, " << res.passes
                  << " pass, " << res.warns << " warn, " << res.fails << " fail\n";
    }
    return res.fails > 0 ? kExitSuite : kExitPass;
}

// ---- witness -----------------------------------------------------------------

int cmd_witness(const Cli& cli) {
    ordered_json doc{{"command", "witness"}, {"quantales", ordered_json::array()}};
    InputLoader loader;
    for (const std::string& arg : cli.files) loader.add(arg);
    if (!loader.qsets().empty())
        throw qlab::input_error("witness expects quantales, not Q-set files");

    int rc = kExitPass;
    for (const auto& [label, q] : loader.quantales()) {
        if (!q.divisible()) {
            const qlab::ReportList reps = qlab::divisibility_report(q);
            doc["quantales"].push_back(ordered_json{{"file", label},
                                                    {"name", q.name()},
                                                    {"divisible", false},
                                                    {"reports", reports_json(reps)}});
            if (!json_mode(cli)) {
                std::cout << "== " << q.name()
                          << ": not divisible; no certificate applies\n";
                print_reports(reps);
            }
            rc = std::max(rc, kExitInput);
            continue;
        }
        const auto dq = loader.dq_for(q.name());
        const qlab::ReportList reps = qlab::topos_witness(dq);
        doc["quantales"].push_back(ordered_json{{"file", label},
                                                {"name", q.name()},
                                                {"divisible", true},
                                                {"frame", q.is_frame()},
                                                {"reports", reports_json(reps)}});
        if (!json_mode(cli)) {
            std::cout << "== " << q.name() << " (" << q.size() << " elements)\n";
            print_reports(reps);
        }
        if (qlab::worst(reps) == qlab::Verdict::fail) rc = std::max(rc, kExitSuite);
    }
    if (json_mode(cli)) std::cout << doc.dump(2) << "\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quantale & Q-set laboratory"};
    app.require_subcommand(1);
    Cli cli;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cli.format, "output format (text or json)")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* validate =
        app.add_subcommand("validate", "check quantale / Q-set files against their axioms");
    validate->add_option("files", cli.files, "quantale or Q-set files, or builder expressions")
        ->required();
    add_common(validate);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "divisibility, frame verdict, idempotents, refinement order and meets");
    analyze->add_option("files", cli.files, "quantale files or builder expressions")->required();
    analyze->add_option("--max-q", cli.max_q, "exhaustive subset bound")
        ->check(CLI::PositiveNumber);
    add_common(analyze);

    CLI::App* singletons =
        app.add_subcommand("singletons", "enumerate the singletons of Q-set files");
    singletons->add_option("files", cli.files, "Q-set files (plus quantale files they refer to)")
        ->required();
    add_common(singletons);

    CLI::App* complete =
        app.add_subcommand("complete", "print the Cauchy completion of Q-set files");
    complete->add_option("files", cli.files, "Q-set files (plus quantale files they refer to)")
        ->required();
    add_common(complete);

    CLI::App* verify =
        app.add_subcommand("verify", "run every check bundle over a corpus of quantales");
    verify->add_option("entries", cli.files, "corpus entries (builders or files)");
    verify->add_option("--corpus", cli.corpus, "corpus entries (builders or files)");
    verify->add_option("--max-q", cli.max_q, "exhaustive subset bound")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-x", cli.max_x, "largest generated Q-set carrier")
        ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", cli.jobs, "worker threads (output is identical for any value)")
        ->check(CLI::PositiveNumber);
    add_common(verify);

    CLI::App* witness =
        app.add_subcommand("witness", "print the obstruction certificate for each quantale");
    witness->add_option("files", cli.files, "quantale files or builder expressions")->required();
    add_common(witness);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(cli);
        if (app.got_subcommand(analyze)) return cmd_analyze(cli);
        if (app.got_subcommand(singletons)) return cmd_singletons(cli);
        if (app.got_subcommand(complete)) return cmd_complete(cli);
        if (app.got_subcommand(verify)) return cmd_verify(cli);
        if (app.got_subcommand(witness)) return cmd_witness(cli);
    } catch (const qlab::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qlab::internal_check_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitSuite;
    } catch (const qlab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSuite;
    }
    return kExitUsage;
}
