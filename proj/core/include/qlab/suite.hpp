#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/quantale.hpp"
#include "qlab/report.hpp"

namespace qlab {

// Configuration for the full verification run.
struct SuiteConfig {
    std::vector<std::string> corpus;  // builder expressions and/or file paths
    int max_q = 6;   // largest set size checked with exhaustive subsets
    int max_x = 4;   // largest generated Q-set carrier
    int jobs = 1;    // worker threads; the output is identical for any value
    std::uint64_t budget = 5'000'000;  // guard on enumerated candidate spaces
};

// "lukasiewicz(4)", "chain(3)", "boolean(2)", "product(a,b)" with nesting,
// or a path to a quantale file.  Builder expressions win over identically
// named files; throws parse_error for unknown expressions and unreadable
// paths, and input_error when a file fails the quantale axioms.
Quantale resolve_corpus_entry(const std::string& spec);

std::vector<std::string> default_corpus();

struct QuantaleRun {
    std::string spec;  // the corpus entry as given
    std::string name;
    int size = 0;
    ReportList reports;
};

struct SuiteResult {
    std::vector<QuantaleRun> runs;
    int passes = 0;
    int warns = 0;
    int fails = 0;
    Verdict verdict = Verdict::pass;
};

// Every check bundle on one quantale, in canonical order.  Non-divisible
// quantales get the unconditional bundles plus a warn line explaining that
// the enriched bundles need divisibility.
ReportList run_quantale_suite(const Quantale& q, const SuiteConfig& cfg);

// Resolves cfg.corpus (default_corpus() when empty) and runs the bundles,
// cfg.jobs quantales at a time.  Each bundle is deterministic and results
// are assembled in corpus order, so the report is byte-identical for any
// job count.
SuiteResult run_suite(const SuiteConfig& cfg);

}  // namespace qlab
