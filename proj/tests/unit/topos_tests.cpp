#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "qlab/builders.hpp"
#include "qlab/sqleq.hpp"
#include "qlab/topos.hpp"

using namespace qlab;

namespace {

std::string value(const WitnessReport& r, const std::string& key) {
    for (const auto& [k, v] : r.witness)
        if (k == key) return v;
    return {};
}

const WitnessReport* find(const ReportList& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.check == id) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("probe objects are complete, separated and symmetric") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    auto probes = default_probes(dq);
    CHECK(probes.size() >= 4);
    for (const QSet& w : probes) {
        CAPTURE(w.name());
        CHECK(is_cauchy_complete(w));
        CHECK(is_separated(w.category()));
        CHECK(is_symmetric(w.category()));
    }
    // deterministic: same call, same names in the same order
    auto again = default_probes(dq);
    REQUIRE(again.size() == probes.size());
    for (size_t i = 0; i < probes.size(); ++i) CHECK(again[i].name() == probes[i].name());
}

TEST_CASE("complete subobjects of a relative-idempotent downset") {
    for (const Quantale& q : {lukasiewicz_chain(3), lukasiewicz_chain(4), boolean_frame(2)}) {
        auto dq = DQ::build(q);
        for (Elem at = 0; at < q.size(); ++at) {
            CAPTURE(q.name());
            CAPTURE(at);
            CHECK(cc_subobjects_check(dq, at).verdict == Verdict::pass);
        }
    }
}

TEST_CASE("pullbacks and pushouts over the obstruction quantale") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    auto probes = default_probes(dq);
    for (Elem p = 0; p < 3; ++p)
        for (Elem q = p; q < 3; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(pullback_check(dq, p, q, probes).verdict == Verdict::pass);
            CHECK(pushout_check(dq, p, q, probes).verdict == Verdict::pass);
        }
}

TEST_CASE("the embedding of the two-point span detects the meet defect") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    SqleqPoset s = SqleqPoset::build(dq->base());

    for (Elem p = 0; p < 3; ++p)
        for (Elem q = p; q < 3; ++q) {
            WitnessReport r = embedding_check(dq, p, q);
            CHECK(r.verdict == Verdict::pass);  // the biconditional itself
            bool ff = value(r, "fully-faithful") == "yes";
            bool agree = s.sqcap(std::vector<Elem>{p, q}).value == dq->base().meet(p, q);
            CHECK(ff == agree);
        }

    // the (h, 1) span is the failing one
    WitnessReport r = embedding_check(dq, 1, 2);
    CHECK(value(r, "fully-faithful") == "no");
    CHECK(value(r, "p<sqcap>q") == "0");
    CHECK(value(r, "p/\\q") == "h");

    // over a frame every span embeds
    auto bq = DQ::build(boolean_frame(2));
    for (Elem p = 0; p < 4; ++p)
        for (Elem q = p; q < 4; ++q)
            CHECK(value(embedding_check(bq, p, q), "fully-faithful") == "yes");
}

TEST_CASE("the three frame readings agree in both directions") {
    for (const Quantale& q : {lukasiewicz_chain(3), lukasiewicz_chain(5), chain_frame(3),
                              boolean_frame(2), product(lukasiewicz_chain(3), chain_frame(2))}) {
        CAPTURE(q.name());
        ReportList rs = frame_equivalence_check(q);
        CHECK(worst(rs) == Verdict::pass);
        const std::string expect = q.is_frame() ? "yes" : "no";
        CHECK(value(*find(rs, "topos.frame-tensor"), "holds") == expect);
        CHECK(value(*find(rs, "topos.frame-refinement"), "holds") == expect);
        CHECK(value(*find(rs, "topos.frame-meets"), "holds") == expect);
    }
}

TEST_CASE("the certificate chain for the non-frame case") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    ReportList rs = topos_witness(dq);
    CHECK(worst(rs) == Verdict::pass);

    const WitnessReport* ni = find(rs, "topos.witness.non-idempotent");
    REQUIRE(ni);
    CHECK(value(*ni, "q") == "h");

    const WitnessReport* defect = find(rs, "topos.witness.defect");
    REQUIRE(defect);
    CHECK(value(*defect, "q&(T->q)") == "0");

    const WitnessReport* meets = find(rs, "topos.witness.meets");
    REQUIRE(meets);
    CHECK(value(*meets, "q<sqcap>T") == "0");
    CHECK(value(*meets, "q/\\T") == "h");

    REQUIRE(find(rs, "topos.witness.missing-subobject"));
    REQUIRE(find(rs, "topos.witness.pushout"));
    const WitnessReport* emb = find(rs, "topos.witness.embedding");
    REQUIRE(emb);
    CHECK(value(*emb, "fully-faithful") == "no");
}

TEST_CASE("the certificate chain degenerates to one line on a frame") {
    auto dq = DQ::build(boolean_frame(2));
    ReportList rs = topos_witness(dq);
    CHECK(worst(rs) == Verdict::pass);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].check == "topos.witness");
}

TEST_CASE("the witness picks the least obstruction in a product") {
    auto dq = DQ::build(product(lukasiewicz_chain(3), chain_frame(2)));
    ReportList rs = topos_witness(dq);
    const WitnessReport* ni = find(rs, "topos.witness.non-idempotent");
    REQUIRE(ni);
    CHECK(value(*ni, "q") == "(h,0)");
    CHECK(worst(rs) == Verdict::pass);
}
