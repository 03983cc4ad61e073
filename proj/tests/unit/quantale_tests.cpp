#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qlab/builders.hpp"
#include "qlab/error.hpp"
#include "qlab/quantale.hpp"

#include "../util.hpp"

using namespace qlab;

TEST_CASE("lukasiewicz(3) tables match the closed form") {
    Quantale q = lukasiewicz_chain(3);
    REQUIRE(q.size() == 3);
    CHECK(q.elem_name(0) == "0");
    CHECK(q.elem_name(1) == "h");
    CHECK(q.elem_name(2) == "1");
    CHECK(q.unit() == 2);
    CHECK(q.top() == 2);
    CHECK(q.bottom() == 0);

    // h & h = 0 is the load-bearing entry
    CHECK(q.tensor(1, 1) == 0);
    CHECK(q.tensor(1, 2) == 1);
    CHECK(q.tensor(2, 2) == 2);

    // residuals:  h -> 0 = h,  1 -> h = h,  h -> h = 1
    CHECK(q.residual(1, 0) == 1);
    CHECK(q.residual(2, 1) == 1);
    CHECK(q.residual(1, 1) == 2);
}

TEST_CASE("residual adjunction holds exhaustively") {
    for (const Quantale& q : {lukasiewicz_chain(4), boolean_frame(2), testutil::drastic4()}) {
        for (Elem p = 0; p < q.size(); ++p)
            for (Elem a = 0; a < q.size(); ++a)
                for (Elem r = 0; r < q.size(); ++r)
                    CHECK(q.leq(q.tensor(p, a), r) == q.leq(p, q.residual(a, r)));
    }
}

TEST_CASE("divisibility classification across the builders") {
    for (int n = 3; n <= 6; ++n) {
        Quantale q = lukasiewicz_chain(n);
        CAPTURE(n);
        CHECK(q.divisible());
        for (bool c : q.divisibility_conditions()) CHECK(c);
        CHECK_FALSE(q.is_frame());
        CHECK(q.integral());
    }
    CHECK(chain_frame(5).divisible());
    CHECK(chain_frame(5).is_frame());
    CHECK(boolean_frame(3).is_frame());
    CHECK(lukasiewicz_chain(2).is_frame());  // 2-chain: tensor forced to meet

    Quantale d = testutil::drastic4();
    CHECK_FALSE(d.divisible());
    for (bool c : d.divisibility_conditions()) CHECK_FALSE(c);
    CHECK_FALSE(d.is_frame());
    CHECK(d.integral());  // integral but not divisible
}

TEST_CASE("divisibility report carries the yes/no outcome and agrees with the flags") {
    auto find = [](const ReportList& rs, const std::string& id) -> const WitnessReport& {
        for (const auto& r : rs)
            if (r.check == id) return r;
        REQUIRE(false);
        return rs.front();
    };
    auto value = [](const WitnessReport& r, const std::string& key) {
        for (const auto& [k, v] : r.witness)
            if (k == key) return v;
        return std::string{};
    };

    ReportList rs = divisibility_report(lukasiewicz_chain(4));
    CHECK(worst(rs) == Verdict::pass);
    CHECK(value(find(rs, "quantale.divisible"), "divisible") == "yes");

    rs = divisibility_report(testutil::drastic4());
    CHECK(worst(rs) == Verdict::pass);  // classification, not a failure
    CHECK(value(find(rs, "quantale.divisible"), "divisible") == "no");
    for (const char* id : {"quantale.divisible.cond-i", "quantale.divisible.cond-ii",
                           "quantale.divisible.cond-iii", "quantale.divisible.cond-iv"})
        CHECK(value(find(rs, id), "holds") == "no");
}

TEST_CASE("axiom checker pinpoints a broken table") {
    Quantale ok = lukasiewicz_chain(3);
    std::vector<Elem> tensor(9);
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b) tensor[static_cast<size_t>(a) * 3 + b] = ok.tensor(a, b);

    SUBCASE("non-commutative entry") {
        tensor[0 * 3 + 1] = 1;  // 0 & h = h but h & 0 = 0
        ReportList rs = check_quantale_axioms(ok.lattice(), tensor, 2);
        CHECK(worst(rs) == Verdict::fail);
        bool comm_failed = false;
        for (const auto& r : rs)
            if (r.check == "quantale.comm" && r.verdict == Verdict::fail) comm_failed = true;
        CHECK(comm_failed);
        CHECK_THROWS_AS(Quantale::create("broken", ok.lattice(), tensor, 2), input_error);
    }
    SUBCASE("wrong unit") {
        ReportList rs = check_quantale_axioms(ok.lattice(), tensor, 1);
        CHECK(worst(rs) == Verdict::fail);
    }
    SUBCASE("out-of-range entry") {
        tensor[4] = 7;
        ReportList rs = check_quantale_axioms(ok.lattice(), tensor, 2);
        CHECK(worst(rs) == Verdict::fail);
        CHECK(rs.front().check == "quantale.table");
    }
}

TEST_CASE("idempotents and their subframe") {
    Quantale q = lukasiewicz_chain(3);
    CHECK(idempotents(q) == std::vector<Elem>{0, 2});
    CHECK(idempotent_subframe_check(q).verdict == Verdict::pass);

    Quantale b = boolean_frame(2);
    CHECK(idempotents(b).size() == 4);  // frame: everything idempotent
}

TEST_CASE("relative idempotents of the 3-element chain") {
    Quantale q = lukasiewicz_chain(3);
    CHECK(relative_idempotents(q, 0) == std::vector<Elem>{0});
    CHECK(relative_idempotents(q, 1) == std::vector<Elem>{0, 1});  // C_h = {0, h}
    CHECK(relative_idempotents(q, 2) == std::vector<Elem>{0, 2});  // C_1 = {0, 1}
    for (Elem at = 0; at < q.size(); ++at)
        CHECK(cq_subframe_check(q, at).verdict == Verdict::pass);
}

TEST_CASE("composite over an object agrees in both forms and respects units") {
    Quantale q = lukasiewicz_chain(4);
    for (Elem at = 0; at < q.size(); ++at)
        for (Elem u = 0; u < q.size(); ++u) {
            if (!q.leq(u, at)) continue;
            CHECK(circ(q, at, at, u) == u);
            CHECK(circ(q, at, u, at) == u);
            for (Elem v = 0; v < q.size(); ++v) {
                if (!q.leq(v, at)) continue;
                Elem c = circ(q, at, v, u);
                CHECK(c == q.tensor(v, q.residual(at, u)));
                CHECK(c == q.tensor(q.residual(at, v), u));
            }
        }
    CHECK_THROWS_AS(circ(q, 1, 3, 1), precondition_error);  // v above at
    CHECK_THROWS_AS(circ(testutil::drastic4(), 2, 1, 1), precondition_error);
}

TEST_CASE("downset quantale at the top is the base quantale") {
    Quantale q = lukasiewicz_chain(4);
    Quantale d = downset_quantale(q, q.top());
    REQUIRE(d.size() == q.size());
    for (Elem a = 0; a < q.size(); ++a)
        for (Elem b = 0; b < q.size(); ++b) CHECK(d.tensor(a, b) == q.tensor(a, b));
    CHECK(d.unit() == q.unit());

    Quantale dh = downset_quantale(q, 2);
    CHECK(dh.size() == 3);
    CHECK(dh.unit() == dh.top());
    CHECK(dh.divisible());
}

TEST_CASE("meet via residual works only from relative idempotents") {
    Quantale q = lukasiewicz_chain(3);
    for (Elem r = 0; r < q.size(); ++r) {
        CHECK(meet_via_residual(q, 1, 0, r) == q.meet(0, r));
        CHECK(meet_via_residual(q, 1, 1, r) == q.meet(1, r));
    }
    CHECK_THROWS_AS(meet_via_residual(q, 2, 1, 1), precondition_error);  // h not in C_1
}

TEST_CASE("products preserve divisibility and break frames componentwise") {
    Quantale p = product(lukasiewicz_chain(3), chain_frame(2));
    CHECK(p.size() == 6);
    CHECK(p.divisible());
    CHECK_FALSE(p.is_frame());
    CHECK(p.elem_name(0) == "(0,0)");

    Quantale f = product(chain_frame(2), boolean_frame(2));
    CHECK(f.is_frame());
}
