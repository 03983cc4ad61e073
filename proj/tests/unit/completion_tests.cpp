#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qlab/builders.hpp"
#include "qlab/completion.hpp"
#include "qlab/error.hpp"
#include "qlab/sqleq.hpp"

using namespace qlab;

TEST_CASE("completing the obstruction span over lukasiewicz(3)") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    QSet z = QSet::create(dq, "span", {"zp", "zq"}, {1, 0, 0, 2});

    Completion c = cauchy_completion(z);
    REQUIRE(c.carrier.size() == 3);
    CHECK(c.carrier[0] == Singleton{0, {0, 0}});
    CHECK(c.carrier[1] == Singleton{1, {1, 0}});
    CHECK(c.carrier[2] == Singleton{2, {0, 2}});

    // the completed homs: alpha^(mu, lambda) = \/_x lambda(x) o mu(x)
    CHECK(c.hat.alpha(1, 1) == 1);
    CHECK(c.hat.alpha(2, 2) == 2);
    CHECK(c.hat.alpha(1, 2) == 0);
    CHECK(c.hat.alpha(0, 1) == 0);

    // yoneda lands on the rows
    REQUIRE(c.yoneda.size() == 2);
    CHECK(c.yoneda[0] == 1);
    CHECK(c.yoneda[1] == 2);

    CHECK(is_cauchy_complete(c.hat));
    CHECK(is_separated(c.hat.category()));
    CHECK(is_symmetric(c.hat.category()));
    CHECK(worst(check_completion_laws(z)) == Verdict::pass);

    // completing a completion adds nothing
    Completion cc = cauchy_completion(c.hat);
    CHECK(cc.carrier.size() == c.carrier.size());
    CHECK(qset_isomorphic(cc.hat, c.hat));
}

TEST_CASE("the completion of a point is the relative-idempotent downset") {
    for (const Quantale& q : {lukasiewicz_chain(3), lukasiewicz_chain(4), boolean_frame(2)}) {
        auto dq = DQ::build(q);
        for (Elem at = 0; at < q.size(); ++at) {
            CAPTURE(q.name());
            CAPTURE(at);
            CHECK(point_completion_check(dq, at).verdict == Verdict::pass);

            Completion c = cauchy_completion(qset_point(dq, at));
            auto cs = relative_idempotents(q, at);
            REQUIRE(c.carrier.size() == cs.size());
            for (size_t i = 0; i < cs.size(); ++i) {
                CHECK(c.carrier[i].extent == cs[i]);
                CHECK(c.hat.type(static_cast<int>(i)) == cs[i]);
            }
            // hom = binary meet on the carrier
            for (size_t i = 0; i < cs.size(); ++i)
                for (size_t j = 0; j < cs.size(); ++j)
                    CHECK(c.hat.alpha(static_cast<int>(i), static_cast<int>(j)) ==
                          q.meet(cs[i], cs[j]));
        }
    }
}

TEST_CASE("restriction rows exist uniquely inside complete separated q-sets") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    const Quantale& q = dq->base();
    QSet y = qset_meet(dq);  // (Q, /\): Cauchy complete and separated
    SqleqPoset s = SqleqPoset::build(q);

    for (int a = 0; a < y.size(); ++a)
        for (Elem p : s.C(y.type(a))) {
            Singleton r = restricted_row(y, a, p);
            CHECK(r.extent == p);
            for (int t = 0; t < y.size(); ++t) CHECK(r.values[t] == q.meet(y.alpha(a, t), p));

            auto in = restrict_in(y, a, p);
            REQUIRE(in.has_value());
            // in (Q, /\) the restriction of a to p is p itself
            CHECK(*in == p);
        }

    // p outside C_{|a|} is rejected
    CHECK_THROWS_AS(restricted_row(y, 2, 1), precondition_error);  // h not in C_1
}

TEST_CASE("the restrictions of an element assemble into a functor") {
    auto dq = DQ::build(lukasiewicz_chain(4));
    QSet y = qset_meet(dq);
    for (int a = 0; a < y.size(); ++a) {
        std::vector<int> f = cq_functor(y, a);
        QSet dom = qset_cq(dq, y.type(a));
        REQUIRE(static_cast<int>(f.size()) == dom.size());
        CHECK(is_functor(dom.category(), y.category(), f));
        // the top of C_q lands on the element itself
        CHECK(f.back() == a);
    }
}

TEST_CASE("inclusions between relative-idempotent downsets track refinement") {
    Quantale q = lukasiewicz_chain(3);
    SqleqPoset s = SqleqPoset::build(q);
    for (Elem p = 0; p < q.size(); ++p)
        for (Elem r = 0; r < q.size(); ++r)
            CHECK(cq_inclusion_exists(q, p, r) == s.sqleq(p, r));
}

TEST_CASE("equalizers of parallel functors stay in the complete separated world") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    QSet x = qset_cq(dq, 2);  // {0, 1} with meet
    QSet y = qset_meet(dq);

    auto fs = all_functors(x.category(), y.category());
    REQUIRE(fs.has_value());
    REQUIRE(fs->size() >= 1);

    for (const auto& f : *fs)
        for (const auto& g : *fs) {
            Equalizer e = equalizer_ccsym(x, y, f, g);
            CHECK(is_cauchy_complete(e.obj));
            CHECK(is_separated(e.obj.category()));
            CHECK(is_symmetric(e.obj.category()));
            // the equalizer of equal maps is everything
            if (f == g) CHECK(e.obj.size() == x.size());
            for (size_t i = 0; i < e.include.size(); ++i)
                CHECK(f[e.include[i]] == g[e.include[i]]);

            WitnessReport u = equalizer_universal_check(x, y, f, g, e, qset_cq(dq, 1));
            CHECK(u.verdict == Verdict::pass);
        }
}

TEST_CASE("transposing along yoneda recovers the original map") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    QSet z = QSet::create(dq, "span", {"zp", "zq"}, {1, 0, 0, 2});
    QSet y = qset_meet(dq);

    auto fs = all_functors(z.category(), y.category());
    REQUIRE(fs.has_value());
    Completion cz = cauchy_completion(z);
    for (const auto& f : *fs) {
        std::vector<int> t = transpose_map(z, y, f, cz);
        REQUIRE(t.size() == cz.carrier.size());
        CHECK(is_functor(cz.hat.category(), y.category(), t));
        for (int a = 0; a < z.size(); ++a) CHECK(t[cz.yoneda[a]] == f[a]);
    }
}

TEST_CASE("the completion functor acts on maps") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    QSet z = QSet::create(dq, "span", {"zp", "zq"}, {1, 0, 0, 2});
    QSet w = qset_meet(dq);
    Completion cz = cauchy_completion(z);
    Completion cw = cauchy_completion(w);

    auto fs = all_functors(z.category(), w.category());
    REQUIRE(fs.has_value());
    for (const auto& f : *fs) {
        std::vector<int> h = hat_functor(z, w, f, cz, cw);
        CHECK(is_functor(cz.hat.category(), cw.hat.category(), h));
        // the square with the yoneda embeddings commutes
        for (int a = 0; a < z.size(); ++a) CHECK(h[cz.yoneda[a]] == cw.yoneda[f[a]]);
    }
}
