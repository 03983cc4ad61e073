#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "qlab/builders.hpp"
#include "qlab/dq.hpp"
#include "qlab/error.hpp"
#include "qlab/qset.hpp"
#include "qlab/textio.hpp"

#include "../util.hpp"

using namespace qlab;

namespace {

bool same_tables(const Quantale& a, const Quantale& b) {
    if (a.size() != b.size() || a.unit() != b.unit()) return false;
    for (Elem x = 0; x < a.size(); ++x) {
        if (a.elem_name(x) != b.elem_name(x)) return false;
        for (Elem y = 0; y < a.size(); ++y) {
            if (a.leq(x, y) != b.leq(x, y)) return false;
            if (a.tensor(x, y) != b.tensor(x, y)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("serialize then parse is the identity on the builder corpus") {
    for (const Quantale& q :
         {lukasiewicz_chain(3), lukasiewicz_chain(6), chain_frame(2), chain_frame(5),
          boolean_frame(0), boolean_frame(3), product(lukasiewicz_chain(3), chain_frame(2)),
          testutil::drastic4()}) {
        CAPTURE(q.name());
        Quantale back = parse_quantale(serialize_quantale(q));
        CHECK(same_tables(q, back));
        // and the serialized form itself is stable
        CHECK(serialize_quantale(back) == serialize_quantale(q));
    }
}

TEST_CASE("a hand-written file with comments, glue and continuation lines parses") {
    const char* text =
        "# three-element chain, tensor = truncated addition\n"
        "quantale demo\n"
        "elements: 0 h 1\n"
        "order: 0<=h   # glued pair\n"
        "       h <= 1\n"
        "\n"
        "unit: 1\n"
        "tensor:\n"
        "  0 0 0\n"
        "  0 0 h\n"
        "  0 h 1\n";
    Quantale q = parse_quantale(text);
    CHECK(q.name() == "demo");
    CHECK(q.size() == 3);
    CHECK(q.divisible());
    CHECK_FALSE(q.is_frame());
    CHECK(q.tensor(1, 1) == 0);
}

TEST_CASE("parse errors carry location information") {
    auto line_of = [](const char* text) {
        try {
            parse_quantale(text);
        } catch (const parse_error& e) {
            return e.line();
        } catch (const error&) {
        }
        return -1;
    };

    CHECK(line_of("") == 1);
    CHECK(line_of("lattice x\n") == 1);                  // wrong header
    CHECK(line_of("quantale x\nelements: a a\n") == 2);  // duplicate element

    // missing sections are reported even without a bad line
    CHECK_THROWS_AS(parse_quantale("quantale x\nelements: a b\n"), parse_error);
    // stray continuation line outside an order section
    CHECK_THROWS_AS(parse_quantale("quantale x\nelements: a\na <= a\n"), parse_error);
}

TEST_CASE("valid syntax with broken mathematics raises an input error") {
    // non-commutative "tensor"
    const char* text =
        "quantale bad\n"
        "elements: 0 1\n"
        "order: 0 <= 1\n"
        "unit: 1\n"
        "tensor:\n"
        "  0 1\n"
        "  0 1\n";
    CHECK_THROWS_AS(parse_quantale(text), input_error);
}

TEST_CASE("q-set files parse, bind and round trip") {
    const char* text =
        "qset pair over lukasiewicz(3)\n"
        "elements: x y\n"
        "hom:\n"
        "  h 0\n"
        "  0 1\n";
    QSetFile f = parse_qset_file(text);
    CHECK(f.name == "pair");
    CHECK(f.quantale_name == "lukasiewicz(3)");
    REQUIRE(f.elems.size() == 2);
    REQUIRE(f.entries.size() == 4);

    auto dq = DQ::build(lukasiewicz_chain(3));
    QSet x = bind_qset_file(f, dq);
    CHECK(x.size() == 2);
    CHECK(x.alpha(0, 0) == 1);
    CHECK(x.alpha(0, 1) == 0);
    CHECK(x.alpha(1, 1) == 2);

    QSetFile back = parse_qset_file(serialize_qset(x));
    CHECK(back.elems == f.elems);
    CHECK(back.entries == f.entries);
}

TEST_CASE("q-set binding rejects unknown value names and broken axioms") {
    auto dq = DQ::build(lukasiewicz_chain(3));
    QSetFile f;
    f.name = "bad";
    f.quantale_name = "lukasiewicz(3)";
    f.elems = {"x", "y"};

    f.entries = {"h", "z", "z", "1"};  // no such element "z"
    CHECK_THROWS_AS(bind_qset_file(f, dq), input_error);

    f.entries = {"0", "1", "1", "1"};  // alpha(x,y) above alpha(x,x): s1 fails
    CHECK_THROWS_AS(bind_qset_file(f, dq), input_error);
}

TEST_CASE("file kind sniffing distinguishes the two formats") {
    CHECK(sniff_kind("quantale q\n") == FileKind::quantale);
    CHECK(sniff_kind("# comment\nqset x over q\n") == FileKind::qset);
    CHECK_THROWS_AS(sniff_kind("frame q\n"), parse_error);
    CHECK_THROWS_AS(sniff_kind("   \n  \n"), parse_error);
}
