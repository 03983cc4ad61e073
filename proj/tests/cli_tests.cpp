// End-to-end checks of the qlab command line.  argv[1] is the path to the
// qlab binary; everything runs through popen and asserts on exit codes and
// output text.  Plain asserts, one scenario per block, loud on failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "util.hpp"

namespace {

int failures = 0;
std::string qlab_bin;

void expect(bool ok, const std::string& what, const std::string& detail = {}) {
    if (ok) {
        std::cout << "[ok] " << what << "\n";
    } else {
        ++failures;
        std::cout << "[FAILED] " << what << "\n";
        if (!detail.empty()) std::cout << detail << "\n";
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string sh_quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-qlab>\n";
        return 2;
    }
    qlab_bin = argv[1];
    int rc = 0;

    const std::string dir = "/tmp/qlab_cli_tests";
    std::system(("mkdir -p " + dir).c_str());
    const std::string luk3_file = dir + "/luk3.q";
    testutil::write_file(luk3_file,
                         "quantale luk3file\n"
                         "elements: 0 h 1\n"
                         "order: 0 <= h\n"
                         "       h <= 1\n"
                         "unit: 1\n"
                         "tensor:\n"
                         "  0 0 0\n"
                         "  0 0 h\n"
                         "  0 h 1\n");
    const std::string drastic_file = dir + "/drastic4.q";
    testutil::write_file(drastic_file,
                         "quantale drastic4\n"
                         "elements: 0 a b 1\n"
                         "order: 0 <= a\n"
                         "       a <= b\n"
                         "       b <= 1\n"
                         "unit: 1\n"
                         "tensor:\n"
                         "  0 0 0 0\n"
                         "  0 0 0 a\n"
                         "  0 0 0 b\n"
                         "  0 a b 1\n");
    const std::string broken_file = dir + "/broken.q";
    testutil::write_file(broken_file,
                         "quantale broken\n"
                         "elements: 0 1\n"
                         "order: 0 <= 1\n"
                         "unit: 1\n"
                         "tensor:\n"
                         "  0 1\n"
                         "  0 1\n");
    const std::string garbled_file = dir + "/garbled.q";
    testutil::write_file(garbled_file, "quantale g\nwhatever\n");
    const std::string span_file = dir + "/span.qs";
    testutil::write_file(span_file,
                         "qset span over lukasiewicz(3)\n"
                         "elements: zp zq\n"
                         "hom:\n"
                         "  h 0\n"
                         "  0 1\n");
    const std::string orphan_file = dir + "/orphan.qs";
    testutil::write_file(orphan_file,
                         "qset orphan over mystery\n"
                         "elements: x\n"
                         "hom:\n"
                         "  x\n");

    // ---- exit codes -----------------------------------------------------------

    std::string out = testutil::run_cmd(qlab_bin + " validate " + sh_quote(luk3_file), rc);
    expect(rc == 0 && contains(out, "luk3file"), "validate accepts a good file", out);

    const std::string bound_file = dir + "/bound.qs";
    testutil::write_file(bound_file,
                         "qset bound over luk3file\n"
                         "elements: zp zq\n"
                         "hom:\n"
                         "  h 0\n"
                         "  0 1\n");
    out = testutil::run_cmd(qlab_bin + " validate " + sh_quote(luk3_file) + " " + sh_quote(bound_file), rc);
    expect(rc == 0 && contains(out, "qset bound over luk3file") && contains(out, "qset.s3"),
           "validate binds a Q-set to a quantale file named earlier on the command line", out);

    out = testutil::run_cmd(qlab_bin + " validate " + dir + "/no_such.q", rc);
    expect(rc == 1, "validate exits 1 on a missing file", out);

    out = testutil::run_cmd(qlab_bin + " validate " + sh_quote(garbled_file), rc);
    expect(rc == 1, "validate exits 1 on unparseable text", out);

    out = testutil::run_cmd(qlab_bin + " validate " + sh_quote(broken_file), rc);
    expect(rc == 2 && contains(out, "quantale.comm"),
           "validate exits 2 on a non-commutative table and names the law", out);

    out = testutil::run_cmd(qlab_bin + " frobnicate x", rc);
    expect(rc == 1, "an unknown subcommand exits 1", out);

    out = testutil::run_cmd(qlab_bin, rc);
    expect(rc == 1, "no subcommand exits 1", out);

    out = testutil::run_cmd(qlab_bin + " --help", rc);
    expect(rc == 0 && contains(out, "verify"), "--help exits 0 and lists subcommands", out);

    out = testutil::run_cmd(qlab_bin + " analyze --format yaml 'lukasiewicz(3)'", rc);
    expect(rc == 1, "an unsupported format exits 1", out);

    // ---- analyze --------------------------------------------------------------

    out = testutil::run_cmd(qlab_bin + " analyze 'lukasiewicz(3)'", rc);
    expect(rc == 0 && contains(out, "divisible: yes") && contains(out, "frame: no"),
           "analyze classifies lukasiewicz(3)", out);
    expect(contains(out, "C_h") && contains(out, "C_1"), "analyze prints the C_q table", out);

    out = testutil::run_cmd(qlab_bin + " analyze 'boolean(2)'", rc);
    expect(rc == 0 && contains(out, "frame: yes"), "analyze classifies boolean(2)", out);

    out = testutil::run_cmd(qlab_bin + " analyze " + sh_quote(drastic_file), rc);
    expect(rc == 0 && contains(out, "divisible: no"),
           "analyze reports a non-divisible tensor without failing", out);

    out = testutil::run_cmd(qlab_bin + " analyze " + sh_quote(span_file), rc);
    expect(rc == 2, "analyze rejects a q-set file", out);

    // ---- singletons and complete ------------------------------------------------

    out = testutil::run_cmd(qlab_bin + " singletons " + sh_quote(span_file), rc);
    expect(rc == 0 && contains(out, "3 singletons") && contains(out, "(h,0)") &&
               contains(out, "not Cauchy complete"),
           "singletons enumerates the span", out);

    out = testutil::run_cmd(qlab_bin + " complete " + sh_quote(span_file), rc);
    expect(rc == 0 && contains(out, "3 elements") && contains(out, "zp -> (h,0)"),
           "complete prints the completed span and the embedding", out);

    out = testutil::run_cmd(qlab_bin + " singletons " + sh_quote(luk3_file), rc);
    expect(rc == 1, "singletons without any q-set file exits 1", out);

    out = testutil::run_cmd(qlab_bin + " singletons " + sh_quote(orphan_file), rc);
    expect(rc == 2, "a q-set over an unknown quantale exits 2", out);

    // ---- verify -----------------------------------------------------------------

    out = testutil::run_cmd(qlab_bin + " verify 'lukasiewicz(3)'", rc);
    expect(rc == 0 && contains(out, "0 fail"), "verify passes on lukasiewicz(3)", out);

    out = testutil::run_cmd(qlab_bin + " verify " + sh_quote(drastic_file), rc);
    expect(rc == 0 && contains(out, "suite.scope"),
           "verify warns and stops early on a non-divisible input", out);

    out = testutil::run_cmd(qlab_bin + " verify --corpus 'chain(2)' --corpus 'boolean(2)'", rc);
    expect(rc == 0 && contains(out, "2 quantales"), "verify honors --corpus", out);

    // ---- witness ----------------------------------------------------------------

    out = testutil::run_cmd(qlab_bin + " witness 'lukasiewicz(3)'", rc);
    expect(rc == 0 && contains(out, "q=h") && contains(out, "fully-faithful=no"),
           "witness prints the obstruction certificate", out);

    out = testutil::run_cmd(qlab_bin + " witness 'boolean(2)'", rc);
    expect(rc == 0 && contains(out, "no obstruction"), "witness on a frame", out);

    out = testutil::run_cmd(qlab_bin + " witness " + sh_quote(drastic_file), rc);
    expect(rc == 2 && contains(out, "divisible=no"),
           "witness exits 2 on a non-divisible tensor and shows why", out);

    // ---- json -------------------------------------------------------------------

    out = testutil::run_cmd(qlab_bin + " verify --format json 'lukasiewicz(3)'", rc);
    expect(rc == 0 && out.rfind("{", 0) == 0 && contains(out, "\"verdict\"") &&
               contains(out, "\"runs\""),
           "verify --format json emits one document", out.substr(0, 200));

    out = testutil::run_cmd(qlab_bin + " witness --format json " + sh_quote(drastic_file), rc);
    expect(rc == 2 && contains(out, "\"divisible\": false"),
           "witness --format json carries the classification", out.substr(0, 200));

    out = testutil::run_cmd(qlab_bin + " analyze --format json 'lukasiewicz(4)'", rc);
    expect(rc == 0 && contains(out, "\"refinement\""), "analyze --format json", out.substr(0, 200));

    // ---- determinism --------------------------------------------------------------

    int rc2 = 0;
    std::string a = testutil::run_cmd(qlab_bin + " verify --jobs 1 'lukasiewicz(3)' 'boolean(2)'", rc);
    std::string b = testutil::run_cmd(qlab_bin + " verify --jobs 8 'lukasiewicz(3)' 'boolean(2)'", rc2);
    expect(rc == 0 && rc2 == 0 && a == b, "verify output is byte-identical across --jobs");

    std::cout << (failures == 0 ? "all cli checks passed\n"
                                : std::to_string(failures) + " cli checks FAILED\n");
    return failures == 0 ? 0 : 1;
}
