#include "doctest.h"
#include "trilie/expr.hpp"
#include "trilie/problem.hpp"
#include "trilie/runner.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

using namespace trilie;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

Scalar ev(const std::string& s, const std::map<std::string, Scalar>& env = {}) {
    return eval_expr(*parse_expr(s), env);
}

const char* kFamily9 =
    "tlx 1\n"
    "param r1 r2 r3\n"
    "space g dim 3 basis x1 x2 x3\n"
    "bracket g [x1,x2,x3] = x1\n"
    "space h dim 3 basis v1 v2 v3\n"
    "bracket h [v1,v2,v3] = v1\n"
    "extension E base g fiber h\n"
    "nu E x1 (v2,v3) = r1 * v1\n"
    "nu E x2 (v2,v3) = r2 * v1\n"
    "nu E x3 (v2,v3) = r3 * v1\n"
    "omega E [x1,x2,x3] = -r1 * v1\n"
    "task check-3lie check-extension check-mc check-gauge roundtrip-mc-extension\n";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("expression parsing, precedence and rationals") {
    CHECK(ev("1+2*3") == 7);
    CHECK(ev("(1+2)*3") == 9);
    CHECK(ev("2/3") == Scalar(2, 3));
    CHECK(ev("-2/4") == Scalar(-1, 2));
    CHECK(ev("10/2/5") == 1);
    CHECK(ev("--2") == 2);
    CHECK(ev("r1*r2 - 3", {{"r1", 2}, {"r2", -1}}) == -5);
    CHECK(ev("1/(r1+1)", {{"r1", 3}}) == Scalar(1, 4));
}

TEST_CASE("expression errors carry positions and names") {
    CHECK_THROWS_AS((void)parse_expr(""), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_expr("1+"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_expr("2/0"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)ev("q"), "unknown parameter 'q'", std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)ev("1/(r1-r1)", {{"r1", 1}}),
                         "division by zero in parameter expression", std::invalid_argument);
}

TEST_CASE("printing and reparsing an expression preserves its value") {
    const std::map<std::string, Scalar> env{{"r1", 5}, {"r2", 7}, {"r3", -2}};
    for (const char* s : {"(r1+r2)*r3", "-r1/(r2-3)", "1/2*r1", "r1-r2-r3", "r1*(r2+r3)/r2"}) {
        const auto printed = expr_to_string(*parse_expr(s));
        CHECK(ev(printed, env) == ev(s, env));
        // printing is a fixed point
        CHECK(expr_to_string(*parse_expr(printed)) == printed);
    }
}

TEST_CASE("a well-formed problem file loads") {
    const auto path = write_temp("t_io_f9.tlx", kFamily9);
    const auto p = load_problem(path);
    CHECK(p.basename == "t_io_f9.tlx");
    CHECK(p.params == std::vector<std::string>{"r1", "r2", "r3"});
    REQUIRE(p.spaces.size() == 2);
    CHECK(p.spaces[0].name == "g");
    CHECK(p.spaces[0].arity == 3);
    REQUIRE(p.extensions.size() == 1);
    CHECK(p.extensions[0].name == "E");
    CHECK(p.tasks.size() == 5);
}

TEST_CASE("malformed problem files are rejected with file and line") {
    auto expect_error = [](const std::string& name, const std::string& content,
                           const std::string& needle) {
        const auto path = write_temp(name, content);
        try {
            (void)load_problem(path);
            FAIL("expected ProblemError for " << name);
        } catch (const ProblemError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("t_io_bad1.tlx", "space g dim 1 basis x1\n", "expected header");
    expect_error("t_io_bad2.tlx", "tlx 2\n", "unsupported format version");
    expect_error("t_io_bad3.tlx",
                 "tlx 1\nspace g dim 3 basis x1 x2 x3\nbracket g [x2,x1,x3] = x1\n",
                 "strictly increasing");
    expect_error("t_io_bad4.tlx", "tlx 1\ntask check-everything\n", "unknown task");
    expect_error("t_io_bad5.tlx", "tlx 1\nguard r9\n", "t_io_bad5.tlx:2");
    expect_error("t_io_bad6.tlx",
                 "tlx 1\nspace g dim 3 basis x1 x2 x3\nbracket g [x1,x2] = x1\n"
                 "bracket g [x1,x2,x3] = x1\n",
                 "mixed bracket arities");
    expect_error("t_io_bad7.tlx",
                 "tlx 1\nspace g dim 2 basis x1 x2\nbracket g [x1,x2] = x1\n"
                 "space h dim 2 basis v1 v2\nextension E base g fiber h\n",
                 "binary");
}

TEST_CASE("resolution builds the algebras and applies guards") {
    const auto path = write_temp("t_io_f9.tlx", kFamily9);
    const auto p = load_problem(path);
    const auto r = resolve_problem(p, {{"r1", 1}, {"r2", 2}, {"r3", 3}});
    REQUIRE(r.ternary.size() == 2);
    CHECK(r.ternary[0].space == "g");
    CHECK(r.binary.empty());
    REQUIRE(r.extensions.size() == 1);
    CHECK(extension_defects(r.extensions[0].datum).pass);
    // nu(x3)(v2,v3) = 3 v1 landed where it should
    CHECK(r.extensions[0].datum.nu[2][pair_rank(3, 1, 2)] == std::vector<Scalar>{3, 0, 0});

    CHECK_THROWS_AS((void)resolve_problem(p, {{"r1", 1}}), ProblemError);

    const auto guarded = write_temp("t_io_guard.tlx",
                                    "tlx 1\nparam r1\nguard r1\n"
                                    "space g dim 3 basis x1 x2 x3\nbracket g [x1,x2,x3] = r1 * x1\n"
                                    "task check-3lie\n");
    const auto gp = load_problem(guarded);
    try {
        (void)resolve_problem(gp, {{"r1", 0}});
        FAIL("expected GuardViolation");
    } catch (const GuardViolation& e) {
        CHECK(e.guard == "r1");
    }
}

TEST_CASE("entries must be vectors once parameters are substituted") {
    const auto path = write_temp("t_io_scalar.tlx",
                                 "tlx 1\nparam r1\nspace g dim 3 basis x1 x2 x3\n"
                                 "bracket g [x1,x2,x3] = r1\ntask check-3lie\n");
    const auto p = load_problem(path);
    CHECK_THROWS_AS((void)resolve_problem(p, {{"r1", 2}}), ProblemError);
    // a scalar zero is accepted as the zero vector
    (void)resolve_problem(p, {{"r1", 0}});
}

TEST_CASE("running a certified family reports ok on every task") {
    const auto path = write_temp("t_io_f9.tlx", kFamily9);
    RunOptions opt;
    opt.samples = 3;
    opt.machine = true;
    const auto res = run_file(path, opt);
    CHECK(res.exit_code == 0);
    CHECK(res.report.find("header\tinfo\tfile=t_io_f9.tlx") == 0);
    CHECK(res.report.find("sample\tinfo\t1: r1=") != std::string::npos);
    CHECK(res.report.find("check-extension\tok\tfamily-pass(3); verified at 3 rational points") !=
          std::string::npos);
    CHECK(res.report.find("check-gauge\tok\t") != std::string::npos);

    // byte-identical on a second run
    const auto again = run_file(path, opt);
    CHECK(again.report == res.report);
    CHECK(again.exit_code == 0);
}

TEST_CASE("pinning every parameter gives a single deterministic sample") {
    const auto path = write_temp("t_io_f9.tlx", kFamily9);
    RunOptions opt;
    opt.machine = true;
    opt.pinned = {{"r1", 1}, {"r2", 2}, {"r3", 3}};
    const auto res = run_file(path, opt);
    CHECK(res.exit_code == 0);
    CHECK(res.report.find("samples=1") != std::string::npos);
    CHECK(res.report.find("sample\tinfo\t1: r1=1 r2=2 r3=3") != std::string::npos);
    CHECK(res.report.find("verified at 1 rational point\n") != std::string::npos);
}

TEST_CASE("a datum failing both verification routes is a corpus discrepancy") {
    const auto path = write_temp(
        "t_io_f2.tlx",
        "tlx 1\n"
        "param r1 r2 r3 r4 r5\n"
        "guard r3\n"
        "guard r4\n"
        "space g dim 3 basis x1 x2 x3\n"
        "bracket g [x1,x2,x3] = x1\n"
        "space h dim 3 basis v1 v2 v3\n"
        "bracket h [v1,v2,v3] = v1\n"
        "extension E base g fiber h\n"
        "rho E [x2,x3] v1 = -(r3*r4) * v1\n"
        "rho E [x2,x3] v2 = r1 * v1\n"
        "rho E [x2,x3] v3 = r2 * v1\n"
        "nu E x2 (v1,v3) = r3 * v1\n"
        "nu E x2 (v2,v3) = (r1/r4) * v1\n"
        "nu E x3 (v1,v2) = r4 * v1\n"
        "nu E x3 (v1,v3) = r5 * v1\n"
        "nu E x3 (v2,v3) = ((r2*r4 - r1*r5)/(r3*r4)) * v1\n"
        "task check-extension check-mc check-gauge check-fundamental-ext\n");
    RunOptions opt;
    opt.samples = 2;
    opt.machine = true;
    const auto res = run_file(path, opt);
    CHECK(res.exit_code == 1);
    CHECK(res.report.find("check-extension\tcorpus-discrepancy\textension E: sector fi-") !=
          std::string::npos);
    CHECK(res.report.find("check-mc\tcorpus-discrepancy\t") != std::string::npos);
    CHECK(res.report.find("check-gauge\tskipped\tnot-mc: extension E") != std::string::npos);
    CHECK(res.report.find("check-fundamental-ext\tskipped\tnot-certified: extension E") !=
          std::string::npos);
}

TEST_CASE("run_file validates tasks, parameters and guards up front") {
    const auto path = write_temp("t_io_f9.tlx", kFamily9);
    RunOptions opt;
    opt.tasks = {"check-nonsense"};
    CHECK_THROWS_AS((void)run_file(path, opt), ProblemError);

    RunOptions opt2;
    opt2.pinned = {{"zz", 1}};
    CHECK_THROWS_AS((void)run_file(path, opt2), ProblemError);

    const auto guarded = write_temp("t_io_guard.tlx",
                                    "tlx 1\nparam r1\nguard r1\n"
                                    "space g dim 3 basis x1 x2 x3\nbracket g [x1,x2,x3] = r1 * x1\n"
                                    "task check-3lie\n");
    RunOptions opt3;
    opt3.pinned = {{"r1", 0}};
    CHECK_THROWS_AS((void)run_file(guarded, opt3), GuardViolation);

    CHECK_THROWS_AS((void)run_file("/nonexistent/file.tlx", RunOptions{}), ProblemError);
}

TEST_CASE("text reports carry the same verdicts in prose") {
    const auto path = write_temp("t_io_f9.tlx", kFamily9);
    RunOptions opt;
    opt.samples = 2;
    const auto res = run_file(path, opt);
    CHECK(res.exit_code == 0);
    CHECK(res.report.find("trilie report\n") == 0);
    CHECK(res.report.find("file: t_io_f9.tlx") != std::string::npos);
    CHECK(res.report.find("seed: 0x3117") != std::string::npos);
    CHECK(res.report.find("check-mc: ok (family-pass(2); verified at 2 rational points)") !=
          std::string::npos);
    CHECK(res.report.find("result: pass\n") != std::string::npos);
}

}  // TEST_SUITE
