#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gsx/gsb.hpp"
#include "gsx/problem.hpp"

using namespace gsx;

namespace {

const char* kXxyFile = R"({
  "field": "Q",
  "mode": "presentation",
  "alphabet": ["x", "y"],
  "relations": [
    {"name": "u1", "terms": [["1", ["x", "x"]], ["-1", ["y"]]]}
  ],
  "input": {"terms": [["1", ["x", "x", "x"]]]},
  "options": {"max_deg": 4, "max_iter": 20}
})";

const char* kGrassmann2File = R"({
  "field": "Q",
  "mode": "presentation",
  "alphabet": ["x2", "x1"],
  "relations": [
    {"name": "sx2", "terms": [["1", ["x2", "x2"]]]},
    {"name": "sx1", "terms": [["1", ["x1", "x1"]]]},
    {"name": "ux2x1", "terms": [["1", ["x2", "x1"]], ["1", ["x1", "x2"]]]}
  ]
})";

const char* kCommutative3File = R"({
  "field": "Q",
  "mode": "presentation",
  "alphabet": ["x3", "x2", "x1"],
  "relations": [
    {"name": "u32", "terms": [["1", ["x3", "x2"]], ["-1", ["x2", "x3"]]]},
    {"name": "u31", "terms": [["1", ["x3", "x1"]], ["-1", ["x1", "x3"]]]},
    {"name": "u21", "terms": [["1", ["x2", "x1"]], ["-1", ["x1", "x2"]]]}
  ],
  "factor": {"symbolic": true}
})";

// Cyclic n=2, f=0 with a valid bimodule whose left and right actions differ
// (x.m = 0 but m2.x = m1) and a factor value outside the condition kernel.
const char* kCyclicBadFile = R"({
  "field": "Q",
  "mode": "presentation",
  "alphabet": ["x"],
  "relations": [{"name": "u", "terms": [["1", ["x", "x"]]]}],
  "module": {
    "basis": ["m1", "m2"],
    "left":  {"x": [["0", "0"], ["0", "0"]]},
    "right": {"x": [["0", "1"], ["0", "0"]]}
  },
  "factor": {"assign": {"u": ["0", "1"]}}
})";

const char* kCyclicGoodFile = R"({
  "field": "Q",
  "mode": "presentation",
  "alphabet": ["x"],
  "relations": [{"name": "u", "terms": [["1", ["x", "x"]]]}],
  "module": {
    "basis": ["m"],
    "left":  {"x": [["0"]]},
    "right": {"x": [["0"]]}
  },
  "factor": {"assign": {"u": ["1"]}}
})";

const char* kIdempotentFile = R"({
  "field": {"gf": 3},
  "mode": "finite",
  "basis": ["e"],
  "products": [[["1"]]],
  "module": {"basis": ["m"], "left": {"e": [["0"]]}, "right": {"e": [["1"]]}},
  "factor": {"assign_pairs": [[["2"]]]}
})";

} // namespace

TEST_CASE("parse: minimal cyclic file") {
    ProblemFile pf = parse_problem(kCyclicGoodFile);
    CHECK(pf.mode == ProblemFile::Mode::Presentation);
    CHECK(pf.field.is_rational());
    REQUIRE(pf.presentation.has_value());
    CHECK(pf.presentation->size() == 1);
    REQUIRE(pf.module.has_value());
    CHECK(pf.module->dim() == 1);
    CHECK(pf.factor.mode == FactorBlock::Mode::Assign);
}

TEST_CASE("parse: zero denominator is rejected") {
    std::string text = R"({"field":"Q","mode":"presentation","alphabet":["x"],
        "relations":[{"name":"u","terms":[["1/0",["x"]]]}]})";
    CHECK_THROWS_WITH_AS(parse_problem(text), doctest::Contains("denominator zero"),
                         input_error);
}

TEST_CASE("parse: unknown keys are rejected with their path") {
    std::string text = R"({"field":"Q","mode":"presentation","alphabet":["x"],
        "relations":[],"surprise":1})";
    CHECK_THROWS_WITH_AS(parse_problem(text), doctest::Contains("surprise"), input_error);
    std::string text2 = R"({"field":"Q","mode":"presentation","alphabet":["x"],
        "relations":[{"name":"u","terms":[],"extra":2}]})";
    CHECK_THROWS_WITH_AS(parse_problem(text2), doctest::Contains("relations[0].extra"),
                         input_error);
}

TEST_CASE("parse: non-associative structure constants name the failing triple") {
    std::string text = R"({
      "field": "Q",
      "mode": "finite",
      "basis": ["a", "b"],
      "products": [[["0","1"], ["1","0"]], [["0","0"], ["0","0"]]],
      "module": {"basis": ["m"],
                 "left": {"a": [["0"]], "b": [["0"]]},
                 "right": {"a": [["0"]], "b": [["0"]]}}
    })";
    CHECK_THROWS_WITH_AS(parse_problem(text), doctest::Contains("(a,a,a)"), input_error);
}

TEST_CASE("parse: syntax errors carry line and column") {
    std::string text = "{\n  \"field\": \"Q\",\n  oops\n}";
    CHECK_THROWS_WITH_AS(parse_problem(text), doctest::Contains("line 3"), input_error);
}

TEST_CASE("parse: floating point literals are rejected") {
    std::string text = R"({"field":"Q","mode":"presentation","alphabet":["x"],
        "relations":[{"name":"u","terms":[[1.5,["x"]]]}]})";
    CHECK_THROWS_AS(parse_problem(text), input_error);
}

TEST_CASE("parse: empty word is rejected in non-unital mode, allowed in unital") {
    std::string text = R"({"field":"Q","mode":"presentation","alphabet":["x"],
        "relations":[{"name":"u","terms":[["1",["x"]],["-1",[]]]}]})";
    CHECK_THROWS_WITH_AS(parse_problem(text), doctest::Contains("empty word"), input_error);
    std::string unital = R"({"field":"Q","mode":"presentation","alphabet":["x"],"unital":true,
        "relations":[{"name":"u","terms":[["1",["x"]],["-1",[]]]}]})";
    CHECK_NOTHROW(parse_problem(unital));
}

TEST_CASE("render/parse round-trip is stable") {
    for (const char* file : {kXxyFile, kGrassmann2File, kCommutative3File, kCyclicGoodFile,
                             kIdempotentFile}) {
        ProblemFile pf = parse_problem(file);
        std::string once = render_problem(pf);
        std::string twice = render_problem(parse_problem(once));
        CHECK(once == twice);
    }
}

TEST_CASE("gsb-check: Grassmann two-generator basis") {
    ProblemFile pf = parse_problem(kGrassmann2File);
    RunResult r = run_command("gsb-check", pf);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "GS basis: yes, compositions checked: 4\n");
}

TEST_CASE("gsb-check: failing set reports the remainder") {
    ProblemFile pf = parse_problem(kXxyFile);
    RunResult r = run_command("gsb-check", pf);
    CHECK(r.exit_code == 1);
    CHECK(r.output ==
          "GS basis: no, compositions checked: 1, failures: 1\n"
          "  (u1,u1) intersection at w=x*x*x: remainder x*y - y*x\n");
}

TEST_CASE("complete: fixture output and exit codes") {
    ProblemFile pf = parse_problem(kXxyFile);
    RunResult r = run_command("complete", pf);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "status: complete\n"
          "relations: 2\n"
          "u1: x*x - y\n"
          "c1: x*y - y*x\n");
    // Degree cap below the ambiguity: truncated, exit 3.
    pf.options.max_deg = 2;
    RunResult t = run_command("complete", pf);
    CHECK(t.exit_code == 3);
    CHECK(t.output.rfind("status: degree-truncated\n", 0) == 0);
}

TEST_CASE("nf: golden reduction") {
    ProblemFile pf = parse_problem(kXxyFile);
    RunResult r = run_command("nf", pf);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "remainder: y*x\nsteps: 1\n");
}

TEST_CASE("nf requires an input block") {
    ProblemFile pf = parse_problem(kGrassmann2File);
    RunResult r = run_command("nf", pf);
    CHECK(r.exit_code == 2);
}

TEST_CASE("irr: completed fixture lists four words") {
    ProblemFile pf = parse_problem(kXxyFile);
    // Not a basis yet: irr fails with exit 1.
    CHECK(run_command("irr", pf).exit_code == 1);
    // Complete it and re-ask at degree 2.
    pf.presentation = complete(*pf.presentation, 4, 20).presentation;
    pf.options.max_deg = 2;
    RunResult r = run_command("irr", pf);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "irreducible words (deg <= 2): 4\n"
          "y\nx\ny*y\ny*x\n");
}

TEST_CASE("ext-conditions: commutative three-generator file") {
    ProblemFile pf = parse_problem(kCommutative3File);
    RunResult r = run_command("ext-conditions", pf);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "conditions: 1 (trivial: 0)\n"
          "(u32,u21) at w=x3*x2*x1: "
          "(u21)*x3 - x3*(u21) - (u31)*x2 + x2*(u31) + (u32)*x1 - x1*(u32) = 0\n");
}

TEST_CASE("ext-conditions: cyclic file shows the self-overlap marker") {
    ProblemFile pf = parse_problem(kCyclicGoodFile);
    RunResult r = run_command("ext-conditions", pf);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "conditions: 1 (trivial: 0)\n"
          "(u,u) at w=x*x*x [self-overlap]: (u)*x - x*(u) = 0\n");
}

TEST_CASE("ext-conditions machine format is valid JSON with exact strings") {
    ProblemFile pf = parse_problem(kCommutative3File);
    RunResult r = run_command("ext-conditions", pf, OutputFormat::Machine);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["command"] == "ext-conditions");
    REQUIRE(j["conditions"].size() == 1);
    const auto& terms = j["conditions"][0]["terms"];
    CHECK(terms.size() == 6);
    CHECK(terms[0]["coeff"].is_string());
}

TEST_CASE("ext-cocycle: violation and pass") {
    ProblemFile bad = parse_problem(kIdempotentFile); // lambda=0, mu=1, gamma=2
    RunResult r = run_command("ext-cocycle", bad);
    CHECK(r.exit_code == 1);
    CHECK(r.output ==
          "cocycle: violated (1 of 1 triples)\n"
          "  (e,e,e): value [1]\n"); // -gamma = -2 = 1 mod 3
    // gamma = 0 passes.
    ProblemFile good = bad;
    good.finite->factor[0][0] = {Scalar(Field::prime(3), 0)};
    RunResult ok = run_command("ext-cocycle", good);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "cocycle: ok (triples checked: 1)\n");
}

TEST_CASE("ext-verify: names the failing composition") {
    ProblemFile pf = parse_problem(kCyclicBadFile);
    RunResult r = run_command("ext-verify", pf);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("condition violated at composition (u,u) at w=x*x*x") !=
          std::string::npos);
}

TEST_CASE("ext-verify: valid extension passes end to end") {
    ProblemFile pf = parse_problem(kCyclicGoodFile);
    RunResult r = run_command("ext-verify", pf);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "bimodule: ok\n"
          "conditions: 1 checked, all vanish\n"
          "S1: GS basis verified\n"
          "extension: valid (verified to degree 5)\n");
}

TEST_CASE("ext-verify finite mode cross-checks the oracle") {
    ProblemFile pf = parse_problem(kIdempotentFile);
    pf.finite->factor[0][0] = {Scalar(Field::prime(3), 0)};
    RunResult r = run_command("ext-verify", pf);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("associativity oracle: agrees") != std::string::npos);
    CHECK(r.output.find("extension: valid") != std::string::npos);
}

TEST_CASE("ext-build emits a reloadable presentation") {
    ProblemFile pf = parse_problem(kCyclicGoodFile);
    RunResult r = run_command("ext-build", pf);
    REQUIRE(r.exit_code == 0);
    ProblemFile rebuilt = parse_problem(r.output);
    CHECK(rebuilt.mode == ProblemFile::Mode::Presentation);
    REQUIRE(rebuilt.presentation.has_value());
    CHECK(rebuilt.presentation->alphabet().names() == std::vector<std::string>{"x", "m"});
    CHECK(rebuilt.presentation->size() == 4); // u, xm, mx, mm
    // Re-verify from disk: the serialized S1 is a GS basis, bit-exactly.
    RunResult check = run_command("gsb-check", rebuilt);
    CHECK(check.exit_code == 0);
    CHECK(render_problem(rebuilt) == r.output);
}

TEST_CASE("ext-build refuses the inadmissible factor set with exit 1") {
    ProblemFile pf = parse_problem(kCyclicBadFile);
    RunResult r = run_command("ext-build", pf);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("x*x*x") != std::string::npos);
}

TEST_CASE("unknown command is an input error") {
    ProblemFile pf = parse_problem(kGrassmann2File);
    CHECK(run_command("frobnicate", pf).exit_code == 2);
}

TEST_CASE("outputs end with exactly one newline") {
    ProblemFile pf = parse_problem(kGrassmann2File);
    for (const char* cmd : {"gsb-check", "complete", "irr", "ext-conditions"}) {
        RunResult r = run_command(cmd, pf);
        REQUIRE_FALSE(r.output.empty());
        CHECK(r.output.back() == '\n');
        CHECK(r.output[r.output.size() - 2] != '\n');
    }
}

TEST_CASE("version constant") { CHECK(std::string(kVersion) == "0.1.0"); }

TEST_CASE("finite mode drives the rewriting commands through the table presentation") {
    std::string text = R"({
      "field": {"gf": 3},
      "mode": "finite",
      "basis": ["e"],
      "products": [[["1"]]],
      "module": {"basis": ["m"], "left": {"e": [["1"]]}, "right": {"e": [["1"]]}},
      "input": {"terms": [["1", ["e", "e", "e"]]]}
    })";
    ProblemFile pf = parse_problem(text);
    RunResult g = run_command("gsb-check", pf);
    CHECK(g.exit_code == 0);
    CHECK(g.output == "GS basis: yes, compositions checked: 1\n");
    RunResult n = run_command("nf", pf);
    CHECK(n.exit_code == 0);
    CHECK(n.output == "remainder: e\nsteps: 2\n");
    RunResult c = run_command("ext-conditions", pf);
    CHECK(c.exit_code == 0);
    CHECK(c.output ==
          "conditions: 1 (trivial: 0)\n"
          "(t.e.e,t.e.e) at w=e*e*e [self-overlap]: (t.e.e)*e + 2*e*(t.e.e) = 0\n");
}
