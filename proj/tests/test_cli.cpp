#include <random>

#include "doctest.h"
#include "fuzz.hpp"
#include "json.hpp"
#include "normalcone/runner.hpp"
#include "normalcone/script.hpp"

using namespace normalcone;
using namespace normalcone::testing;
using nlohmann::json;

namespace {

const std::string kXyRing = R"(ring R = Q[x, y] / (x*y, y^4);
ideal J = m;
seq f = (x);
cmd artin_rees f J expect=1;
)";

script::Diagnostic diagnose(const std::string& text) {
  try {
    script::parse(text);
  } catch (const script::ScriptError& e) {
    return e.diagnostic();
  }
  FAIL("expected a diagnostic");
  return {};
}

json run_json(const std::string& text, RunOptions opt = {}) {
  opt.format = ReportFormat::Json;
  return json::parse(run_script(text, opt).report);
}

}  // namespace

TEST_SUITE("cli-frontend") {
  TEST_CASE("parse a ring with relations") {
    auto s = script::parse(kXyRing);
    REQUIRE(s.statements.size() == 4);
    const auto& r = std::get<script::RingDecl>(s.statements[0]);
    CHECK(r.vars == std::vector<std::string>{"x", "y"});
    REQUIRE(r.relations.size() == 2);
    CHECK(script::pretty_print(r.relations[0]) == "x*y");
    CHECK(script::pretty_print(r.relations[1]) == "y^4");
  }

  TEST_CASE("diagnostics carry positions") {
    auto d = diagnose("ring R = Q[x,y];\nideal J = (x,, y);\n");
    CHECK(d.kind == script::DiagnosticKind::Parse);
    CHECK(d.pos.line == 2);
    CHECK(d.pos.column == 14);
    CHECK_FALSE(d.expected.empty());
    CHECK(std::is_sorted(d.expected.begin(), d.expected.end()));
    CHECK(diagnose("ring R = Q[x];\nseq f = (x $ 1);").kind == script::DiagnosticKind::Lex);
  }

  TEST_CASE("semantic errors and exit codes") {
    auto empty = run_json("");
    CHECK(empty["summary"]["exit_code"] == 2);
    CHECK(empty["diagnostic"]["message"] == "no ring declared");
    const std::vector<std::pair<std::string, std::string>> bad = {
        {"ring R = Q[x]; ring S = Q[y];", "exactly one ring"},
        {"ideal J = m;", "no ring declared"},
        {"ring R = Q[x]; seq f = (z);", "unknown variable"},
        {"ring R = Q[x]; cmd artin_rees f m;", "undeclared name"},
        {"ring R = Q[x]; ideal m = (x);", "reserved"},
        {"ring R = GF(4)[x];", "not a prime field"},
        {"ring R = GF(7)[x]; seq f = (x/7);", "division by zero"},
        {"ring R = Q[x]; seq f = (x); seq f = (x);", "already declared"},
        {"ring R = Q[x]; seq f = (x); cmd frobnicate f;", "unknown command"},
        {"ring R = Q[x]; seq f = (x); cmd artin_rees f;", "positional"},
        {"ring R = Q[x]; seq f = (x); cmd verify f m bogus=1;", "unknown argument"},
        {"ring R = Q[x]; order o = lex[y];", "unknown variable"},
    };
    for (const auto& [text, message] : bad) {
      auto j = run_json(text);
      CHECK_MESSAGE(j["summary"]["exit_code"] == 2, text);
      CHECK_MESSAGE(j["diagnostic"]["kind"] == "semantic", text);
      CHECK_MESSAGE(j["diagnostic"]["message"].get<std::string>().find(message) != std::string::npos, text);
    }
  }

  TEST_CASE("report structure and check failures") {
    auto ok = run_json(kXyRing);
    CHECK(ok["schema"] == kReportSchema);
    CHECK(ok["summary"]["exit_code"] == 0);
    const auto& c = ok["commands"][0];
    CHECK(c["operation"] == "artin_rees");
    CHECK(c["inputs"]["I"] == "(x)");
    CHECK(c["inputs"]["J"] == "m");
    CHECK(c["result"]["value"] == 1);
    CHECK(c["checks"][0]["pass"] == true);

    auto failing = run_json("ring R = Q[x, y]; seq f = (x^2 - y^3); cmd artin_rees f m expect=5;");
    CHECK(failing["summary"]["exit_code"] == 1);
    CHECK(failing["commands"][0]["status"] == "check-failed");

    auto capped = run_json("ring R = Q[x, y] trunc 3; seq f = (x^5 - y^7); cmd artin_rees f m;");
    CHECK(capped["summary"]["exit_code"] == 3);
    CHECK(capped["commands"][0]["error"]["kind"] == "truncation");
  }

  TEST_CASE("fail-fast and trunc override") {
    const std::string text =
        "ring R = Q[x, y]; seq f = (x^2 - y^3); cmd artin_rees f m expect=5; cmd artin_rees f m expect=2;";
    RunOptions opt;
    opt.fail_fast = true;
    CHECK(run_json(text, opt)["commands"].size() == 1);
    CHECK(run_json(text)["commands"].size() == 2);
    RunOptions tight;
    tight.trunc_override = 2;
    CHECK(run_json("ring R = Q[x, y]; seq f = (x^2 - y^3); cmd artin_rees f m;", tight)["summary"]["exit_code"] == 3);
  }

  TEST_CASE("numbers are exact") {
    auto j = run_json("ring R = Q[x, y]; ideal I = (x^2 - y^3); cmd am I m r=3 s=3;");
    for (const auto& c : j["commands"][0]["result"]["multiplicity_sequence"]) CHECK(c.is_string());
    std::function<void(const json&)> no_floats = [&](const json& v) {
      CHECK_FALSE(v.is_number_float());
      if (v.is_structured())
        for (const auto& x : v) no_floats(x);
    };
    no_floats(j);
  }

  TEST_CASE("determinism") {
    const std::string text = "ring R = Q[x, y]; seq f = (x^2 - y^3); cmd verify f m N=auto trials=5 seed=3;";
    RunOptions opt;
    opt.seed = 7;
    opt.trials = 6;
    CHECK(run_script(text, opt).report == run_script(text, opt).report);
    auto j = run_json(text, opt);
    CHECK(j["commands"][0]["result"]["trials"] == 6);
    CHECK(j["commands"][0]["result"]["seed"] == 7);
    opt.format = ReportFormat::Text;
    CHECK(run_script(text, opt).report == run_script(text, opt).report);
  }

  TEST_CASE("round trip on the regression corpus") {
    for (const auto& text : corpus_scripts(NORMALCONE_SCRIPTS_DIR)) {
      script::SessionScript s;
      try {
        s = script::parse(text);
      } catch (const script::ScriptError&) {
        continue;
      }
      const auto printed = script::pretty_print(s);
      CHECK(script::parse(printed) == s);
      CHECK(script::pretty_print(script::parse(printed)) == printed);
    }
  }

  TEST_CASE("parser fuzz smoke (property)") {
    const auto corpus = corpus_scripts(NORMALCONE_SCRIPTS_DIR);
    REQUIRE_FALSE(corpus.empty());
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
      const auto input = fuzz_case(corpus, rng);
      try {
        auto s = script::parse(input);
        CHECK(script::parse(script::pretty_print(s)) == s);
      } catch (const script::ScriptError& e) {
        CHECK(e.diagnostic().pos.line >= 1);
        CHECK(e.diagnostic().pos.column >= 1);
      }
    }
  }

  TEST_CASE("polynomial parsing helper") {
    auto R = RingContext::make(Field::rationals(), {"x", "y"});
    auto ps = parse_polynomials(R, "x^2 - y^3, 2/3*x*y");
    REQUIRE(ps.size() == 2);
    CHECK(ps[1].to_string(R->names()) == "2/3*x*y");
    CHECK_THROWS_AS(parse_polynomials(R, "x +"), script::ScriptError);
  }
}
