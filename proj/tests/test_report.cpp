#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toda2/algebra.hpp"
#include "toda2/checks.hpp"
#include "toda2/errors.hpp"
#include "toda2/report.hpp"

#include <algorithm>
#include <cmath>

using namespace toda2;

namespace {

RunInfo run() { return {"sl(3)", "linear", 10, 42}; }

}  // namespace

TEST_CASE("verdicts follow the measurements") {
  CHECK(CheckReport::residual("a", "c", run(), 1e-12, 1e-10).pass);
  CHECK_FALSE(CheckReport::residual("a", "c", run(), 1e-10, 1e-10).pass);
  CHECK_FALSE(CheckReport::residual("a", "c", run(), std::nan(""), 1e-10).pass);
  CHECK_FALSE(CheckReport::residual("a", "c", run(), INFINITY, 1e-10).pass);
  CHECK(CheckReport::equality("r", "c", run(), 10, 10).pass);
  CHECK_FALSE(CheckReport::equality("r", "c", run(), 12, 10).pass);

  auto tampered = CheckReport::residual("a", "c", run(), 1.0, 1e-10);
  tampered.pass = true;
  CHECK_FALSE(tampered.consistent() == tampered.pass);
}

TEST_CASE("text output") {
  const std::vector<CheckReport> reps{CheckReport::residual("mcybe", "claim one", run(), 1e-13, 1e-11),
                                      CheckReport::equality("rank.linear", "claim two", run(), 12, 10, "note")};
  const std::string text = emit_report(reps, ReportFormat::Text);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.rfind("PASS mcybe [sl(3), linear]", 0) == 0);
  CHECK(text.find("FAIL rank.linear") != std::string::npos);
  CHECK(text.find("(note)") != std::string::npos);
  CHECK(emit_report({}, ReportFormat::Text).empty());
}

TEST_CASE("json round trip") {
  std::vector<CheckReport> reps{CheckReport::residual("mcybe", "claim", run(), 1.25e-13, 1e-11),
                                CheckReport::residual("flow", "claim", run(), std::nan(""), 1e-6),
                                CheckReport::equality("rank", "claim", run(), 10, 10, "n")};
  const std::string doc = emit_report(reps, ReportFormat::Json);
  const auto back = parse_reports(doc);
  REQUIRE(back.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(back[k].id == reps[k].id);
    CHECK(back[k].pass == reps[k].pass);
    CHECK(back[k].consistent() == back[k].pass);
    CHECK(back[k].run.seed == 42);
  }
  CHECK(back[0].measured == 1.25e-13);
  CHECK(std::isnan(back[1].measured));
  CHECK(emit_report(back, ReportFormat::Json) == doc);

  CHECK(emit_report({}, ReportFormat::Json).empty());
  CHECK(parse_reports("").empty());
  CHECK_THROWS_AS(parse_reports("{\"id\": 1}"), ParseError);
  CHECK_THROWS_AS(parse_reports("[{\"id\": \"x\"}]"), ParseError);
}

TEST_CASE("check runs are deterministic in the seed") {
  const auto sl2 = Algebra::build_sl(2);
  CheckOptions opts;
  opts.seed = 5;
  opts.samples = 5;
  const auto a = emit_report(run_check("all", sl2, opts), ReportFormat::Json);
  const auto b = emit_report(run_check("all", sl2, opts), ReportFormat::Json);
  CHECK(a == b);
  CHECK(all_pass(parse_reports(a)));
  for (const auto& r : parse_reports(a)) CHECK(r.consistent() == r.pass);
}

TEST_CASE("check names and options") {
  const auto sl3 = Algebra::build_sl(3);
  CHECK_THROWS_AS(run_check("bogus", sl3), PreconditionError);
  CHECK(std::find(check_names().begin(), check_names().end(), "mcybe") != check_names().end());
  CHECK_THROWS_AS(run_check("quadratic-relations", sl3), CapabilityError);

  CheckOptions strict;
  strict.samples = 5;
  strict.tol = 0.0;
  for (const auto& r : run_check("mcybe", sl3, strict)) {
    CHECK(r.tolerance == 0.0);
    CHECK_FALSE(r.pass);
  }

  CheckOptions opts;
  opts.samples = 5;
  const auto ranks = run_check("rank", sl3, opts);
  const auto it = std::find_if(ranks.begin(), ranks.end(), [](const CheckReport& r) { return r.id == "rank.linear"; });
  REQUIRE(it != ranks.end());
  CHECK(it->expected == 10);
  CHECK(it->measured == 10);
}
