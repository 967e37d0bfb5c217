#include "toda2/report.hpp"

#include "toda2/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace toda2 {

namespace {

using nlohmann::ordered_json;

const char* comparison_symbol(CheckReport::Comparison c) { return c == CheckReport::Comparison::Less ? "<" : "=="; }

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

}  // namespace

CheckReport CheckReport::residual(std::string id, std::string claim, RunInfo run, double measured, double tolerance,
                                  std::string note) {
  CheckReport r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  r.run = std::move(run);
  r.tolerance = tolerance;
  r.measured = measured;
  r.expected = tolerance;
  r.comparison = Comparison::Less;
  r.note = std::move(note);
  r.pass = r.consistent();
  return r;
}

CheckReport CheckReport::equality(std::string id, std::string claim, RunInfo run, double measured, double expected,
                                  std::string note) {
  CheckReport r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  r.run = std::move(run);
  r.tolerance = 0.0;
  r.measured = measured;
  r.expected = expected;
  r.comparison = Comparison::Equal;
  r.note = std::move(note);
  r.pass = r.consistent();
  return r;
}

bool CheckReport::consistent() const {
  if (!std::isfinite(measured)) return false;
  return comparison == Comparison::Less ? measured < expected : measured == expected;
}

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format) {
  if (format == ReportFormat::Text) {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.run.algebra;
      if (r.run.bracket != "-") os << ", " << r.run.bracket;
      os << "] measured " << format_number(r.measured)
         << (r.comparison == CheckReport::Comparison::Less ? " < tol " : ", expected ") << format_number(r.expected)
         << " :: " << r.claim;
      if (!r.note.empty()) os << " (" << r.note << ")";
      os << "\n";
    }
    return os.str();
  }
  if (reports.empty()) return {};
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["id"] = r.id;
    j["claim"] = r.claim;
    j["algebra"] = r.run.algebra;
    j["bracket"] = r.run.bracket;
    j["samples"] = r.run.samples;
    j["seed"] = r.run.seed;
    j["tolerance"] = r.tolerance;
    j["measured"] = std::isfinite(r.measured) ? ordered_json(r.measured) : ordered_json(nullptr);
    j["expected"] = r.expected;
    j["comparison"] = comparison_symbol(r.comparison);
    j["verdict"] = r.pass ? "pass" : "fail";
    j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<CheckReport> parse_reports(const std::string& json_document) {
  std::vector<CheckReport> out;
  if (json_document.find_first_not_of(" \t\r\n") == std::string::npos) return out;
  try {
    const auto arr = ordered_json::parse(json_document);
    if (!arr.is_array()) throw ParseError("report document must be an array");
    for (const auto& j : arr) {
      CheckReport r;
      r.id = j.at("id").get<std::string>();
      r.claim = j.at("claim").get<std::string>();
      r.run.algebra = j.at("algebra").get<std::string>();
      r.run.bracket = j.at("bracket").get<std::string>();
      r.run.samples = j.at("samples").get<int>();
      r.run.seed = j.at("seed").get<std::uint64_t>();
      r.tolerance = j.at("tolerance").get<double>();
      r.measured = j.at("measured").is_null() ? std::nan("") : j.at("measured").get<double>();
      r.expected = j.at("expected").get<double>();
      r.comparison = j.at("comparison").get<std::string>() == "<" ? CheckReport::Comparison::Less
                                                                   : CheckReport::Comparison::Equal;
      r.pass = j.at("verdict").get<std::string>() == "pass";
      r.note = j.at("note").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const ordered_json::exception& ex) {
    throw ParseError(std::string("report document: ") + ex.what());
  }
  return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace toda2
