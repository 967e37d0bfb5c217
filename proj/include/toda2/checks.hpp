#pragma once

#include "toda2/algebra.hpp"
#include "toda2/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toda2 {

struct CheckOptions {
  std::uint64_t seed = 42;
  int samples = 20;
  /// Replaces the tolerance of every residual report when set.
  std::optional<double> tol;
};

/// Names accepted by run_check, in the order `all` runs them.
const std::vector<std::string>& check_names();

/// Runs one named check family (or "all") and returns its reports. Checks
/// that need an associative algebra are skipped on other algebras. Throws
/// PreconditionError for an unknown name.
std::vector<CheckReport> run_check(const std::string& name, const Algebra& alg, const CheckOptions& opts = {});

/// Individual families, also used by the acceptance driver.
std::vector<CheckReport> check_mcybe_family(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_jacobi(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_involutivity(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_casimir(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_morphism(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_independence(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_rank(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_rais(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_fields(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_quadratic_relations(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_toda(const Algebra& alg, const CheckOptions& opts);
std::vector<CheckReport> check_flows(const Algebra& alg, const CheckOptions& opts);

/// Expected rank of the restricted linear bracket on the pair phase space:
/// dim + rank for a centerless algebra, 2 (dim T_P - card) otherwise.
int expected_pair_rank(const Algebra& alg);

}  // namespace toda2
