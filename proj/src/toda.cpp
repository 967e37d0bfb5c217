#include "toda2/toda.hpp"

#include "toda2/errors.hpp"
#include "toda2/flows.hpp"
#include "toda2/invariants.hpp"
#include "toda2/poisson.hpp"

#include <algorithm>

namespace toda2 {

PairPoint embed_phi(const Algebra& alg, const Element& x) {
  alg.require_same(x);
  const double off = toda_space(alg).normal_residual(x);
  if (!(off < 1e-10)) throw PreconditionError("point is off the Toda space (residual " + std::to_string(off) + ")");
  return PairPoint::diagonal(x);
}

CheckReport check_poisson_iso(const Algebra& alg, int samples, std::uint64_t seed, double tolerance) {
  const PhaseSpace tt = toda_space(alg);
  const PhaseSpace diag = toda_diagonal_space(alg);
  const RMatrixConfig cfg = RMatrixConfig::splitting(alg);
  const PoissonBracket pair(alg, cfg, BracketKind::Linear);
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Vector z = uniform_vector(rng, tt.dim());
    const Element x = tt.point(z);
    const Matrix lhs = tt.coords() * r_poisson_tensor(alg, cfg, x) * tt.coords().transpose();
    const PairPoint m = embed_phi(alg, x);
    const Matrix rhs = poisson_matrix(pair, diag, m).matrix;
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return CheckReport::residual("toda.iso", "x -> (x, x) is a Poisson isomorphism of the Toda space onto the diagonal",
                               RunInfo{alg.name(), "linear", samples, seed}, worst, tolerance);
}

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int s = 1; s <= k; ++s) b = b * (n - k + s) / s;
  return b;
}

}  // namespace

CheckReport check_binomial_identity(const Algebra& alg, int samples, std::uint64_t seed, double tolerance) {
  const PhaseSpace tt = toda_space(alg);
  Rng rng(seed);
  std::vector<Element> points{alg.e()};
  for (int s = 0; s < samples; ++s) points.push_back(tt.random_point(rng));
  double worst = 0.0;
  for (const auto& x : points) {
    const PairPoint m = embed_phi(alg, x);
    for (const auto& g : generators(alg)) {
      const double p = trace_invariant(alg, g.exponent).value(x);
      const PencilExpansion e = expand_pencil(alg, g, m);
      for (int k = 0; k <= e.degree; ++k) worst = std::max(worst, std::abs(e.coeffs[k] - binomial(e.degree, k) * p));
    }
  }
  return CheckReport::residual("toda.binomial", "restricted family equals binomial multiples of the generators",
                               RunInfo{alg.name(), "-", samples, seed}, worst, tolerance);
}

std::vector<CheckReport> toda_suite(const Algebra& alg, int samples, std::uint64_t seed) {
  const PhaseSpace tt = toda_space(alg);
  const RMatrixConfig cfg = RMatrixConfig::splitting(alg);
  const RunInfo run{alg.name(), "R", samples, seed};
  const auto gens = generators(alg);
  std::vector<AlgebraFunction> ps;
  for (const auto& g : gens) ps.push_back(trace_invariant(alg, g.exponent));
  const AlgebraFunction h = trace_invariant(alg, 1);

  Rng rng(seed);
  double defect = 0.0, field_err = 0.0, involution = 0.0;
  int indep = 0, rank = 0;
  std::vector<Element> points;
  for (int s = 0; s < samples; ++s) points.push_back(tt.random_point(rng));
  for (const auto& x : points) {
    const Matrix pi = r_poisson_tensor(alg, cfg, x);
    defect = std::max(defect, submanifold_defect(pi, tt));
    field_err = std::max(field_err, (r_field(alg, cfg, h.gradient(x), x) - field_toda(alg, x)).norm());
    Matrix jac(static_cast<Eigen::Index>(ps.size()), tt.dim());
    for (std::size_t a = 0; a < ps.size(); ++a) {
      const Element ga = ps[a].gradient(x);
      jac.row(static_cast<Eigen::Index>(a)) = alg.differential_from_gradient(ga).transpose() * tt.tangent();
      for (std::size_t b = a + 1; b < ps.size(); ++b)
        involution = std::max(involution, std::abs(r_poisson_bracket(alg, cfg, ga, ps[b].gradient(x), x)));
    }
    indep = std::max(indep, row_normalized_rank(jac));
    rank = std::max(rank, numerical_rank(tt.coords() * pi * tt.coords().transpose()));
  }

  // Conservation along the Toda flow from the first sample point.
  double drift = 0.0;
  if (!points.empty()) {
    const PairField f = [&alg](const PairPoint& m) { return PairPoint{field_toda(alg, m.x), alg.zero()}; };
    PairPoint m{points.front(), alg.zero()};
    std::vector<double> p0;
    for (const auto& p : ps) p0.push_back(p.value(m.x));
    for (int k = 0; k < 1000; ++k) {
      m = rk4_step(f, m, 1e-3);
      for (std::size_t a = 0; a < ps.size(); ++a)
        drift = std::max(drift, std::abs(ps[a].value(m.x) - p0[a]) / std::max(std::abs(p0[a]), 1.0));
    }
  }

  const int simple = static_cast<int>(alg.simple_root_indices().size());
  return {
      CheckReport::residual("toda.submanifold", "the Toda space is a Poisson submanifold for the R-bracket", run, defect, 1e-9),
      CheckReport::residual("toda.field", "Hamiltonian field of (1/2)<x,x> is [A+, A]", run, field_err, 1e-9),
      CheckReport::residual("toda.involution", "the generators pairwise commute for the R-bracket", run, involution, 1e-9),
      CheckReport::equality("toda.independence", "the generators are independent on the Toda space", run, indep,
                            static_cast<double>(gens.size())),
      CheckReport::residual("toda.conservation", "the generators are conserved along the Toda flow", run, drift, 1e-6),
      CheckReport::equality("toda.rank", "the R-bracket has rank twice the number of simple roots on the Toda space", run,
                            rank, 2.0 * simple),
  };
}

}  // namespace toda2
