#include "toda2/poisson.hpp"

#include "toda2/errors.hpp"

#include <algorithm>

namespace toda2 {

std::string to_string(BracketKind kind) { return kind == BracketKind::Linear ? "linear" : "quadratic"; }

PairPoint gradient_from_partials(const Algebra& alg, const Vector& partials) {
  const int d = alg.dim();
  if (partials.size() != 2 * d) throw AlgebraMismatch("pair partials have the wrong length");
  return {alg.gradient_from_differential(partials.head(d)), -alg.gradient_from_differential(partials.tail(d))};
}

Vector partials_from_gradient(const Algebra& alg, const PairPoint& g) {
  Vector v(2 * alg.dim());
  v << alg.differential_from_gradient(g.x), -alg.differential_from_gradient(g.y);
  return v;
}

PairPoint coordinate_gradient(const Algebra& alg, int a) {
  return gradient_from_partials(alg, Vector::Unit(2 * alg.dim(), a));
}

PairPoint gradient2(const Algebra& alg, const PairFunction& f, const PairPoint& m) {
  if (f.gradient) return f.gradient(m);
  const int d = alg.dim();
  const Vector partials =
      central_difference([&](const Vector& v) { return f.value(PairPoint::from_flat(v, d)); }, m.flat());
  return gradient_from_partials(alg, partials);
}

PoissonBracket::PoissonBracket(Algebra alg, RMatrixConfig cfg, BracketKind kind)
    : alg_(std::move(alg)), cfg_(std::move(cfg)), kind_(kind) {
  if (kind_ == BracketKind::Quadratic && !alg_.associative())
    throw CapabilityError("quadratic bracket needs an associative matrix algebra; " + alg_.name() + " is not");
  if (cfg_.r.rows() != alg_.dim()) throw AlgebraMismatch("R-matrix size does not match " + alg_.name());
}

PairPoint PoissonBracket::times(const PairPoint& m, const PairPoint& g) const {
  const Matrix x = alg_.to_matrix(m.x), y = alg_.to_matrix(m.y);
  const Matrix a = alg_.to_matrix(g.x), b = alg_.to_matrix(g.y);
  return {alg_.from_matrix(x * a + a * x), alg_.from_matrix(y * b + b * y)};
}

double PoissonBracket::operator()(const PairPoint& gf, const PairPoint& gg, const PairPoint& m) const {
  if (kind_ == BracketKind::Linear) {
    return 0.5 * (pair_form(alg_, m, pair_bracket(alg_, rr_apply(cfg_, gf), gg)) +
                  pair_form(alg_, m, pair_bracket(alg_, gf, rr_apply(cfg_, gg))));
  }
  return 0.5 * pair_form(alg_, pair_bracket(alg_, m, gf), rr_apply(cfg_, times(m, gg))) -
         0.5 * pair_form(alg_, pair_bracket(alg_, m, gg), rr_apply(cfg_, times(m, gf)));
}

double PoissonBracket::evaluate(const PairFunction& f, const PairFunction& g, const PairPoint& m) const {
  return (*this)(gradient2(alg_, f, m), gradient2(alg_, g, m), m);
}

Matrix PoissonBracket::tensor(const PairPoint& m) const {
  const int n = 2 * alg_.dim();
  // Both brackets are <u_a, v_b>_2 - <u_b, v_a>_2 style sums; precompute
  // the per-coordinate pieces.
  const Matrix g2 = [&] {
    Matrix g = Matrix::Zero(n, n);
    g.topLeftCorner(alg_.dim(), alg_.dim()) = alg_.gram();
    g.bottomRightCorner(alg_.dim(), alg_.dim()) = -alg_.gram();
    return g;
  }();
  Matrix pi(n, n);
  if (kind_ == BracketKind::Linear) {
    // {u_a, u_b} = 1/2 (<[m, R g_a], g_b> + <[m, g_a], R g_b>).
    std::vector<Vector> mrg(n), mg(n), g(n), rg(n);
    for (int a = 0; a < n; ++a) {
      const PairPoint ga = coordinate_gradient(alg_, a);
      const PairPoint rga = rr_apply(cfg_, ga);
      g[a] = ga.flat();
      rg[a] = rga.flat();
      mrg[a] = g2 * pair_bracket(alg_, m, rga).flat();
      mg[a] = g2 * pair_bracket(alg_, m, ga).flat();
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) pi(a, b) = 0.5 * (mrg[a].dot(g[b]) + mg[a].dot(rg[b]));
  } else {
    std::vector<Vector> comm(n), sym(n);
    for (int a = 0; a < n; ++a) {
      const PairPoint ga = coordinate_gradient(alg_, a);
      comm[a] = g2 * pair_bracket(alg_, m, ga).flat();
      sym[a] = rr_apply(cfg_, times(m, ga)).flat();
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) pi(a, b) = 0.5 * (comm[a].dot(sym[b]) - comm[b].dot(sym[a]));
  }
  return pi;
}

PairPoint PoissonBracket::field(const PairPoint& grad_f, const PairPoint& m) const {
  const int n = 2 * alg_.dim();
  Vector v(n);
  for (int a = 0; a < n; ++a) v[a] = (*this)(coordinate_gradient(alg_, a), grad_f, m);
  return PairPoint::from_flat(v, alg_.dim());
}

PairPoint PoissonBracket::field(const PairFunction& f, const PairPoint& m) const {
  return field(gradient2(alg_, f, m), m);
}

double jacobi_residual(const PoissonBracket& bracket, const PairPoint& m) {
  const int d = bracket.algebra().dim();
  const int n = 2 * d;
  constexpr double h = 1e-3;
  const Matrix pi = bracket.tensor(m);
  std::vector<Matrix> dpi(n);
  const Vector flat = m.flat();
  for (int k = 0; k < n; ++k) {
    Vector up = flat, down = flat;
    up[k] += h;
    down[k] -= h;
    dpi[k] = (bracket.tensor(PairPoint::from_flat(up, d)) - bracket.tensor(PairPoint::from_flat(down, d))) / (2 * h);
  }
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += pi(a, k) * dpi[k](b, c) + pi(b, k) * dpi[k](c, a) + pi(c, k) * dpi[k](a, b);
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

PoissonMatrixAt poisson_matrix(const PoissonBracket& bracket, const PhaseSpace& ps, const PairPoint& m) {
  const Vector flat = m.flat();
  if (flat.size() != ps.ambient_dim()) throw AlgebraMismatch("point does not live in the ambient space of " + ps.name());
  const double off = ps.normal_residual(flat);
  if (!(off < 1e-10)) throw PreconditionError("point is off " + ps.name() + " (residual " + std::to_string(off) + ")");
  const Matrix& w = ps.coords();
  return {flat, w * bracket.tensor(m) * w.transpose(), bracket.kind()};
}

int rank_at(const PoissonBracket& bracket, const PhaseSpace& ps, const PairPoint& m) {
  return numerical_rank(poisson_matrix(bracket, ps, m).matrix);
}

int max_rank(const PoissonBracket& bracket, const PhaseSpace& ps, int points, std::uint64_t seed) {
  Rng rng(seed);
  int best = 0;
  for (int k = 0; k < points; ++k) {
    const PairPoint m = PairPoint::from_flat(ps.random_point(rng), bracket.algebra().dim());
    best = std::max(best, rank_at(bracket, ps, m));
  }
  return best;
}

double submanifold_defect(const Matrix& tensor, const PhaseSpace& ps) {
  double worst = 0.0;
  for (Eigen::Index a = 0; a < tensor.cols(); ++a)
    worst = std::max(worst, ps.normal_component(tensor.col(a)).norm());
  return worst;
}

double r_poisson_bracket(const Algebra& alg, const RMatrixConfig& cfg, const Element& gf, const Element& gg,
                         const Element& x) {
  return alg.form(x, r_bracket(alg, cfg, gf, gg));
}

Matrix r_poisson_tensor(const Algebra& alg, const RMatrixConfig& cfg, const Element& x) {
  const int d = alg.dim();
  const Matrix ginv = alg.gram().inverse();
  Matrix pi(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) pi(a, b) = r_poisson_bracket(alg, cfg, ginv.col(a), ginv.col(b), x);
  return pi;
}

double lie_poisson_bracket(const Algebra& alg, const Element& gf, const Element& gg, const Element& w) {
  return alg.form(w, alg.bracket(gf, gg));
}

Matrix lie_poisson_tensor(const Algebra& alg, const Element& w) {
  const int d = alg.dim();
  const Matrix ginv = alg.gram().inverse();
  Matrix pi(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) pi(a, b) = lie_poisson_bracket(alg, ginv.col(a), ginv.col(b), w);
  return pi;
}

Element r_field(const Algebra& alg, const RMatrixConfig& cfg, const Element& grad_f, const Element& x) {
  return r_poisson_tensor(alg, cfg, x) * alg.differential_from_gradient(grad_f);
}

PairPoint pencil_field(const Algebra& alg, const RMatrixConfig& cfg, const PairPoint& m, double lambda,
                       const Element& grad_at_pencil) {
  const Element rg = r_apply(cfg, grad_at_pencil);
  const PairPoint q{rg - cfg.c * grad_at_pencil, rg + cfg.c * grad_at_pencil};
  return 0.5 * (1.0 - lambda) * pair_bracket(alg, m, q);
}

CheckReport check_morphism_psi1(const Algebra& alg, const RMatrixConfig& cfg, int samples, std::uint64_t seed,
                                double tolerance) {
  if (cfg.c != 1.0) throw PreconditionError("the difference map is a Poisson morphism only for c = 1");
  if (samples < 1) throw PreconditionError("morphism check needs at least one sample");
  const int d = alg.dim();
  const PoissonBracket bracket(alg, cfg, BracketKind::Linear);
  Rng rng(seed);
  double worst = 0.0;

  for (int s = 0; s < samples; ++s) {
    const PairPoint m{uniform_vector(rng, d), uniform_vector(rng, d)};
    const Element w = m.x - m.y;

    // Linear functionals: gradients are exact.
    const Element a = uniform_vector(rng, d), b = uniform_vector(rng, d);
    const double lhs_lin = bracket(PairPoint{a, a}, PairPoint{b, b}, m);
    worst = std::max(worst, std::abs(lhs_lin - lie_poisson_bracket(alg, a, b, w)));

    // Quadratic trace functions Trace(A w B w) / 2 with random A, B; the
    // gradient is lift((A w B + B w A) / 2).
    const Matrix ma = alg.to_matrix(uniform_vector(rng, d)), mb = alg.to_matrix(uniform_vector(rng, d));
    const Matrix mc = alg.to_matrix(uniform_vector(rng, d)), md = alg.to_matrix(uniform_vector(rng, d));
    auto quad = [&alg](const Matrix& p, const Matrix& q) {
      return AlgebraFunction{"quad",
                             [&alg, p, q](const Element& v) {
                               const Matrix vm = alg.to_matrix(v);
                               return 0.5 * (p * vm * q * vm).trace();
                             },
                             [&alg, p, q](const Element& v) {
                               const Matrix vm = alg.to_matrix(v);
                               return alg.lift(0.5 * (p * vm * q + q * vm * p));
                             }};
    };
    // Pullback along x - y: the pair gradient is (grad, grad).
    auto pullback = [](const AlgebraFunction& f) {
      return PairFunction{f.name + " o psi", [f](const PairPoint& p) { return f.value(p.x - p.y); },
                          [f](const PairPoint& p) {
                            const Element g = f.gradient(p.x - p.y);
                            return PairPoint{g, g};
                          }};
    };
    const auto f = quad(ma, mb), g = quad(mc, md);
    const double lhs_quad = bracket.evaluate(pullback(f), pullback(g), m);
    const double rhs_quad = lie_poisson_bracket(alg, f.gradient(w), g.gradient(w), w);
    worst = std::max(worst, std::abs(lhs_quad - rhs_quad));
  }
  return CheckReport::residual("morphism", "the difference map (x, y) -> x - y is a Poisson morphism onto the Lie-Poisson structure",
                               RunInfo{alg.name(), "linear", samples, seed}, worst, tolerance);
}

}  // namespace toda2
