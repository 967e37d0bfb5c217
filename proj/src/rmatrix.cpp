#include "toda2/rmatrix.hpp"

#include "toda2/errors.hpp"

#include <algorithm>

namespace toda2 {

Vector PairPoint::flat() const {
  Vector v(x.size() + y.size());
  v << x, y;
  return v;
}

PairPoint PairPoint::from_flat(const Vector& v, int dim) {
  if (v.size() != 2 * dim) throw AlgebraMismatch("flat pair vector has wrong length");
  return {v.head(dim), v.tail(dim)};
}

RMatrixConfig RMatrixConfig::splitting(const Algebra& alg, DegreeRegion plus_region, double c) {
  RMatrixConfig cfg;
  cfg.c = c;
  cfg.plus = plus_region;
  cfg.r = Matrix::Zero(alg.dim(), alg.dim());
  for (int a = 0; a < alg.dim(); ++a) cfg.r(a, a) = plus_region.contains(alg.degrees()[a]) ? 1.0 : -1.0;
  return cfg;
}

RMatrixConfig RMatrixConfig::custom(Matrix r, double c) {
  if (r.rows() != r.cols()) throw PreconditionError("R must be square");
  RMatrixConfig cfg;
  cfg.c = c;
  cfg.r = std::move(r);
  return cfg;
}

Element r_apply(const RMatrixConfig& cfg, const Element& x) {
  if (x.size() != cfg.r.cols()) throw AlgebraMismatch("element size does not match R");
  return cfg.r * x;
}

Element r_apply(const Algebra& alg, const Element& x) {
  return alg.project(x, DegreeRegion::at_least(0)) - alg.project(x, DegreeRegion::below(0));
}

PairPoint rr_apply(const RMatrixConfig& cfg, const PairPoint& p) {
  const Element d = r_apply(cfg, p.x - p.y);
  return {d + cfg.c * p.y, d + cfg.c * p.x};
}

PairDecomposition decompose_pair(const Algebra& alg, const PairPoint& p, DegreeRegion plus_region) {
  const DegreeRegion minus_region = plus_region.complement();
  const Element xp = alg.project(p.x, plus_region), xm = alg.project(p.x, minus_region);
  const Element yp = alg.project(p.y, plus_region), ym = alg.project(p.y, minus_region);
  const Element diag = xp + ym;
  return {{diag, diag}, {xm - ym, yp - xp}};
}

PairPoint pair_bracket(const Algebra& alg, const PairPoint& p, const PairPoint& q) {
  return {alg.bracket(p.x, q.x), alg.bracket(p.y, q.y)};
}

double pair_form(const Algebra& alg, const PairPoint& p, const PairPoint& q) {
  return alg.form(p.x, q.x) - alg.form(p.y, q.y);
}

Element b_tensor(const Algebra& alg, const RMatrixConfig& cfg, const Element& x, const Element& y) {
  const Element rx = r_apply(cfg, x), ry = r_apply(cfg, y);
  return alg.bracket(rx, ry) - r_apply(cfg, alg.bracket(rx, y) + alg.bracket(x, ry));
}

PairPoint b_tensor_pair(const Algebra& alg, const RMatrixConfig& cfg, const PairPoint& p, const PairPoint& q) {
  const PairPoint rp = rr_apply(cfg, p), rq = rr_apply(cfg, q);
  return pair_bracket(alg, rp, rq) - rr_apply(cfg, pair_bracket(alg, rp, q) + pair_bracket(alg, p, rq));
}

Element r_bracket(const Algebra& alg, const RMatrixConfig& cfg, const Element& x, const Element& y) {
  return 0.5 * (alg.bracket(r_apply(cfg, x), y) + alg.bracket(x, r_apply(cfg, y)));
}

PairPoint rr_bracket(const Algebra& alg, const RMatrixConfig& cfg, const PairPoint& p, const PairPoint& q) {
  return 0.5 * (pair_bracket(alg, rr_apply(cfg, p), q) + pair_bracket(alg, p, rr_apply(cfg, q)));
}

double residual_mod_center(const Algebra& alg, const Element& x) {
  const Matrix& z = alg.center();
  if (z.cols() == 0) return x.norm();
  return (x - z * (z.transpose() * x)).norm();
}

CheckReport check_mcybe(const Algebra& alg, const RMatrixConfig& cfg, int samples, std::uint64_t seed,
                        double tolerance, bool on_pairs) {
  if (samples < 1) throw PreconditionError("check_mcybe needs at least one sample");
  Rng rng(seed);
  const double c2 = cfg.c * cfg.c;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    if (on_pairs) {
      const PairPoint p{uniform_vector(rng, alg.dim()), uniform_vector(rng, alg.dim())};
      const PairPoint q{uniform_vector(rng, alg.dim()), uniform_vector(rng, alg.dim())};
      const PairPoint r = b_tensor_pair(alg, cfg, p, q) + c2 * pair_bracket(alg, p, q);
      worst = std::max(worst, std::hypot(residual_mod_center(alg, r.x), residual_mod_center(alg, r.y)));
    } else {
      const Element x = uniform_vector(rng, alg.dim()), y = uniform_vector(rng, alg.dim());
      worst = std::max(worst, residual_mod_center(alg, b_tensor(alg, cfg, x, y) + c2 * alg.bracket(x, y)));
    }
  }
  RunInfo run{alg.name(), on_pairs ? "pair" : "single", samples, seed};
  return CheckReport::residual(on_pairs ? "mcybe.pair" : "mcybe", "B(x,y) + c^2 [x,y] lies in the center", run,
                               worst, tolerance);
}

}  // namespace toda2
