#include "toda2/phase_space.hpp"

#include "toda2/errors.hpp"

namespace toda2 {

PhaseSpace::PhaseSpace(std::string name, Vector base, Matrix tangent, std::optional<Matrix> coords)
    : name_(std::move(name)), base_(std::move(base)), tangent_(std::move(tangent)) {
  if (tangent_.rows() != base_.size()) throw PreconditionError("tangent basis does not match the ambient space");
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(tangent_);
  if (cod.rank() != tangent_.cols()) throw PreconditionError("tangent vectors of " + name_ + " are dependent");
  tangent_pinv_ = cod.pseudoInverse();
  coords_ = coords ? *coords : tangent_pinv_;
  if (coords_.rows() != tangent_.cols() || coords_.cols() != base_.size())
    throw PreconditionError("coordinate rows of " + name_ + " have the wrong shape");
  const Matrix wt = coords_ * tangent_;
  Eigen::FullPivLU<Matrix> lu(wt);
  if (!lu.isInvertible()) throw PreconditionError("coordinate functions of " + name_ + " are degenerate on the tangent");
  coord_to_tangent_ = lu.inverse();
}

Vector PhaseSpace::point(const Vector& z) const { return base_ + tangent_ * (coord_to_tangent_ * z); }

Vector PhaseSpace::coordinates(const Vector& m) const { return coords_ * (m - base_); }

Vector PhaseSpace::normal_component(const Vector& v) const { return v - tangent_ * (tangent_pinv_ * v); }

double PhaseSpace::normal_residual(const Vector& m) const { return normal_component(m - base_).norm(); }

Vector PhaseSpace::random_point(Rng& rng) const { return point(uniform_vector(rng, dim())); }

namespace {

Matrix selection(int rows, const std::vector<int>& idx, int offset = 0) {
  Matrix t = Matrix::Zero(rows, static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) t(idx[k] + offset, static_cast<Eigen::Index>(k)) = 1.0;
  return t;
}

}  // namespace

PhaseSpace two_toda_space(const Algebra& alg) {
  const int d = alg.dim();
  const auto xi = alg.indices(DegreeRegion::at_most(0));
  const auto yi = alg.indices(DegreeRegion::at_least(-1));
  Matrix t(2 * d, static_cast<Eigen::Index>(xi.size() + yi.size()));
  t << selection(2 * d, xi), selection(2 * d, yi, d);
  return PhaseSpace("T_P", PairPoint{alg.e(), alg.zero()}.flat(), t);
}

PhaseSpace toda_space(const Algebra& alg) {
  std::vector<int> idx;
  for (int a = 0; a < alg.dim(); ++a)
    if (alg.degrees()[a] == -1 || alg.degrees()[a] == 0) idx.push_back(a);
  return PhaseSpace("T_T", alg.e(), selection(alg.dim(), idx));
}

PhaseSpace toda_diagonal_space(const Algebra& alg) {
  const Matrix s = toda_space(alg).tangent();
  Matrix t(2 * alg.dim(), s.cols());
  t << s, s;
  return PhaseSpace("T_T'", PairPoint::diagonal(alg.e()).flat(), t);
}

SimpleRootData simple_roots(const Algebra& alg) {
  SimpleRootData out;
  const auto pos = alg.indices(DegreeRegion::equal(1));
  const auto neg = alg.indices(DegreeRegion::equal(-1));
  for (int i : pos) {
    const Element ei = alg.basis_vector(i);
    int partner = -1;
    double best = 0.0;
    for (int j : neg) {
      const double v = std::abs(alg.gram()(i, j));
      if (v > best) best = v, partner = j;
    }
    if (partner < 0) throw PreconditionError("degree-1 basis vector " + std::to_string(i) + " has no dual in degree -1");
    const Element fi = alg.basis_vector(partner);
    Element hi = alg.bracket(ei, fi);
    // [h, e_i] = k e_i for h = [e_i, f_i]; rescale so that k = 2.
    const Element he = alg.bracket(hi, ei);
    const double k = he.dot(ei) / ei.squaredNorm();
    if (std::abs(k) < 1e-12) throw PreconditionError("coroot of simple root " + std::to_string(i) + " is degenerate");
    hi *= 2.0 / k;
    out.e.push_back(ei);
    out.f.push_back(fi);
    out.h.push_back(hi);
  }
  return out;
}

PhaseSpace cartan_factor_space(const Algebra& alg) {
  const SimpleRootData roots = simple_roots(alg);
  const int r = static_cast<int>(roots.e.size());
  Matrix t(alg.dim(), 2 * r);
  Matrix w(2 * r, alg.dim());
  for (int i = 0; i < r; ++i) {
    t.col(i) = roots.h[i];
    t.col(r + i) = roots.f[i];
    w.row(i) = alg.differential_from_gradient(roots.h[i]).transpose();
    w.row(r + i) = alg.differential_from_gradient(roots.e[i]).transpose();
  }
  return PhaseSpace("cartan-factor", alg.zero(), t, w);
}

}  // namespace toda2
