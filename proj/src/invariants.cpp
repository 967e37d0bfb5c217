#include "toda2/invariants.hpp"

#include "toda2/errors.hpp"

#include <algorithm>

namespace toda2 {

std::vector<Generator> generators(const Algebra& alg) {
  const auto& ex = alg.exponents();
  const int shift = (!ex.empty() && ex.front() == 0) ? 0 : 1;
  std::vector<Generator> out;
  for (std::size_t k = 0; k < ex.size(); ++k) out.push_back({static_cast<int>(k) + shift, ex[k]});
  return out;
}

AlgebraFunction trace_invariant(const Algebra& alg, int m) {
  if (m < 0) throw PreconditionError("invariant exponent must be nonnegative");
  const int d = m + 1;
  AlgebraFunction f;
  f.name = "P_" + std::to_string(m);
  f.value = [&alg, m, d](const Element& x) {
    const Matrix xm = alg.to_matrix(x);
    Matrix p = Matrix::Identity(xm.rows(), xm.cols());
    for (int k = 0; k < d; ++k) p = p * xm;
    return p.trace() / d;
  };
  f.gradient = [&alg, m](const Element& x) {
    const Matrix xm = alg.to_matrix(x);
    Matrix p = Matrix::Identity(xm.rows(), xm.cols());
    for (int k = 0; k < m; ++k) p = p * xm;
    return alg.lift(p);
  };
  return f;
}

MatrixPoly poly_multiply(const MatrixPoly& a, const MatrixPoly& b) {
  if (a.empty() || b.empty()) return {};
  MatrixPoly out(a.size() + b.size() - 1, Matrix::Zero(a.front().rows(), b.front().cols()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

MatrixPoly pencil_power(const Matrix& x, const Matrix& y, int k) {
  if (k < 0) throw PreconditionError("negative pencil power");
  MatrixPoly out{Matrix::Identity(x.rows(), x.cols())};
  const MatrixPoly pencil{-y, x};
  for (int s = 0; s < k; ++s) out = poly_multiply(out, pencil);
  return out;
}

PencilExpansion expand_pencil(const Algebra& alg, const Generator& gen, const PairPoint& m) {
  const Matrix x = alg.to_matrix(m.x), y = alg.to_matrix(m.y);
  const int d = gen.degree();
  const MatrixPoly full = pencil_power(x, y, d);
  const MatrixPoly lower = pencil_power(x, y, d - 1);
  std::vector<Element> lifted;
  for (const auto& c : lower) lifted.push_back(alg.lift(c));

  PencilExpansion e;
  e.generator = gen;
  e.degree = d;
  for (int j = 0; j <= d; ++j) {
    const double sign = ((d - j) % 2 == 0) ? 1.0 : -1.0;
    e.coeffs.push_back(sign * full[j].trace() / d);
    // The gradient of P(lambda x - y) is (lambda L, L), L = lift((lambda x - y)^{d-1}).
    const Element gx = j >= 1 ? lifted[j - 1] : alg.zero();
    const Element gy = j <= d - 1 ? lifted[j] : alg.zero();
    e.grads.push_back(PairPoint{sign * gx, sign * gy});
  }
  return e;
}

std::vector<FamilyMember> family(const Algebra& alg) {
  std::vector<FamilyMember> out;
  for (const auto& g : generators(alg))
    for (int j = 0; j <= g.degree(); ++j) out.push_back({"F_" + std::to_string(j) + "_" + std::to_string(g.label), g, j});
  return out;
}

PairFunction family_function(const Algebra& alg, const FamilyMember& member) {
  PairFunction f;
  f.name = member.name;
  f.value = [&alg, member](const PairPoint& m) { return expand_pencil(alg, member.generator, m).coeffs[member.j]; };
  f.gradient = [&alg, member](const PairPoint& m) { return expand_pencil(alg, member.generator, m).grads[member.j]; };
  return f;
}

Vector family_values(const Algebra& alg, const PairPoint& m) {
  std::vector<double> v;
  for (const auto& g : generators(alg)) {
    const auto e = expand_pencil(alg, g, m);
    v.insert(v.end(), e.coeffs.begin(), e.coeffs.end());
  }
  return Eigen::Map<Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<PairPoint> family_gradients(const Algebra& alg, const PairPoint& m) {
  std::vector<PairPoint> out;
  for (const auto& g : generators(alg)) {
    auto e = expand_pencil(alg, g, m);
    out.insert(out.end(), e.grads.begin(), e.grads.end());
  }
  return out;
}

PairPoint pencil_invariant_gradient(const Algebra& alg, const Generator& gen, double lambda, const PairPoint& m) {
  const AlgebraFunction p = trace_invariant(alg, gen.exponent);
  const Element l = p.gradient(lambda * m.x - m.y);
  return {lambda * l, l};
}

PairPoint difference_invariant_gradient(const Algebra& alg, const Generator& gen, const PairPoint& m) {
  return pencil_invariant_gradient(alg, gen, 1.0, m);
}

RaisData rais_vectors(const Algebra& alg) {
  RaisData data;
  const PairPoint eh{alg.e(), alg.h()};
  for (const auto& g : generators(alg)) {
    const auto e = expand_pencil(alg, g, eh);
    double factorial = 1.0;
    for (int k = 0; k <= g.exponent; ++k) {
      if (k > 0) factorial *= k;
      data.vectors.push_back(factorial * e.grads[k + 1].x);
      data.labels.emplace_back(k, g.label);
    }
  }
  Matrix cols(alg.dim(), static_cast<Eigen::Index>(data.vectors.size()));
  for (std::size_t c = 0; c < data.vectors.size(); ++c) {
    cols.col(static_cast<Eigen::Index>(c)) = data.vectors[c];
    data.negative_part = std::max(data.negative_part, alg.project(data.vectors[c], DegreeRegion::below(0)).norm());
  }
  data.rank = numerical_rank(cols);
  const auto [lo, hi] = std::minmax_element(alg.degrees().begin(), alg.degrees().end());
  for (int k = *lo; k <= *hi; ++k) {
    Matrix part(alg.dim(), cols.cols());
    for (Eigen::Index c = 0; c < cols.cols(); ++c) part.col(c) = alg.project(cols.col(c), DegreeRegion::equal(k));
    data.degree_profile.push_back(numerical_rank(part));
  }
  return data;
}

namespace {

int jacobian_rank(const Algebra& alg, const std::vector<PairPoint>& grads, const PhaseSpace& ps) {
  Matrix j(static_cast<Eigen::Index>(grads.size()), ps.dim());
  for (std::size_t r = 0; r < grads.size(); ++r)
    j.row(static_cast<Eigen::Index>(r)) = partials_from_gradient(alg, grads[r]).transpose() * ps.tangent();
  return row_normalized_rank(j);
}

}  // namespace

int family_jacobian_rank(const Algebra& alg, const PhaseSpace& ps, const PairPoint& m) {
  return jacobian_rank(alg, family_gradients(alg, m), ps);
}

int independence_rank(const Algebra& alg, const PhaseSpace& ps, const std::vector<PairPoint>& points) {
  if (points.empty()) throw PreconditionError("independence rank needs at least one point");
  int best = 0;
  for (const auto& m : points) best = std::max(best, family_jacobian_rank(alg, ps, m));
  return best;
}

int independence_rank(const Algebra& alg, const std::vector<PairFunction>& functions, const PhaseSpace& ps,
                      const std::vector<PairPoint>& points) {
  if (points.empty()) throw PreconditionError("independence rank needs at least one point");
  int best = 0;
  for (const auto& m : points) {
    std::vector<PairPoint> grads;
    for (const auto& f : functions) grads.push_back(gradient2(alg, f, m));
    best = std::max(best, jacobian_rank(alg, grads, ps));
  }
  return best;
}

}  // namespace toda2
