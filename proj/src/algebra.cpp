#include "toda2/algebra.hpp"

#include "toda2/errors.hpp"

#include <cmath>
#include <sstream>

namespace toda2 {

namespace {

constexpr double kClosureTol = 1e-12;
constexpr double kGramCondTol = 1e-10;

Matrix elementary(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

Matrix principal_h(int n) {
  Matrix h = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) h(i, i) = n - 1 - 2 * i;
  return h;
}

Matrix principal_e(int n) {
  Matrix e = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) e(i, i + 1) = 1.0;
  return e;
}

Eigen::MatrixXi cartan_a(int r) {
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    c(i, i) = 2;
    if (i + 1 < r) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return c;
}

// Coordinates of m over `basis` for the builders, before an Algebra exists.
Vector solve_coords(const std::vector<Matrix>& basis, const Matrix& m) {
  const auto n2 = m.size();
  Matrix b(n2, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    b.col(static_cast<Eigen::Index>(a)) = basis[a].reshaped();
  Vector c = b.colPivHouseholderQr().solve(m.reshaped().eval());
  // Built-in principal elements have integer coordinates; drop solver noise.
  for (auto& v : c) v = std::round(v);
  return c;
}

std::string pair_text(int a, int b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

bool DegreeRegion::contains(int degree) const {
  switch (op) {
    case Op::AtLeast: return degree >= bound;
    case Op::Above: return degree > bound;
    case Op::AtMost: return degree <= bound;
    case Op::Below: return degree < bound;
    case Op::Equal: return degree == bound;
  }
  return false;
}

DegreeRegion DegreeRegion::complement() const {
  switch (op) {
    case Op::AtLeast: return below(bound);
    case Op::Above: return at_most(bound);
    case Op::AtMost: return above(bound);
    case Op::Below: return at_least(bound);
    case Op::Equal: break;
  }
  throw PreconditionError("an equality region has no single-predicate complement");
}

std::string DegreeRegion::to_string() const {
  const char* sym = ">=";
  switch (op) {
    case Op::AtLeast: sym = ">="; break;
    case Op::Above: sym = ">"; break;
    case Op::AtMost: sym = "<="; break;
    case Op::Below: sym = "<"; break;
    case Op::Equal: sym = "="; break;
  }
  return std::string(sym) + std::to_string(bound);
}

Algebra Algebra::build_sl(int n) {
  if (n < 2) throw InvalidOrder("sl(n) requires n >= 2, got " + std::to_string(n));
  AlgebraData d;
  d.name = "sl(" + std::to_string(n) + ")";
  d.n = n;
  // Row-major elementary matrices; the diagonal slot (i,i), i < n-1, holds
  // the coroot E_ii - E_{i+1,i+1}.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (i + 1 == n) continue;
        d.basis.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));
        d.degrees.push_back(0);
      } else {
        d.basis.push_back(elementary(n, i, j));
        d.degrees.push_back(j - i);
      }
    }
  }
  d.dim = n * n - 1;
  d.rank = n - 1;
  for (int m = 1; m < n; ++m) d.exponents.push_back(m);
  d.cartan = cartan_a(n - 1);
  d.e_coords = solve_coords(d.basis, principal_e(n));
  d.h_coords = solve_coords(d.basis, principal_h(n));
  d.associative = false;
  return Algebra(std::move(d));
}

Algebra Algebra::build_gl(int n) {
  if (n < 2) throw InvalidOrder("gl(n) requires n >= 2, got " + std::to_string(n));
  AlgebraData d;
  d.name = "gl(" + std::to_string(n) + ")";
  d.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      d.basis.push_back(elementary(n, i, j));
      d.degrees.push_back(j - i);
    }
  }
  d.dim = n * n;
  d.rank = n;
  // Generators Trace(x^{m+1})/(m+1) for m = 0..n-1.
  for (int m = 0; m < n; ++m) d.exponents.push_back(m);
  d.cartan = cartan_a(n - 1);
  d.e_coords = solve_coords(d.basis, principal_e(n));
  d.h_coords = solve_coords(d.basis, principal_h(n));
  d.associative = true;
  return Algebra(std::move(d));
}

Algebra Algebra::from_data(const AlgebraData& data) { return Algebra(data); }

Algebra Algebra::with_form_scale(double scale) const {
  if (!(scale > 0.0)) throw PreconditionError("form scale must be positive");
  return Algebra(data_, form_scale_ * scale);
}

Algebra::Algebra(AlgebraData data, double form_scale) : data_(std::move(data)), form_scale_(form_scale) {
  const auto& d = data_;
  if (d.basis.empty()) throw ValidationError("shape", {}, "algebra spec has an empty basis");
  if (static_cast<int>(d.basis.size()) != d.dim)
    throw ValidationError("shape", {}, "basis has " + std::to_string(d.basis.size()) + " matrices but dim = " + std::to_string(d.dim));
  const auto n = d.basis.front().rows();
  for (int a = 0; a < d.dim; ++a) {
    if (d.basis[a].rows() != n || d.basis[a].cols() != n)
      throw ValidationError("shape", {a}, "basis matrix " + std::to_string(a) + " is not " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (static_cast<int>(d.degrees.size()) != d.dim) throw ValidationError("shape", {}, "degrees length differs from dim");
  if (d.e_coords.size() != d.dim || d.h_coords.size() != d.dim)
    throw ValidationError("shape", {}, "e_coords/h_coords length differs from dim");
  if (d.rank <= 0) throw ValidationError("shape", {}, "rank must be positive");
  if (static_cast<int>(d.exponents.size()) != d.rank)
    throw ValidationError("shape", {}, "exponents list must have rank entries");
  if (d.cartan.rows() != d.cartan.cols()) throw ValidationError("shape", {}, "cartan matrix must be square");

  vec_basis_.resize(n * n, d.dim);
  for (int a = 0; a < d.dim; ++a) vec_basis_.col(a) = d.basis[a].reshaped();
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(vec_basis_);
  if (cod.rank() != d.dim) throw ValidationError("linear-independence", {}, "basis matrices are linearly dependent");
  pinv_ = cod.pseudoInverse();

  gram_.resize(d.dim, d.dim);
  for (int a = 0; a < d.dim; ++a)
    for (int b = 0; b < d.dim; ++b) gram_(a, b) = form_scale_ * (d.basis[a] * d.basis[b]).trace();
  gram_lu_.compute(gram_);

  validate();

  // Center: common kernel of ad_{b_a}.
  Matrix stacked(d.dim * d.dim, d.dim);
  for (int a = 0; a < d.dim; ++a) stacked.middleRows(a * d.dim, d.dim) = ad_matrix(basis_vector(a));
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = s.size() ? s[0] * kRankRelTol * d.dim : 0.0;
  int r = 0;
  while (r < s.size() && s[r] > cut) ++r;
  center_ = svd.matrixV().rightCols(d.dim - r);
}

void Algebra::validate() const {
  const auto& d = data_;
  const int dim = d.dim;
  std::vector<std::vector<Element>> structure(dim, std::vector<Element>(dim));

  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const Matrix c = d.basis[a] * d.basis[b] - d.basis[b] * d.basis[a];
      const double res = span_residual(c);
      if (res > kClosureTol * std::max(1.0, c.norm()))
        throw ValidationError("bracket-closure", {a, b}, "bracket of basis pair " + pair_text(a, b) + " leaves the span (residual " + std::to_string(res) + ")");
      structure[a][b] = from_matrix(c);
    }
  }
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const Element& c = structure[a][b];
      for (int k = 0; k < dim; ++k) {
        if (std::abs(c[k]) > kClosureTol && d.degrees[k] != d.degrees[a] + d.degrees[b])
          throw ValidationError("grading", {a, b, k}, "bracket of basis pair " + pair_text(a, b) + " has a component of wrong degree at index " + std::to_string(k));
      }
    }
  }

  const Eigen::JacobiSVD<Matrix> svd(gram_);
  const auto& sv = svd.singularValues();
  if (sv[sv.size() - 1] <= kGramCondTol * sv[0])
    throw ValidationError("form-nondegenerate", {}, "trace form is degenerate on the basis");
  if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > kClosureTol * std::max(1.0, gram_.norm()))
    throw ValidationError("form-symmetric", {}, "gram matrix is not symmetric");

  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (d.degrees[a] + d.degrees[b] != 0 && std::abs(gram_(a, b)) > kClosureTol)
        throw ValidationError("graded-orthogonality", {a, b}, "form pairs basis " + pair_text(a, b) + " of degrees summing to nonzero");
    }
  }

  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const Vector gb = gram_ * structure[a][b];
      for (int c = 0; c < dim; ++c) {
        const double res = gb[c] + gram_.row(b).dot(structure[a][c]);
        if (std::abs(res) > 1e-11)
          throw ValidationError("form-invariance", {a, b, c}, "form is not ad-invariant on basis triple");
      }
    }
  }

  const Element he = from_matrix(to_matrix(d.h_coords) * to_matrix(d.e_coords) - to_matrix(d.e_coords) * to_matrix(d.h_coords));
  if ((he - 2.0 * d.e_coords).norm() > kClosureTol * std::max(1.0, d.e_coords.norm()))
    throw ValidationError("principal-pair", {}, "[h, e] = 2e fails");
  for (int a = 0; a < dim; ++a) {
    if (std::abs(d.e_coords[a]) > kClosureTol && d.degrees[a] != 1)
      throw ValidationError("principal-pair", {a}, "e has a component outside degree 1");
    if (std::abs(d.h_coords[a]) > kClosureTol && d.degrees[a] != 0)
      throw ValidationError("principal-pair", {a}, "h has a component outside degree 0");
  }
  for (std::size_t i = 0; i < d.exponents.size(); ++i) {
    if (d.exponents[i] < 0 || (i > 0 && d.exponents[i] < d.exponents[i - 1]))
      throw ValidationError("exponents", {static_cast<int>(i)}, "exponents must be nonnegative and non-decreasing");
  }
}

Matrix Algebra::to_matrix(const Element& x) const {
  require_same(x);
  return (vec_basis_ * x).reshaped(matrix_size(), matrix_size());
}

Element Algebra::from_matrix(const Matrix& m) const { return pinv_ * m.reshaped(); }

double Algebra::span_residual(const Matrix& m) const {
  const Vector v = m.reshaped();
  return (vec_basis_ * (pinv_ * v) - v).norm();
}

Element Algebra::bracket(const Element& x, const Element& y) const {
  const Matrix a = to_matrix(x);
  const Matrix b = to_matrix(y);
  return from_matrix(a * b - b * a);
}

double Algebra::form(const Element& x, const Element& y) const {
  require_same(x);
  require_same(y);
  return x.dot(gram_ * y);
}

Element Algebra::project(const Element& x, DegreeRegion region) const {
  require_same(x);
  Element out = Element::Zero(dim());
  for (int a = 0; a < dim(); ++a)
    if (region.contains(data_.degrees[a])) out[a] = x[a];
  return out;
}

std::vector<int> Algebra::indices(DegreeRegion region) const {
  std::vector<int> out;
  for (int a = 0; a < dim(); ++a)
    if (region.contains(data_.degrees[a])) out.push_back(a);
  return out;
}

Element Algebra::lift(const Matrix& m) const {
  Vector rhs(dim());
  for (int a = 0; a < dim(); ++a) rhs[a] = (m * data_.basis[a]).trace();
  return gram_lu_.solve(rhs);
}

Element Algebra::gradient_from_differential(const Vector& partials) const {
  require_same(partials);
  return gram_lu_.solve(partials);
}

Vector Algebra::differential_from_gradient(const Element& g) const {
  require_same(g);
  return gram_ * g;
}

Matrix Algebra::ad_matrix(const Element& x) const {
  Matrix ad(dim(), dim());
  const Matrix xm = to_matrix(x);
  for (int b = 0; b < dim(); ++b) ad.col(b) = from_matrix(xm * data_.basis[b] - data_.basis[b] * xm);
  return ad;
}

std::vector<int> Algebra::simple_root_indices() const { return indices(DegreeRegion::equal(1)); }

void Algebra::require_same(const Element& x) const {
  if (x.size() != dim())
    throw AlgebraMismatch("element has " + std::to_string(x.size()) + " coordinates, algebra " + name() + " has dim " + std::to_string(dim()));
}

}  // namespace toda2
