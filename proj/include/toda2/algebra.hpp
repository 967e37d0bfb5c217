#pragma once

#include "toda2/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toda2 {

/// Coordinates of an algebra element over the stored basis.
using Element = Eigen::VectorXd;

/// Degree predicate used for projections onto sums of graded pieces.
struct DegreeRegion {
  enum class Op { AtLeast, Above, AtMost, Below, Equal };
  Op op = Op::AtLeast;
  int bound = 0;

  bool contains(int degree) const;
  DegreeRegion complement() const;
  std::string to_string() const;

  static DegreeRegion at_least(int k) { return {Op::AtLeast, k}; }
  static DegreeRegion above(int k) { return {Op::Above, k}; }
  static DegreeRegion at_most(int k) { return {Op::AtMost, k}; }
  static DegreeRegion below(int k) { return {Op::Below, k}; }
  static DegreeRegion equal(int k) { return {Op::Equal, k}; }
};

/// Raw fields of an algebra spec, as read from or written to disk.
struct AlgebraData {
  std::string name;
  std::optional<int> n;
  int dim = 0;
  int rank = 0;
  std::vector<Matrix> basis;
  std::vector<int> degrees;
  std::vector<int> exponents;
  Eigen::MatrixXi cartan;
  Vector e_coords;
  Vector h_coords;
  bool associative = false;
};

/// Finite-dimensional graded Lie algebra in a faithful matrix representation,
/// with the trace form, its grading and the principal pair (e, h).
///
/// Immutable after construction. Every constructor validates the invariants
/// listed in `validate()` and throws ValidationError on the first failure.
class Algebra {
public:
  static Algebra build_sl(int n);
  static Algebra build_gl(int n);
  static Algebra from_data(const AlgebraData& data);

  /// Copy whose invariant form is `scale` times the trace form.
  Algebra with_form_scale(double scale) const;

  const std::string& name() const { return data_.name; }
  int dim() const { return data_.dim; }
  int rank() const { return data_.rank; }
  int matrix_size() const { return static_cast<int>(data_.basis.front().rows()); }
  const std::vector<Matrix>& basis() const { return data_.basis; }
  const std::vector<int>& degrees() const { return data_.degrees; }
  const std::vector<int>& exponents() const { return data_.exponents; }
  const Eigen::MatrixXi& cartan() const { return data_.cartan; }
  bool associative() const { return data_.associative; }
  double form_scale() const { return form_scale_; }
  const AlgebraData& data() const { return data_; }

  const Element& e() const { return data_.e_coords; }
  const Element& h() const { return data_.h_coords; }
  /// Gram matrix of the invariant form on the basis.
  const Matrix& gram() const { return gram_; }
  /// Columns span the center (possibly zero columns).
  const Matrix& center() const { return center_; }

  Element zero() const { return Element::Zero(dim()); }
  Element basis_vector(int a) const { return Element::Unit(dim(), a); }

  Matrix to_matrix(const Element& x) const;
  /// Least-squares coordinates of a matrix; exact when m lies in the span.
  Element from_matrix(const Matrix& m) const;
  /// Frobenius distance from m to the span of the basis.
  double span_residual(const Matrix& m) const;

  Element bracket(const Element& x, const Element& y) const;
  double form(const Element& x, const Element& y) const;
  Element project(const Element& x, DegreeRegion region) const;
  /// Basis indices whose degree lies in `region`.
  std::vector<int> indices(DegreeRegion region) const;

  /// Form-gradient of z -> Trace(m z): the element g with
  /// form(g, z) = Trace(m z) for every z in the algebra.
  Element lift(const Matrix& m) const;
  /// Form-gradient of the linear functional with coordinate partials `partials`.
  Element gradient_from_differential(const Vector& partials) const;
  /// Coordinate partials of z -> form(g, z).
  Vector differential_from_gradient(const Element& g) const;

  /// Matrix of ad_x acting on coordinates.
  Matrix ad_matrix(const Element& x) const;

  /// Simple-root vectors: basis vectors of degree 1, in basis order.
  std::vector<int> simple_root_indices() const;

  void require_same(const Element& x) const;

private:
  explicit Algebra(AlgebraData data, double form_scale = 1.0);
  void validate() const;

  AlgebraData data_;
  double form_scale_ = 1.0;
  Matrix vec_basis_;   // n^2 x dim, column a = vec(b_a)
  Matrix pinv_;        // dim x n^2
  Matrix gram_;
  Eigen::FullPivLU<Matrix> gram_lu_;
  Matrix center_;
};

}  // namespace toda2
