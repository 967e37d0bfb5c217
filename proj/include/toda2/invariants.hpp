#pragma once

#include "toda2/algebra.hpp"
#include "toda2/phase_space.hpp"
#include "toda2/poisson.hpp"
#include "toda2/rmatrix.hpp"

#include <string>
#include <vector>

namespace toda2 {

/// Invariant generator P(x) = Trace(x^{m+1}) / (m+1) attached to exponent m.
/// `label` is the index used in names F_j_label: position + 1, or the
/// position itself when the exponent list starts at 0 (gl(n)).
struct Generator {
  int label = 0;
  int exponent = 0;
  int degree() const { return exponent + 1; }
};

std::vector<Generator> generators(const Algebra& alg);

/// P(x) = Trace(x^{m+1}) / (m+1) with gradient lift(x^m). Throws
/// PreconditionError for m < 0.
AlgebraFunction trace_invariant(const Algebra& alg, int m);

/// Matrix polynomial in lambda, coefficient k multiplies lambda^k.
using MatrixPoly = std::vector<Matrix>;
MatrixPoly poly_multiply(const MatrixPoly& a, const MatrixPoly& b);
/// Coefficients of (lambda X - Y)^k.
MatrixPoly pencil_power(const Matrix& x, const Matrix& y, int k);

/// Expansion P(lambda x - y) = sum_j (-1)^{d-j} lambda^j F_j(x, y), d = m+1,
/// with the pair gradients of every F_j.
struct PencilExpansion {
  Generator generator;
  int degree = 0;
  std::vector<double> coeffs;
  std::vector<PairPoint> grads;
};
PencilExpansion expand_pencil(const Algebra& alg, const Generator& gen, const PairPoint& m);

/// Member F_j_label of the conserved family.
struct FamilyMember {
  std::string name;
  Generator generator;
  int j = 0;
};
std::vector<FamilyMember> family(const Algebra& alg);
/// Family member as a pair function with analytic gradient.
PairFunction family_function(const Algebra& alg, const FamilyMember& member);
/// Values of all family members at m, in family() order.
Vector family_values(const Algebra& alg, const PairPoint& m);
/// Gradients of all family members at m, in family() order.
std::vector<PairPoint> family_gradients(const Algebra& alg, const PairPoint& m);

/// Gradient of P o (x - y) for the generator, used for Casimir checks.
PairPoint difference_invariant_gradient(const Algebra& alg, const Generator& gen, const PairPoint& m);
/// Gradient of P o (lambda x - y).
PairPoint pencil_invariant_gradient(const Algebra& alg, const Generator& gen, double lambda, const PairPoint& m);

/// Vectors k! * (x-gradient of F_{k+1,i}) at (e, h) for 0 <= k <= m_i.
struct RaisData {
  std::vector<Element> vectors;
  std::vector<std::pair<int, int>> labels;  // (k, generator label)
  int rank = 0;
  /// Largest norm of a component in negative degree.
  double negative_part = 0.0;
  /// Number of independent vectors projected to each degree, keyed from
  /// the lowest degree of the algebra.
  std::vector<int> degree_profile;
};
RaisData rais_vectors(const Algebra& alg);

/// Rank of the Jacobian of the family restricted to the tangent of ps at m.
int family_jacobian_rank(const Algebra& alg, const PhaseSpace& ps, const PairPoint& m);
/// Maximum of family_jacobian_rank over the given points.
int independence_rank(const Algebra& alg, const PhaseSpace& ps, const std::vector<PairPoint>& points);
/// Jacobian rank of an explicit function list (analytic or numeric gradients).
int independence_rank(const Algebra& alg, const std::vector<PairFunction>& functions, const PhaseSpace& ps,
                      const std::vector<PairPoint>& points);

}  // namespace toda2
