#pragma once

#include "toda2/algebra.hpp"
#include "toda2/phase_space.hpp"
#include "toda2/report.hpp"
#include "toda2/rmatrix.hpp"

#include <functional>
#include <string>

namespace toda2 {

enum class BracketKind { Linear, Quadratic };
std::string to_string(BracketKind kind);

/// Scalar function on pairs. `gradient`, when set, returns the gradient with
/// respect to <(x1,y1),(x2,y2)> = <x1,x2> - <y1,y2>.
struct PairFunction {
  std::string name;
  std::function<double(const PairPoint&)> value;
  std::function<PairPoint(const PairPoint&)> gradient;
};

/// Scalar function on the algebra with its form-gradient.
struct AlgebraFunction {
  std::string name;
  std::function<double(const Element&)> value;
  std::function<Element(const Element&)> gradient;
};

/// Pair gradient of the function with coordinate partials (dF/dx, dF/dy).
PairPoint gradient_from_partials(const Algebra& alg, const Vector& partials);
Vector partials_from_gradient(const Algebra& alg, const PairPoint& g);
/// Gradient of the a-th stacked coordinate (x coordinates first).
PairPoint coordinate_gradient(const Algebra& alg, int a);
/// Analytic gradient when available, central differences otherwise.
PairPoint gradient2(const Algebra& alg, const PairFunction& f, const PairPoint& m);

/// Linear or quadratic Poisson bracket on pairs induced by the pair map of
/// an R-matrix. Hamiltonian fields follow X_F[K] = {K, F}.
class PoissonBracket {
public:
  /// Throws CapabilityError for the quadratic bracket on a non-associative
  /// algebra.
  PoissonBracket(Algebra alg, RMatrixConfig cfg, BracketKind kind);

  const Algebra& algebra() const { return alg_; }
  const RMatrixConfig& config() const { return cfg_; }
  BracketKind kind() const { return kind_; }

  /// Bracket of two functions given their gradients at m.
  double operator()(const PairPoint& grad_f, const PairPoint& grad_g, const PairPoint& m) const;
  double evaluate(const PairFunction& f, const PairFunction& g, const PairPoint& m) const;

  /// Matrix of brackets of the stacked coordinates at m.
  Matrix tensor(const PairPoint& m) const;
  /// Hamiltonian field of the function with gradient grad_f at m.
  PairPoint field(const PairPoint& grad_f, const PairPoint& m) const;
  PairPoint field(const PairFunction& f, const PairPoint& m) const;

private:
  PairPoint times(const PairPoint& m, const PairPoint& g) const;

  Algebra alg_;
  RMatrixConfig cfg_;
  BracketKind kind_;
};

/// Max over coordinate triples of the cyclic Jacobi sum at m, with the
/// derivatives of the tensor taken by central differences (exact up to
/// rounding for the linear and quadratic brackets).
double jacobi_residual(const PoissonBracket& bracket, const PairPoint& m);

/// Coordinate Poisson matrix on a phase space at a point.
struct PoissonMatrixAt {
  Vector point;
  Matrix matrix;
  BracketKind kind = BracketKind::Linear;
};

/// coords * Pi * coords^T. Throws PreconditionError when m is off the space.
PoissonMatrixAt poisson_matrix(const PoissonBracket& bracket, const PhaseSpace& ps, const PairPoint& m);
int rank_at(const PoissonBracket& bracket, const PhaseSpace& ps, const PairPoint& m);
/// Maximum rank over `points` seeded random points of the space.
int max_rank(const PoissonBracket& bracket, const PhaseSpace& ps, int points, std::uint64_t seed);

/// Largest normal component of a Hamiltonian field of a coordinate function
/// at m. Zero iff the space is a Poisson submanifold at m.
double submanifold_defect(const Matrix& tensor, const PhaseSpace& ps);

/// (1/2)<x, [R gF, gG] + [gF, R gG]> on the algebra.
double r_poisson_bracket(const Algebra& alg, const RMatrixConfig& cfg, const Element& gf, const Element& gg,
                         const Element& x);
Matrix r_poisson_tensor(const Algebra& alg, const RMatrixConfig& cfg, const Element& x);
/// <w, [gF, gG]>.
double lie_poisson_bracket(const Algebra& alg, const Element& gf, const Element& gg, const Element& w);
Matrix lie_poisson_tensor(const Algebra& alg, const Element& w);
/// Hamiltonian field of the R-bracket on the algebra, X_F[K] = {K, F}.
Element r_field(const Algebra& alg, const RMatrixConfig& cfg, const Element& grad_f, const Element& x);

/// Closed-form linear field of P o (lambda x - y) given the gradient of P at
/// lambda x - y: (1/2)(1 - lambda) [m, ((R - c) g, (R + c) g)].
PairPoint pencil_field(const Algebra& alg, const RMatrixConfig& cfg, const PairPoint& m, double lambda,
                       const Element& grad_at_pencil);

/// Checks {F o psi, G o psi} = {F, G}_LP o psi for psi(x, y) = x - y on
/// seeded random points, with F, G random linear functionals and quadratic
/// trace functions (closed-form gradients).
/// Throws PreconditionError when c != 1.
CheckReport check_morphism_psi1(const Algebra& alg, const RMatrixConfig& cfg, int samples, std::uint64_t seed,
                                double tolerance);

}  // namespace toda2
