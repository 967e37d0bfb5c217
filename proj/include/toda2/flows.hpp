#pragma once

#include "toda2/algebra.hpp"
#include "toda2/phase_space.hpp"
#include "toda2/rmatrix.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace toda2 {

using PairField = std::function<PairPoint(const PairPoint&)>;

/// ([L+, L], [L+, M]) at m = (L, M), L+ the degree >= 0 part.
PairPoint field_t(const Algebra& alg, const PairPoint& m);
/// ([M-, L], [M-, M]), M- the degree < 0 part.
PairPoint field_s(const Algebra& alg, const PairPoint& m);
/// [A+, A] on the algebra.
Element field_toda(const Algebra& alg, const Element& a);
/// -[m, ((R - I) W, (R + I) W)] with W = (lambda x - y)^{i+1}; the quadratic
/// Hamiltonian field of P_i o (lambda x - y). Needs an associative algebra.
PairPoint field_quadratic(const Algebra& alg, int i, double lambda, const PairPoint& m);
/// Linear Hamiltonian field of P_i o (lambda x - y), P_i = Trace(x^{i+1})/(i+1).
PairPoint field_linear(const Algebra& alg, int i, double lambda, const PairPoint& m);

enum class FieldKind { T, S, Toda, Quadratic, Linear };
FieldKind parse_field_kind(const std::string& name);
std::string to_string(FieldKind kind);

struct FlowConfig {
  FieldKind field = FieldKind::T;
  int i = 1;
  double lambda = 0.0;
  double dt = 1e-3;
  double horizon = 1.0;

  /// Throws PreconditionError unless dt > 0 and horizon >= dt.
  void validate() const;
};

/// Field for the configuration. The Toda selector acts componentwise,
/// ([x+, x], [y+, y]), and agrees with the t-field on the diagonal.
PairField make_field(const Algebra& alg, const FlowConfig& cfg);

/// Classical fourth-order Runge-Kutta step.
PairPoint rk4_step(const PairField& f, const PairPoint& m, double dt);

struct Trajectory {
  std::vector<double> times;
  std::vector<PairPoint> states;
  /// Row k holds the family values at times[k].
  Matrix conserved;
  std::vector<std::string> conserved_names;
  bool truncated = false;
  std::string diagnostic;
};

/// Fixed-step RK4 from m0 up to the horizon. Stops early (truncated) if the
/// state stops being finite.
Trajectory integrate(const Algebra& alg, const FlowConfig& cfg, const PairPoint& m0);
Trajectory integrate(const Algebra& alg, const PairField& field, double dt, double horizon, const PairPoint& m0);

/// Max over members and times of |F(t) - F(0)| / max(|F(0)|, 1).
double conservation_drift(const Trajectory& traj);
/// Max over times and the given lambda0 of the Hausdorff distance between
/// the spectra of lambda0 L - M at time t and at time 0.
double eigenvalue_drift(const Algebra& alg, const Trajectory& traj, const std::vector<double>& lambdas);
/// Max distance of the states to the phase space.
double tangency_drift(const PhaseSpace& ps, const Trajectory& traj);

/// || A^n B^n m0 - B^n A^n m0 || for the RK4 maps of two fields.
double flow_commutation(const PairField& a, const PairField& b, const PairPoint& m0, double dt, int steps);
/// Same for the t- and s-fields.
double flow_commutation(const Algebra& alg, const PairPoint& m0, double dt, int steps);

/// CSV with header t,x_1..x_dim,y_1..y_dim,<family names>; 17 significant digits.
void write_csv(std::ostream& os, const Trajectory& traj);

}  // namespace toda2
