#include "toda2/flows.hpp"

#include "toda2/errors.hpp"
#include "toda2/invariants.hpp"
#include "toda2/poisson.hpp"

#include <algorithm>
#include <complex>
#include <iomanip>
#include <ostream>

namespace toda2 {

PairPoint field_t(const Algebra& alg, const PairPoint& m) {
  const Element lp = alg.project(m.x, DegreeRegion::at_least(0));
  return {alg.bracket(lp, m.x), alg.bracket(lp, m.y)};
}

PairPoint field_s(const Algebra& alg, const PairPoint& m) {
  const Element mm = alg.project(m.y, DegreeRegion::below(0));
  return {alg.bracket(mm, m.x), alg.bracket(mm, m.y)};
}

Element field_toda(const Algebra& alg, const Element& a) {
  return alg.bracket(alg.project(a, DegreeRegion::at_least(0)), a);
}

PairPoint field_quadratic(const Algebra& alg, int i, double lambda, const PairPoint& m) {
  if (!alg.associative()) throw CapabilityError("quadratic field needs an associative algebra; " + alg.name() + " is not");
  if (i < 0) throw PreconditionError("generator index must be nonnegative");
  const Matrix w = lambda * alg.to_matrix(m.x) - alg.to_matrix(m.y);
  Matrix p = Matrix::Identity(w.rows(), w.cols());
  for (int k = 0; k <= i; ++k) p = p * w;
  const Element we = alg.from_matrix(p);
  const Element rw = r_apply(alg, we);
  return -1.0 * pair_bracket(alg, m, PairPoint{rw - we, rw + we});
}

PairPoint field_linear(const Algebra& alg, int i, double lambda, const PairPoint& m) {
  const AlgebraFunction p = trace_invariant(alg, i);
  return pencil_field(alg, RMatrixConfig::splitting(alg), m, lambda, p.gradient(lambda * m.x - m.y));
}

FieldKind parse_field_kind(const std::string& name) {
  if (name == "t") return FieldKind::T;
  if (name == "s") return FieldKind::S;
  if (name == "toda") return FieldKind::Toda;
  if (name == "quadratic") return FieldKind::Quadratic;
  if (name == "linear") return FieldKind::Linear;
  throw PreconditionError("unknown field '" + name + "' (expected t, s, toda, quadratic or linear)");
}

std::string to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::T: return "t";
    case FieldKind::S: return "s";
    case FieldKind::Toda: return "toda";
    case FieldKind::Quadratic: return "quadratic";
    case FieldKind::Linear: return "linear";
  }
  return "?";
}

void FlowConfig::validate() const {
  if (!(dt > 0.0)) throw PreconditionError("dt must be positive");
  if (!(horizon >= dt)) throw PreconditionError("horizon must be at least dt");
}

PairField make_field(const Algebra& alg, const FlowConfig& cfg) {
  switch (cfg.field) {
    case FieldKind::T: return [&alg](const PairPoint& m) { return field_t(alg, m); };
    case FieldKind::S: return [&alg](const PairPoint& m) { return field_s(alg, m); };
    case FieldKind::Toda:
      return [&alg](const PairPoint& m) { return PairPoint{field_toda(alg, m.x), field_toda(alg, m.y)}; };
    case FieldKind::Quadratic:
      if (!alg.associative()) throw CapabilityError("quadratic field needs an associative algebra");
      return [&alg, i = cfg.i, l = cfg.lambda](const PairPoint& m) { return field_quadratic(alg, i, l, m); };
    case FieldKind::Linear:
      return [&alg, i = cfg.i, l = cfg.lambda](const PairPoint& m) { return field_linear(alg, i, l, m); };
  }
  throw PreconditionError("unhandled field kind");
}

PairPoint rk4_step(const PairField& f, const PairPoint& m, double dt) {
  const PairPoint k1 = f(m);
  const PairPoint k2 = f(m + (0.5 * dt) * k1);
  const PairPoint k3 = f(m + (0.5 * dt) * k2);
  const PairPoint k4 = f(m + dt * k3);
  return m + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory integrate(const Algebra& alg, const FlowConfig& cfg, const PairPoint& m0) {
  cfg.validate();
  return integrate(alg, make_field(alg, cfg), cfg.dt, cfg.horizon, m0);
}

Trajectory integrate(const Algebra& alg, const PairField& field, double dt, double horizon, const PairPoint& m0) {
  FlowConfig{FieldKind::T, 1, 0.0, dt, horizon}.validate();
  const auto steps = static_cast<long>(std::llround(horizon / dt));
  Trajectory traj;
  for (const auto& f : family(alg)) traj.conserved_names.push_back(f.name);
  std::vector<Vector> values;
  PairPoint m = m0;
  traj.times.push_back(0.0);
  traj.states.push_back(m);
  values.push_back(family_values(alg, m));
  for (long k = 1; k <= steps; ++k) {
    m = rk4_step(field, m, dt);
    if (!m.x.allFinite() || !m.y.allFinite()) {
      traj.truncated = true;
      traj.diagnostic = "state became non-finite at step " + std::to_string(k);
      break;
    }
    traj.times.push_back(static_cast<double>(k) * dt);
    traj.states.push_back(m);
    values.push_back(family_values(alg, m));
  }
  traj.conserved.resize(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(traj.conserved_names.size()));
  for (std::size_t r = 0; r < values.size(); ++r) traj.conserved.row(static_cast<Eigen::Index>(r)) = values[r].transpose();
  return traj;
}

double conservation_drift(const Trajectory& traj) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < traj.conserved.cols(); ++c) {
    const double f0 = traj.conserved(0, c);
    const double scale = std::max(std::abs(f0), 1.0);
    for (Eigen::Index r = 1; r < traj.conserved.rows(); ++r)
      worst = std::max(worst, std::abs(traj.conserved(r, c) - f0) / scale);
  }
  return worst;
}

namespace {

using Spectrum = Eigen::VectorXcd;

double directed_distance(const Spectrum& a, const Spectrum& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < b.size(); ++j) best = std::min(best, std::abs(a[i] - b[j]));
    worst = std::max(worst, best);
  }
  return worst;
}

Spectrum pencil_spectrum(const Algebra& alg, const PairPoint& m, double lambda) {
  const Matrix p = lambda * alg.to_matrix(m.x) - alg.to_matrix(m.y);
  return Eigen::EigenSolver<Matrix>(p, false).eigenvalues();
}

}  // namespace

double eigenvalue_drift(const Algebra& alg, const Trajectory& traj, const std::vector<double>& lambdas) {
  double worst = 0.0;
  for (double l : lambdas) {
    const Spectrum s0 = pencil_spectrum(alg, traj.states.front(), l);
    for (std::size_t k = 1; k < traj.states.size(); ++k) {
      const Spectrum s = pencil_spectrum(alg, traj.states[k], l);
      worst = std::max({worst, directed_distance(s, s0), directed_distance(s0, s)});
    }
  }
  return worst;
}

double tangency_drift(const PhaseSpace& ps, const Trajectory& traj) {
  double worst = 0.0;
  for (const auto& m : traj.states) worst = std::max(worst, ps.normal_residual(m.flat()));
  return worst;
}

double flow_commutation(const PairField& a, const PairField& b, const PairPoint& m0, double dt, int steps) {
  auto run = [dt, steps](const PairField& f, PairPoint m) {
    for (int k = 0; k < steps; ++k) m = rk4_step(f, m, dt);
    return m;
  };
  return (run(a, run(b, m0)) - run(b, run(a, m0))).norm();
}

double flow_commutation(const Algebra& alg, const PairPoint& m0, double dt, int steps) {
  return flow_commutation([&alg](const PairPoint& m) { return field_t(alg, m); },
                          [&alg](const PairPoint& m) { return field_s(alg, m); }, m0, dt, steps);
}

void write_csv(std::ostream& os, const Trajectory& traj) {
  const auto dim = traj.states.empty() ? 0 : traj.states.front().x.size();
  os << "t";
  for (Eigen::Index a = 1; a <= dim; ++a) os << ",x_" << a;
  for (Eigen::Index a = 1; a <= dim; ++a) os << ",y_" << a;
  for (const auto& n : traj.conserved_names) os << "," << n;
  os << "\n" << std::setprecision(17);
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    os << traj.times[k];
    for (Eigen::Index a = 0; a < dim; ++a) os << "," << traj.states[k].x[a];
    for (Eigen::Index a = 0; a < dim; ++a) os << "," << traj.states[k].y[a];
    for (Eigen::Index c = 0; c < traj.conserved.cols(); ++c) os << "," << traj.conserved(static_cast<Eigen::Index>(k), c);
    os << "\n";
  }
}

}  // namespace toda2
