#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace toda2 {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Relative singular-value cutoff used for every numerical rank.
inline constexpr double kRankRelTol = 1e-10;

/// Central finite-difference step on unit-scaled coordinates.
inline constexpr double kFiniteDifferenceStep = 1e-5;

/// Numerical rank: singular values above sigma_max * k * rel_tol, where k is
/// the larger matrix dimension.
int numerical_rank(const Matrix& m, double rel_tol = kRankRelTol);

/// Same as numerical_rank after scaling every nonzero row to unit length.
/// Rank is row-scale invariant; this keeps high-degree rows from swamping
/// the cutoff.
int row_normalized_rank(const Matrix& m, double rel_tol = kRankRelTol);

using Rng = std::mt19937_64;

/// Uniform sample in [-1, 1]^n.
Vector uniform_vector(Rng& rng, Eigen::Index n);

/// Central difference gradient of a scalar function of a flat vector.
template <typename F>
Vector central_difference(const F& f, const Vector& at, double step = kFiniteDifferenceStep) {
  Vector g(at.size());
  Vector probe = at;
  for (Eigen::Index i = 0; i < at.size(); ++i) {
    probe[i] = at[i] + step;
    const double up = f(probe);
    probe[i] = at[i] - step;
    const double down = f(probe);
    probe[i] = at[i];
    g[i] = (up - down) / (2.0 * step);
  }
  return g;
}

}  // namespace toda2
