#pragma once

#include "toda2/algebra.hpp"
#include "toda2/rmatrix.hpp"

#include <optional>
#include <string>

namespace toda2 {

/// Affine subspace base + span(tangent) of an ambient coordinate space
/// (the algebra itself, or stacked pair coordinates [x; y]).
///
/// `coords` holds one row per coordinate function z_a(m) = coords.row(a) (m - base).
/// By default these are the dual basis of the tangent columns; custom rows
/// only need coords * tangent to be invertible.
class PhaseSpace {
public:
  PhaseSpace(std::string name, Vector base, Matrix tangent, std::optional<Matrix> coords = std::nullopt);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(tangent_.cols()); }
  int ambient_dim() const { return static_cast<int>(base_.size()); }
  const Vector& base() const { return base_; }
  const Matrix& tangent() const { return tangent_; }
  const Matrix& coords() const { return coords_; }

  /// Point with coordinate values z.
  Vector point(const Vector& z) const;
  Vector coordinates(const Vector& m) const;
  /// Distance from m to the affine subspace.
  double normal_residual(const Vector& m) const;
  /// Component of an ambient vector orthogonal to the tangent space.
  Vector normal_component(const Vector& v) const;
  bool contains(const Vector& m, double tol = 1e-10) const { return normal_residual(m) < tol; }
  /// Point whose coordinates are uniform in [-1, 1].
  Vector random_point(Rng& rng) const;

private:
  std::string name_;
  Vector base_;
  Matrix tangent_;
  Matrix coords_;
  Matrix tangent_pinv_;
  Matrix coord_to_tangent_;  // (coords * tangent)^{-1}
};

/// Pair phase space (e, 0) + g_{<=0} x g_{>=-1}.
PhaseSpace two_toda_space(const Algebra& alg);
/// Toda phase space e + g_{-1} + g_0 inside the algebra.
PhaseSpace toda_space(const Algebra& alg);
/// Its diagonal image (e, e) + {(v, v) : v in g_{-1} + g_0}.
PhaseSpace toda_diagonal_space(const Algebra& alg);

/// Simple-root data: for each degree-1 basis vector e_i, the degree -1 basis
/// vector f_i pairing with it and the coroot h_i = c [e_i, f_i] normalized by
/// [h_i, e_i] = 2 e_i.
struct SimpleRootData {
  std::vector<Element> e;
  std::vector<Element> f;
  std::vector<Element> h;
};
SimpleRootData simple_roots(const Algebra& alg);

/// Factor g_{-1} + span(h_i) through the origin with coordinates
/// z_i = <h_i, x>, z_{r+i} = <e_i, x> (r simple roots).
PhaseSpace cartan_factor_space(const Algebra& alg);

}  // namespace toda2
