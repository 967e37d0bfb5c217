#pragma once

#include "toda2/algebra.hpp"
#include "toda2/report.hpp"

#include <cmath>
#include <optional>

namespace toda2 {

/// Element (x, y) of the product algebra.
struct PairPoint {
  Element x;
  Element y;

  /// Stacked coordinates [x; y].
  Vector flat() const;
  static PairPoint from_flat(const Vector& v, int dim);
  static PairPoint zero(int dim) { return {Element::Zero(dim), Element::Zero(dim)}; }
  static PairPoint diagonal(const Element& x) { return {x, x}; }

  double norm() const { return std::sqrt(x.squaredNorm() + y.squaredNorm()); }

  PairPoint operator+(const PairPoint& o) const { return {x + o.x, y + o.y}; }
  PairPoint operator-(const PairPoint& o) const { return {x - o.x, y - o.y}; }
  PairPoint operator*(double s) const { return {s * x, s * y}; }
};

inline PairPoint operator*(double s, const PairPoint& p) { return p * s; }

/// Endomorphism R of the algebra together with the constant c of the induced
/// map on pairs.
struct RMatrixConfig {
  double c = 1.0;
  Matrix r;
  /// Set when r is the splitting P_plus - P_minus for this degree region.
  std::optional<DegreeRegion> plus;

  /// R = P_plus - P_minus with plus = degrees in `plus_region`, minus its
  /// complement.
  static RMatrixConfig splitting(const Algebra& alg, DegreeRegion plus_region = DegreeRegion::at_least(0),
                                 double c = 1.0);
  static RMatrixConfig custom(Matrix r, double c = 1.0);
};

Element r_apply(const RMatrixConfig& cfg, const Element& x);
/// Splitting R = P_{>=0} - P_{<0}.
Element r_apply(const Algebra& alg, const Element& x);

/// (R(x-y) + c y, R(x-y) + c x).
PairPoint rr_apply(const RMatrixConfig& cfg, const PairPoint& p);

struct PairDecomposition {
  PairPoint plus;   // diagonal part (x_+ + y_-, x_+ + y_-)
  PairPoint minus;  // (x_- - y_-, y_+ - x_+), in g_- x g_+
};
PairDecomposition decompose_pair(const Algebra& alg, const PairPoint& p,
                                 DegreeRegion plus_region = DegreeRegion::at_least(0));

PairPoint pair_bracket(const Algebra& alg, const PairPoint& p, const PairPoint& q);
/// <x1,x2> - <y1,y2>.
double pair_form(const Algebra& alg, const PairPoint& p, const PairPoint& q);

/// [Rx,Ry] - R([Rx,y] + [x,Ry]).
Element b_tensor(const Algebra& alg, const RMatrixConfig& cfg, const Element& x, const Element& y);
/// Same expression on the product algebra with R replaced by the pair map.
PairPoint b_tensor_pair(const Algebra& alg, const RMatrixConfig& cfg, const PairPoint& p, const PairPoint& q);

/// (1/2)([Rx,y] + [x,Ry]).
Element r_bracket(const Algebra& alg, const RMatrixConfig& cfg, const Element& x, const Element& y);
PairPoint rr_bracket(const Algebra& alg, const RMatrixConfig& cfg, const PairPoint& p, const PairPoint& q);

/// Norm of the component of x orthogonal (in coordinates) to the center.
double residual_mod_center(const Algebra& alg, const Element& x);

/// Max over seeded samples of the distance from B(x,y) + c^2 [x,y] to the
/// center. `on_pairs` selects the product-algebra version.
CheckReport check_mcybe(const Algebra& alg, const RMatrixConfig& cfg, int samples, std::uint64_t seed,
                        double tolerance, bool on_pairs);

}  // namespace toda2
