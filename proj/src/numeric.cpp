#include "toda2/numeric.hpp"

#include <algorithm>

namespace toda2 {

int numerical_rank(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  const Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  const double cut = s[0] * static_cast<double>(std::max(m.rows(), m.cols())) * rel_tol;
  int r = 0;
  while (r < s.size() && s[r] > cut) ++r;
  return r;
}

int row_normalized_rank(const Matrix& m, double rel_tol) {
  Matrix scaled = m;
  for (Eigen::Index i = 0; i < scaled.rows(); ++i) {
    const double n = scaled.row(i).norm();
    if (n > 0.0) scaled.row(i) /= n;
  }
  return numerical_rank(scaled, rel_tol);
}

Vector uniform_vector(Rng& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

}  // namespace toda2
