#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "toda2/errors.hpp"
#include "toda2/rmatrix.hpp"

using namespace toda2;

namespace {

bool in_minus_plus(const Algebra& alg, const PairPoint& p) {
  return alg.project(p.x, DegreeRegion::at_least(0)).norm() < 1e-14 &&
         alg.project(p.y, DegreeRegion::below(0)).norm() < 1e-14;
}

}  // namespace

TEST_CASE("splitting R acts as +1 on degrees >= 0 and -1 below") {
  const auto sl3 = Algebra::build_sl(3);
  Rng rng(1);
  const Element x = uniform_vector(rng, sl3.dim());
  const Element xp = sl3.project(x, DegreeRegion::at_least(0)), xm = sl3.project(x, DegreeRegion::below(0));
  CHECK(r_apply(sl3, xp) == xp);
  CHECK(r_apply(sl3, xm) == -xm);
  CHECK((r_apply(sl3, r_apply(sl3, x)) - x).norm() < 1e-13);
  const auto cfg = RMatrixConfig::splitting(sl3);
  CHECK((r_apply(cfg, x) - r_apply(sl3, x)).norm() == 0.0);
}

TEST_CASE("pair map on the diagonal and on the sl(2) triple") {
  const auto sl2 = Algebra::build_sl(2);
  const auto cfg = RMatrixConfig::splitting(sl2);
  Rng rng(2);
  const Element x = uniform_vector(rng, 3);
  const PairPoint d = rr_apply(cfg, PairPoint::diagonal(x));
  CHECK((d.x - x).norm() < 1e-15);
  CHECK((d.y - x).norm() < 1e-15);

  // With Re = e and Rf = -f: R(e - f) = e + f, so the image is
  // (e + f + f, e + f + e).
  const Element e = sl2.from_matrix(test::sl2_e()), f = sl2.from_matrix(test::sl2_f());
  const PairPoint r = rr_apply(cfg, PairPoint{e, f});
  CHECK((r.x - (e + 2.0 * f)).norm() < 1e-15);
  CHECK((r.y - (2.0 * e + f)).norm() < 1e-15);
}

TEST_CASE("pair map agrees with the componentwise splitting formula") {
  const auto gl3 = Algebra::build_gl(3);
  const auto cfg = RMatrixConfig::splitting(gl3);
  Rng rng(3);
  for (int s = 0; s < 20; ++s) {
    const PairPoint p = test::random_pair(gl3, rng);
    const auto plus = [&](const Element& v) { return gl3.project(v, DegreeRegion::at_least(0)); };
    const auto minus = [&](const Element& v) { return gl3.project(v, DegreeRegion::below(0)); };
    const PairPoint expected{plus(p.x) - minus(p.x) + 2.0 * minus(p.y), minus(p.y) - plus(p.y) + 2.0 * plus(p.x)};
    CHECK((rr_apply(cfg, p) - expected).norm() < 1e-13);
    const auto parts = decompose_pair(gl3, p);
    CHECK((rr_apply(cfg, p) - (parts.plus - parts.minus)).norm() < 1e-13);
  }
}

TEST_CASE("pair decomposition") {
  const auto gl3 = Algebra::build_gl(3);
  Rng rng(4);
  const Element x = gl3.project(uniform_vector(rng, gl3.dim()), DegreeRegion::at_least(0));
  auto parts = decompose_pair(gl3, PairPoint::diagonal(x));
  CHECK((parts.plus - PairPoint::diagonal(x)).norm() == 0.0);
  CHECK(parts.minus.norm() == 0.0);

  const Element y = uniform_vector(rng, gl3.dim());
  parts = decompose_pair(gl3, PairPoint{gl3.zero(), y});
  const Element yp = gl3.project(y, DegreeRegion::at_least(0)), ym = gl3.project(y, DegreeRegion::below(0));
  CHECK((parts.plus - PairPoint{ym, ym}).norm() == 0.0);
  CHECK((parts.minus - PairPoint{-ym, yp}).norm() == 0.0);

  for (int s = 0; s < 20; ++s) {
    const PairPoint p = test::random_pair(gl3, rng);
    const auto d = decompose_pair(gl3, p);
    CHECK((d.plus + d.minus - p).norm() < 1e-13);
    CHECK(d.plus.x == d.plus.y);
    CHECK(in_minus_plus(gl3, d.minus));
  }
}

TEST_CASE("B tensor of the splitting solves the modified Yang-Baxter equation") {
  const auto sl3 = Algebra::build_sl(3);
  const auto cfg = RMatrixConfig::splitting(sl3);
  Rng rng(5);
  for (int s = 0; s < 20; ++s) {
    const Element x = uniform_vector(rng, 8), y = uniform_vector(rng, 8);
    CHECK((b_tensor(sl3, cfg, x, y) + sl3.bracket(x, y)).norm() < 1e-11);
    CHECK(b_tensor(sl3, cfg, x, x).norm() < 1e-13);
    CHECK((b_tensor(sl3, cfg, x, y) + b_tensor(sl3, cfg, y, x)).norm() < 1e-13);
    const PairPoint p = test::random_pair(sl3, rng), q = test::random_pair(sl3, rng);
    CHECK((b_tensor_pair(sl3, cfg, p, q) + pair_bracket(sl3, p, q)).norm() < 1e-11);
  }
}

TEST_CASE("mCYBE checker verdicts") {
  const auto sl3 = Algebra::build_sl(3);
  const auto split = check_mcybe(sl3, RMatrixConfig::splitting(sl3), 100, 42, 1e-11, false);
  CHECK(split.pass);
  CHECK(split.measured < 1e-11);
  CHECK(check_mcybe(sl3, RMatrixConfig::splitting(sl3), 100, 42, 1e-11, true).pass);

  // B_id(x, y) = [x, y] - 2[x, y] = -[x, y].
  const auto identity = check_mcybe(sl3, RMatrixConfig::custom(Matrix::Identity(8, 8)), 50, 1, 1e-11, false);
  CHECK(identity.pass);
  CHECK(identity.measured == 0.0);

  const auto zero = check_mcybe(sl3, RMatrixConfig::custom(Matrix::Zero(8, 8)), 50, 1, 1e-11, false);
  CHECK_FALSE(zero.pass);

  CHECK_THROWS_AS(check_mcybe(sl3, RMatrixConfig::splitting(sl3), 0, 1, 1e-11, false), PreconditionError);
}

TEST_CASE("mCYBE on gl(n) is checked modulo the scalars") {
  const auto gl3 = Algebra::build_gl(3);
  // Add a map into the center: B changes by central terms only.
  RMatrixConfig cfg = RMatrixConfig::splitting(gl3);
  const Element id = gl3.from_matrix(Matrix::Identity(3, 3));
  Rng rng(6);
  cfg.r += id * uniform_vector(rng, gl3.dim()).transpose();
  const auto r = check_mcybe(gl3, cfg, 50, 7, 1e-10, false);
  CHECK(r.pass);
  CHECK(residual_mod_center(gl3, id) < 1e-14);
}

TEST_CASE("R-brackets") {
  const auto sl2 = Algebra::build_sl(2);
  const auto cfg2 = RMatrixConfig::splitting(sl2);
  const Element e = sl2.from_matrix(test::sl2_e()), f = sl2.from_matrix(test::sl2_f());
  CHECK(r_bracket(sl2, cfg2, e, e).norm() == 0.0);
  CHECK(r_bracket(sl2, cfg2, e, f).norm() < 1e-15);

  const auto gl3 = Algebra::build_gl(3);
  const auto cfg = RMatrixConfig::splitting(gl3);
  Rng rng(7);
  for (int s = 0; s < 20; ++s) {
    const PairPoint p = test::random_pair(gl3, rng), q = test::random_pair(gl3, rng), r = test::random_pair(gl3, rng);
    const PairPoint jac = rr_bracket(gl3, cfg, rr_bracket(gl3, cfg, p, q), r) +
                          rr_bracket(gl3, cfg, rr_bracket(gl3, cfg, q, r), p) +
                          rr_bracket(gl3, cfg, rr_bracket(gl3, cfg, r, p), q);
    CHECK(jac.norm() < 1e-11);
    CHECK((rr_bracket(gl3, cfg, p, q) + rr_bracket(gl3, cfg, q, p)).norm() < 1e-14);
  }
}

TEST_CASE("diagonal and g_- x g_+ are closed under the pair R-bracket") {
  const auto sl3 = Algebra::build_sl(3);
  const auto cfg = RMatrixConfig::splitting(sl3);
  Rng rng(8);
  for (int s = 0; s < 20; ++s) {
    const PairPoint a = PairPoint::diagonal(uniform_vector(rng, 8)), b = PairPoint::diagonal(uniform_vector(rng, 8));
    const PairPoint d = rr_bracket(sl3, cfg, a, b);
    CHECK((d.x - d.y).norm() < 1e-14);

    const auto mp = [&](const PairPoint& p) { return decompose_pair(sl3, p).minus; };
    const PairPoint u = mp(test::random_pair(sl3, rng)), v = mp(test::random_pair(sl3, rng));
    CHECK(in_minus_plus(sl3, rr_bracket(sl3, cfg, u, v)));
  }
}

TEST_CASE("pair form and flat layout") {
  const auto sl3 = Algebra::build_sl(3);
  Rng rng(9);
  const PairPoint p = test::random_pair(sl3, rng), q = test::random_pair(sl3, rng);
  CHECK(pair_form(sl3, p, q) == doctest::Approx(sl3.form(p.x, q.x) - sl3.form(p.y, q.y)));
  const PairPoint back = PairPoint::from_flat(p.flat(), 8);
  CHECK(back.x == p.x);
  CHECK(back.y == p.y);
  CHECK_THROWS_AS(PairPoint::from_flat(p.flat(), 7), AlgebraMismatch);
  CHECK_THROWS_AS(r_apply(RMatrixConfig::splitting(sl3), Element::Zero(3)), AlgebraMismatch);
}
