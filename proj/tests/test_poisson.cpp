#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "toda2/checks.hpp"
#include "toda2/errors.hpp"
#include "toda2/flows.hpp"
#include "toda2/invariants.hpp"
#include "toda2/poisson.hpp"

#include <cmath>

using namespace toda2;

namespace {

/// (x, y) -> Trace(a x) + Trace(b y), gradient left to central differences.
PairFunction trace_pair_functional(const Algebra& alg, const Matrix& a, const Matrix& b) {
  return {"tr", [&alg, a, b](const PairPoint& m) { return (a * alg.to_matrix(m.x)).trace() + (b * alg.to_matrix(m.y)).trace(); },
          nullptr};
}

PairFunction random_cubic(const Algebra& alg, Rng& rng) {
  const Matrix a = alg.to_matrix(uniform_vector(rng, alg.dim()));
  const Matrix b = alg.to_matrix(uniform_vector(rng, alg.dim()));
  return {"cubic",
          [&alg, a, b](const PairPoint& m) {
            const Matrix x = alg.to_matrix(m.x), y = alg.to_matrix(m.y);
            return (a * x * y * x).trace() + (b * y * y).trace() + (a * x).trace();
          },
          nullptr};
}

}  // namespace

TEST_CASE("gradient conventions on pairs") {
  const auto sl2 = Algebra::build_sl(2);
  const Matrix e = test::sl2_e(), f = test::sl2_f();
  Rng rng(1);
  const PairPoint m = test::random_pair(sl2, rng);
  // d/dx Trace(e x) is lift(e) = e; the y-slot carries a minus sign from the
  // pair form.
  const PairPoint g = gradient2(sl2, trace_pair_functional(sl2, e, f), m);
  CHECK((g.x - sl2.from_matrix(e)).norm() < 1e-9);
  CHECK((g.y + sl2.from_matrix(f)).norm() < 1e-9);

  const Vector partials = partials_from_gradient(sl2, g);
  CHECK((gradient_from_partials(sl2, partials) - g).norm() < 1e-13);

  for (int a = 0; a < 6; ++a) {
    const PairPoint c = coordinate_gradient(sl2, a);
    CHECK((partials_from_gradient(sl2, c) - Vector::Unit(6, a)).norm() < 1e-13);
  }
}

TEST_CASE("linear bracket value on sl(2) against a hand computation") {
  // With A = e and B = f, {Trace(A x), Trace(B y)} reduces to <y - x, h>.
  // At x = e + f + h/2, y = h this is 2 - 1 = 1.
  const auto sl2 = Algebra::build_sl(2);
  const PoissonBracket lin(sl2, RMatrixConfig::splitting(sl2), BracketKind::Linear);
  const Element e = sl2.from_matrix(test::sl2_e()), f = sl2.from_matrix(test::sl2_f()),
                h = sl2.from_matrix(test::sl2_h());
  const PairPoint m{e + f + 0.5 * h, h};
  const auto fa = trace_pair_functional(sl2, test::sl2_e(), Matrix::Zero(2, 2));
  const auto fb = trace_pair_functional(sl2, Matrix::Zero(2, 2), test::sl2_f());
  CHECK(lin.evaluate(fa, fb, m) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(lin.evaluate(fb, fa, m) == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("bracket axioms on random functions") {
  for (const auto& alg : {Algebra::build_sl(3), Algebra::build_gl(3)}) {
    const PoissonBracket lin(alg, RMatrixConfig::splitting(alg), BracketKind::Linear);
    Rng rng(2);
    for (int s = 0; s < 5; ++s) {
      const PairPoint m = test::random_pair(alg, rng);
      const auto f = random_cubic(alg, rng), g = random_cubic(alg, rng), k = random_cubic(alg, rng);
      CHECK(std::abs(lin.evaluate(f, f, m)) < 1e-8);
      CHECK(lin.evaluate(f, g, m) == doctest::Approx(-lin.evaluate(g, f, m)).epsilon(1e-7));
      // Leibniz: {f, g k} = {f, g} k + g {f, k}.
      const PairFunction gk{"gk", [&](const PairPoint& p) { return g.value(p) * k.value(p); }, nullptr};
      const double lhs = lin.evaluate(f, gk, m);
      const double rhs = lin.evaluate(f, g, m) * k.value(m) + g.value(m) * lin.evaluate(f, k, m);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
    const Matrix t = lin.tensor(test::random_pair(alg, rng));
    CHECK((t + t.transpose()).norm() < 1e-12);
  }
}

TEST_CASE("Jacobi identity for both brackets") {
  Rng rng(3);
  const auto sl3 = Algebra::build_sl(3);
  const PoissonBracket lin(sl3, RMatrixConfig::splitting(sl3), BracketKind::Linear);
  CHECK(jacobi_residual(lin, test::random_pair(sl3, rng)) < 1e-8);

  const auto gl2 = Algebra::build_gl(2);
  const PoissonBracket quad(gl2, RMatrixConfig::splitting(gl2), BracketKind::Quadratic);
  for (int s = 0; s < 3; ++s) CHECK(jacobi_residual(quad, test::random_pair(gl2, rng)) < 1e-8);
}

TEST_CASE("quadratic bracket needs an associative algebra") {
  const auto sl2 = Algebra::build_sl(2);
  CHECK_THROWS_AS(PoissonBracket(sl2, RMatrixConfig::splitting(sl2), BracketKind::Quadratic), CapabilityError);
  CHECK_THROWS_AS(PoissonBracket(Algebra::from_data(test::so5_data()), RMatrixConfig::splitting(sl2), BracketKind::Linear),
                  AlgebraMismatch);
}

TEST_CASE("invariants of the pencil are in involution and x - y gives Casimirs") {
  const auto gl3 = Algebra::build_gl(3);
  const auto cfg = RMatrixConfig::splitting(gl3);
  Rng rng(4);
  for (auto kind : {BracketKind::Linear, BracketKind::Quadratic}) {
    const PoissonBracket b(gl3, cfg, kind);
    for (int s = 0; s < 3; ++s) {
      const PairPoint m = test::random_pair(gl3, rng);
      for (const auto& g1 : generators(gl3))
        for (const auto& g2 : generators(gl3))
          for (double l : {0.0, 2.0, -1.0})
            for (double mu : {0.0, 2.0, -1.0})
              CHECK(std::abs(b(pencil_invariant_gradient(gl3, g1, l, m), pencil_invariant_gradient(gl3, g2, mu, m), m)) <
                    1e-9);
    }
  }
  const PoissonBracket lin(gl3, cfg, BracketKind::Linear);
  const PairPoint m = test::random_pair(gl3, rng);
  for (const auto& g : generators(gl3)) CHECK(lin.field(difference_invariant_gradient(gl3, g, m), m).norm() < 1e-10);
}

TEST_CASE("t and s fields are Hamiltonian") {
  const auto sl3 = Algebra::build_sl(3);
  const PoissonBracket lin(sl3, RMatrixConfig::splitting(sl3), BracketKind::Linear);
  Rng rng(5);
  const PhaseSpace tp = two_toda_space(sl3);
  for (int s = 0; s < 10; ++s) {
    const PairPoint m = PairPoint::from_flat(tp.random_point(rng), sl3.dim());
    const PairFunction hx{"H", [&](const PairPoint& p) { return 0.5 * sl3.form(p.x, p.x); }, nullptr};
    const PairFunction hy{"-H~", [&](const PairPoint& p) { return -0.5 * sl3.form(p.y, p.y); }, nullptr};
    CHECK((lin.field(hx, m) - field_t(sl3, m)).norm() < 1e-8);
    CHECK((lin.field(hy, m) - field_s(sl3, m)).norm() < 1e-8);
  }
}

TEST_CASE("restricted Poisson rank on the pair phase space") {
  const auto check = [](const Algebra& alg, int expected) {
    const PoissonBracket lin(alg, RMatrixConfig::splitting(alg), BracketKind::Linear);
    const int r = max_rank(lin, two_toda_space(alg), 10, 11);
    CHECK(r == expected);
    CHECK(r % 2 == 0);
  };
  check(Algebra::build_sl(2), 4);   // 3 + 1
  check(Algebra::build_sl(3), 10);  // 8 + 2
  check(Algebra::build_gl(3), 10);  // 2 (14 - 9)
  CHECK(expected_pair_rank(Algebra::build_sl(3)) == 10);
  CHECK(expected_pair_rank(Algebra::build_gl(3)) == 10);

  // Rank at the base point is just a number to report, it may drop.
  const auto sl3 = Algebra::build_sl(3);
  const PoissonBracket lin(sl3, RMatrixConfig::splitting(sl3), BracketKind::Linear);
  const PhaseSpace tp = two_toda_space(sl3);
  const int base_rank = rank_at(lin, tp, PairPoint::from_flat(tp.base(), 8));
  CHECK(base_rank <= 10);
  CHECK(base_rank % 2 == 0);
}

TEST_CASE("poisson_matrix rejects points off the space") {
  const auto sl2 = Algebra::build_sl(2);
  const PoissonBracket lin(sl2, RMatrixConfig::splitting(sl2), BracketKind::Linear);
  CHECK_THROWS_AS(poisson_matrix(lin, two_toda_space(sl2), PairPoint::zero(3)), PreconditionError);
}

TEST_CASE("Cartan factor block on sl(2)") {
  // {<h, x>, <e, x>}_R = (1/2)<x, [Rh, e] + [h, Re]> = <x, 2e>, which is 2
  // at e-coordinate one.
  const auto sl2 = Algebra::build_sl(2);
  const PhaseSpace factor = cartan_factor_space(sl2);
  REQUIRE(factor.dim() == 2);
  const Vector x = factor.point(Vector::Unit(2, 1));
  const Matrix block = factor.coords() * r_poisson_tensor(sl2, RMatrixConfig::splitting(sl2), x) * factor.coords().transpose();
  CHECK(block(0, 0) == doctest::Approx(0.0));
  CHECK(block(0, 1) == doctest::Approx(2.0));
  CHECK(block(1, 0) == doctest::Approx(-2.0));

  // sl(3): the block is -v C^T with v the root coordinates.
  const auto sl3 = Algebra::build_sl(3);
  const PhaseSpace f3 = cartan_factor_space(sl3);
  Vector z(4);
  z << 0.3, -0.2, 0.7, 1.3;
  const Matrix b3 = f3.coords() * r_poisson_tensor(sl3, RMatrixConfig::splitting(sl3), f3.point(z)) * f3.coords().transpose();
  Matrix expected = Matrix::Zero(2, 2);
  const Matrix c = sl3.cartan().cast<double>();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) expected(i, j) = c(j, i) * z[2 + j];
  CHECK((b3.topRightCorner(2, 2) - expected).norm() < 1e-12);
  CHECK(b3.topLeftCorner(2, 2).norm() < 1e-12);
  CHECK(b3.bottomRightCorner(2, 2).norm() < 1e-12);
}

TEST_CASE("rescaling the form rescales the brackets") {
  const auto sl3 = Algebra::build_sl(3);
  const auto sl3s = sl3.with_form_scale(2.0);
  const PoissonBracket a(sl3, RMatrixConfig::splitting(sl3), BracketKind::Linear);
  const PoissonBracket b(sl3s, RMatrixConfig::splitting(sl3s), BracketKind::Linear);
  Rng rng(6);
  const PairPoint m = test::random_pair(sl3, rng);
  CHECK((b.tensor(m) - 0.5 * a.tensor(m)).norm() < 1e-12);
}

TEST_CASE("difference map is a Poisson morphism") {
  const auto sl3 = Algebra::build_sl(3);
  const auto rep = check_morphism_psi1(sl3, RMatrixConfig::splitting(sl3), 20, 9, 1e-8);
  CHECK(rep.pass);
  auto cfg = RMatrixConfig::splitting(sl3);
  cfg.c = 2.0;
  CHECK_THROWS_AS(check_morphism_psi1(sl3, cfg, 20, 9, 1e-8), PreconditionError);
}

TEST_CASE("family fields are tangent to the pair phase space") {
  for (const auto& alg : {Algebra::build_sl(3), Algebra::build_gl(3)}) {
    const PoissonBracket lin(alg, RMatrixConfig::splitting(alg), BracketKind::Linear);
    const PhaseSpace tp = two_toda_space(alg);
    Rng rng(7);
    const PairPoint m = PairPoint::from_flat(tp.random_point(rng), alg.dim());
    for (const auto& g : family_gradients(alg, m)) CHECK(tp.normal_component(lin.field(g, m).flat()).norm() < 1e-10);
    CHECK(submanifold_defect(lin.tensor(m), tp) < 1e-10);
  }
}

TEST_CASE("pullback gradient along x - y") {
  // For F(w) = Trace(A w B w)/2 the pair gradient of F(x - y) is (g, g) with
  // g = lift((A w B + B w A)/2); checked here against central differences.
  const auto sl3 = Algebra::build_sl(3);
  Rng rng(12);
  const Matrix a = sl3.to_matrix(uniform_vector(rng, 8)), b = sl3.to_matrix(uniform_vector(rng, 8));
  const PairFunction f{"q",
                       [&](const PairPoint& p) {
                         const Matrix w = sl3.to_matrix(p.x - p.y);
                         return 0.5 * (a * w * b * w).trace();
                       },
                       nullptr};
  const PairPoint m = test::random_pair(sl3, rng);
  const Matrix w = sl3.to_matrix(m.x - m.y);
  const Element g = sl3.lift(0.5 * (a * w * b + b * w * a));
  CHECK((gradient2(sl3, f, m) - PairPoint{g, g}).norm() < 1e-8);
}
