#include "toda2/checks.hpp"

#include "toda2/errors.hpp"
#include "toda2/flows.hpp"
#include "toda2/invariants.hpp"
#include "toda2/phase_space.hpp"
#include "toda2/poisson.hpp"
#include "toda2/rmatrix.hpp"
#include "toda2/toda.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace toda2 {

namespace {

constexpr int kRankPoints = 25;

RunInfo info(const Algebra& alg, const CheckOptions& opts, std::string bracket = "-") {
  return RunInfo{alg.name(), std::move(bracket), opts.samples, opts.seed};
}

std::vector<PairPoint> sample_space(const Algebra& alg, const PhaseSpace& ps, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PairPoint> out;
  for (int k = 0; k < count; ++k) out.push_back(PairPoint::from_flat(ps.random_point(rng), alg.dim()));
  return out;
}

std::vector<PairPoint> sample_pairs(const Algebra& alg, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PairPoint> out;
  for (int k = 0; k < count; ++k) {
    Element x = uniform_vector(rng, alg.dim());
    Element y = uniform_vector(rng, alg.dim());
    out.push_back({std::move(x), std::move(y)});
  }
  return out;
}

bool centerless(const Algebra& alg) { return alg.center().cols() == 0; }

int family_card(const Algebra& alg) { return static_cast<int>(family(alg).size()); }

int expected_card(const Algebra& alg) {
  if (centerless(alg)) return (alg.dim() + 3 * alg.rank()) / 2;
  if (alg.data().n && alg.associative()) {
    const int n = *alg.data().n;
    return n * (n + 3) / 2;
  }
  return family_card(alg);
}

std::vector<BracketKind> brackets_for(const Algebra& alg) {
  if (alg.associative()) return {BracketKind::Linear, BracketKind::Quadratic};
  return {BracketKind::Linear};
}

std::vector<CheckReport> with_tol(std::vector<CheckReport> reports, const CheckOptions& opts) {
  if (!opts.tol) return reports;
  for (auto& r : reports)
    if (r.comparison == CheckReport::Comparison::Less)
      r = CheckReport::residual(r.id, r.claim, r.run, r.measured, *opts.tol, r.note);
  return reports;
}

double max_field_diff(const std::vector<PairPoint>& points, const std::function<PairPoint(const PairPoint&)>& a,
                      const std::function<PairPoint(const PairPoint&)>& b) {
  double worst = 0.0;
  for (const auto& m : points) worst = std::max(worst, (a(m) - b(m)).norm());
  return worst;
}

}  // namespace

int expected_pair_rank(const Algebra& alg) {
  if (centerless(alg)) return alg.dim() + alg.rank();
  return 2 * (two_toda_space(alg).dim() - expected_card(alg));
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"mcybe", "jacobi", "involutivity", "casimir", "morphism",
                                              "independence", "rank", "rais", "fields", "quadratic-relations",
                                              "toda", "flows"};
  return names;
}

std::vector<CheckReport> check_mcybe_family(const Algebra& alg, const CheckOptions& opts) {
  const RMatrixConfig cfg = RMatrixConfig::splitting(alg);
  return with_tol({check_mcybe(alg, cfg, opts.samples, opts.seed, 1e-11, false),
                   check_mcybe(alg, cfg, opts.samples, opts.seed, 1e-11, true)},
                  opts);
}

std::vector<CheckReport> check_jacobi(const Algebra& alg, const CheckOptions& opts) {
  const RMatrixConfig cfg = RMatrixConfig::splitting(alg);
  std::vector<CheckReport> out;

  Rng rng(opts.seed);
  double lie = 0.0;
  for (int s = 0; s < opts.samples; ++s) {
    const PairPoint p{uniform_vector(rng, alg.dim()), uniform_vector(rng, alg.dim())};
    const PairPoint q{uniform_vector(rng, alg.dim()), uniform_vector(rng, alg.dim())};
    const PairPoint r{uniform_vector(rng, alg.dim()), uniform_vector(rng, alg.dim())};
    const PairPoint j = rr_bracket(alg, cfg, rr_bracket(alg, cfg, p, q), r) +
                        rr_bracket(alg, cfg, rr_bracket(alg, cfg, q, r), p) +
                        rr_bracket(alg, cfg, rr_bracket(alg, cfg, r, p), q);
    lie = std::max(lie, j.norm());
  }
  out.push_back(CheckReport::residual("jacobi.rbracket", "the pair R-bracket satisfies the Jacobi identity",
                                      info(alg, opts, "pair"), lie, 1e-11));

  const auto points = sample_pairs(alg, std::max(1, opts.samples / 4), opts.seed + 1);
  for (BracketKind kind : brackets_for(alg)) {
    const PoissonBracket bracket(alg, cfg, kind);
    double worst = 0.0;
    for (const auto& m : points) worst = std::max(worst, jacobi_residual(bracket, m));
    RunInfo run = info(alg, opts, to_string(kind));
    run.samples = static_cast<int>(points.size());
    out.push_back(CheckReport::residual("jacobi." + to_string(kind), "the Poisson bracket satisfies the Jacobi identity",
                                        run, worst, 1e-9));
  }
  return with_tol(out, opts);
}

std::vector<CheckReport> check_involutivity(const Algebra& alg, const CheckOptions& opts) {
  const RMatrixConfig cfg = RMatrixConfig::splitting(alg);
  const PhaseSpace tp = two_toda_space(alg);
  const auto points = sample_space(alg, tp, opts.samples, opts.seed);
  const auto ambient = sample_pairs(alg, opts.samples, opts.seed + 7);
  const auto gens = generators(alg);
  const std::vector<double> lambdas{0.0, 0.5, 1.0, 2.0, -1.0};
  std::vector<CheckReport> out;
  for (BracketKind kind : brackets_for(alg)) {
    const PoissonBracket bracket(alg, cfg, kind);
    double worst = 0.0;
    for (const auto& m : points) {
      const auto grads = family_gradients(alg, m);
      for (std::size_t a = 0; a < grads.size(); ++a)
        for (std::size_t b = a + 1; b < grads.size(); ++b) worst = std::max(worst, std::abs(bracket(grads[a], grads[b], m)));
    }
    out.push_back(CheckReport::residual("involutivity." + to_string(kind), "the family is involutive on T_P",
                                        info(alg, opts, to_string(kind)), worst, 1e-8));

    double pencil = 0.0;
    for (const auto& m : ambient)
      for (const auto& gi : gens)
        for (const auto& gj : gens)
          for (double l : lambdas)
            for (double g : lambdas)
              pencil = std::max(pencil, std::abs(bracket(pencil_invariant_gradient(alg, gi, l, m),
                                                         pencil_invariant_gradient(alg, gj, g, m), m)));
    out.push_back(CheckReport::residual("involutivity.pencil." + to_string(kind),
                                        "invariants of lambda x - y commute for all lambda",
                                        info(alg, opts, to_string(kind)), pencil, 1e-8));
  }
  return with_tol(out, opts);
}

std::vector<CheckReport> check_casimir(const Algebra& alg, const CheckOptions& opts) {
  const PoissonBracket bracket(alg, RMatrixConfig::splitting(alg), BracketKind::Linear);
  double worst = 0.0;
  for (const auto& m : sample_pairs(alg, opts.samples, opts.seed))
    for (const auto& g : generators(alg))
      worst = std::max(worst, bracket.field(difference_invariant_gradient(alg, g, m), m).norm());
  return with_tol({CheckReport::residual("casimir", "invariants of x - y have vanishing Hamiltonian fields",
                                         info(alg, opts, "linear"), worst, 1e-9)},
                  opts);
}

std::vector<CheckReport> check_morphism(const Algebra& alg, const CheckOptions& opts) {
  return with_tol({check_morphism_psi1(alg, RMatrixConfig::splitting(alg), opts.samples, opts.seed, 1e-9)}, opts);
}

std::vector<CheckReport> check_independence(const Algebra& alg, const CheckOptions& opts) {
  const PhaseSpace tp = two_toda_space(alg);
  const int card = family_card(alg);
  const RunInfo run = info(alg, opts);
  std::vector<CheckReport> out;
  out.push_back(CheckReport::equality("count", "cardinality of the family", run, card, expected_card(alg)));
  const int at_eh = family_jacobian_rank(alg, tp, PairPoint{alg.e(), alg.h()});
  out.push_back(CheckReport::equality("independence.eh", "the family is independent at (e, h)", run, at_eh, card));
  int lowest = card;
  for (const auto& m : sample_space(alg, tp, opts.samples, opts.seed))
    lowest = std::min(lowest, family_jacobian_rank(alg, tp, m));
  out.push_back(CheckReport::equality("independence.sampled", "the family is independent at every sampled point of T_P",
                                      run, lowest, card, "minimum over the samples"));
  return out;
}

std::vector<CheckReport> check_rank(const Algebra& alg, const CheckOptions& opts) {
  const RMatrixConfig cfg = RMatrixConfig::splitting(alg);
  const PhaseSpace tp = two_toda_space(alg);
  const int card = family_card(alg);
  const int expected = expected_pair_rank(alg);
  std::vector<CheckReport> out;
  for (BracketKind kind : brackets_for(alg)) {
    const PoissonBracket bracket(alg, cfg, kind);
    RunInfo run = info(alg, opts, to_string(kind));
    run.samples = kRankPoints;
    const int rank = max_rank(bracket, tp, kRankPoints, opts.seed);
    std::string note;
    if (kind == BracketKind::Quadratic) {
      // Diagnostics: whether T_P is a Poisson submanifold, and the rank of the
      // family's Hamiltonian fields (twice which bounds the rank from below).
      const auto pts = sample_space(alg, tp, 3, opts.seed);
      double defect = 0.0;
      int field_rank = 0;
      for (const auto& m : pts) {
        defect = std::max(defect, submanifold_defect(bracket.tensor(m), tp));
        const auto grads = family_gradients(alg, m);
        Matrix fields(2 * alg.dim(), static_cast<Eigen::Index>(grads.size()));
        for (std::size_t a = 0; a < grads.size(); ++a) fields.col(static_cast<Eigen::Index>(a)) = bracket.field(grads[a], m).flat();
        field_rank = std::max(field_rank, numerical_rank(fields));
      }
      note = "normal defect of coordinate fields " + std::to_string(defect) + ", twice the family field rank " +
             std::to_string(2 * field_rank);
    }
    out.push_back(CheckReport::equality("rank." + to_string(kind), "rank of the restricted Poisson matrix on T_P", run,
                                        rank, expected, note));
    out.push_back(CheckReport::equality("rank.identity." + to_string(kind), "card = dim T_P - rank / 2", run, card,
                                        tp.dim() - rank / 2.0));
    out.push_back(CheckReport::equality("rank.parity." + to_string(kind), "the rank is even", run, rank % 2, 0));
  }

  const PhaseSpace factor = cartan_factor_space(alg);
  const int r = factor.dim() / 2;
  Vector z = Vector::Zero(factor.dim());
  z.tail(r).setOnes();
  const Matrix block = factor.coords() * r_poisson_tensor(alg, cfg, factor.point(z)) * factor.coords().transpose();
  out.push_back(CheckReport::equality("rank.cartan-factor", "Cartan factor has full rank at unit root coordinates",
                                      info(alg, opts, "R"), numerical_rank(block), 2 * r));
  return out;
}

std::vector<CheckReport> check_rais(const Algebra& alg, const CheckOptions& opts) {
  const RaisData data = rais_vectors(alg);
  const RunInfo run = info(alg, opts);
  const double expected = (alg.dim() + alg.rank()) / 2.0;
  return with_tol({CheckReport::equality("rais.count", "number of vectors is (dim + rank) / 2", run,
                                         static_cast<double>(data.vectors.size()), expected),
                   CheckReport::equality("rais.rank", "the vectors are linearly independent", run, data.rank,
                                         static_cast<double>(data.vectors.size())),
                   CheckReport::residual("rais.span", "the vectors lie in degrees >= 0", run, data.negative_part, 1e-12)},
                  opts);
}

std::vector<CheckReport> check_fields(const Algebra& alg, const CheckOptions& opts) {
  const RMatrixConfig cfg = RMatrixConfig::splitting(alg);
  const PoissonBracket lin(alg, cfg, BracketKind::Linear);
  const auto tp_points = sample_space(alg, two_toda_space(alg), opts.samples, opts.seed);
  const auto ambient = sample_pairs(alg, opts.samples, opts.seed + 3);
  std::vector<CheckReport> out;

  out.push_back(CheckReport::residual(
      "fields.t", "t-field is the Hamiltonian field of (1/2)<x,x>", info(alg, opts, "linear"),
      max_field_diff(tp_points, [&](const PairPoint& m) { return lin.field(PairPoint{m.x, alg.zero()}, m); },
                     [&](const PairPoint& m) { return field_t(alg, m); }),
      1e-9));
  out.push_back(CheckReport::residual(
      "fields.s", "s-field is the Hamiltonian field of -(1/2)<y,y>", info(alg, opts, "linear"),
      max_field_diff(tp_points, [&](const PairPoint& m) { return lin.field(PairPoint{alg.zero(), m.y}, m); },
                     [&](const PairPoint& m) { return field_s(alg, m); }),
      1e-9));

  double pencil = 0.0, quad = 0.0;
  for (const auto& g : generators(alg)) {
    for (double l : {0.0, 0.5, 2.0, -1.0}) {
      pencil = std::max(pencil, max_field_diff(
                                    ambient, [&](const PairPoint& m) { return lin.field(pencil_invariant_gradient(alg, g, l, m), m); },
                                    [&](const PairPoint& m) { return field_linear(alg, g.exponent, l, m); }));
    }
  }
  out.push_back(CheckReport::residual("fields.pencil", "closed-form field of invariants of lambda x - y", info(alg, opts, "linear"),
                                      pencil, 1e-9));
  if (alg.associative()) {
    const PoissonBracket qb(alg, cfg, BracketKind::Quadratic);
    for (const auto& g : generators(alg))
      for (double l : {0.0, 0.5, 2.0, -1.0})
        quad = std::max(quad, max_field_diff(
                                  ambient, [&](const PairPoint& m) { return qb.field(pencil_invariant_gradient(alg, g, l, m), m); },
                                  [&](const PairPoint& m) { return field_quadratic(alg, g.exponent, l, m); }));
    out.push_back(CheckReport::residual("fields.quadratic", "closed-form quadratic field of invariants of lambda x - y",
                                        info(alg, opts, "quadratic"), quad, 1e-9));
  }
  return with_tol(out, opts);
}

std::vector<CheckReport> check_quadratic_relations(const Algebra& alg, const CheckOptions& opts) {
  if (!alg.associative()) throw CapabilityError("quadratic relations need an associative algebra; " + alg.name() + " is not");
  const RMatrixConfig cfg = RMatrixConfig::splitting(alg);
  const PoissonBracket lin(alg, cfg, BracketKind::Linear);
  const PoissonBracket qb(alg, cfg, BracketKind::Quadratic);
  const auto points = sample_pairs(alg, opts.samples, opts.seed);
  const auto gens = generators(alg);
  const RunInfo run = info(alg, opts, "quadratic");

  // Quadratic field of P_i o (lambda x - y) against the linear field of
  // P_{i+1} o (lambda x - y), scaled by `factor(lambda)`.
  auto ratio_residual = [&](const std::function<double(double)>& factor) {
    double worst = 0.0;
    for (const auto& m : points)
      for (std::size_t k = 0; k + 1 < gens.size(); ++k)
        for (double l : {0.0, 2.0, -1.0}) {
          const PairPoint q = qb.field(pencil_invariant_gradient(alg, gens[k], l, m), m);
          const PairPoint p = lin.field(pencil_invariant_gradient(alg, gens[k + 1], l, m), m);
          worst = std::max(worst, (q - factor(l) * p).norm());
        }
    return worst;
  };

  std::vector<CheckReport> out;
  out.push_back(CheckReport::residual("quadfield.ratio", "quadratic field equals 2/(1 - lambda) times the next linear field", run,
                                      ratio_residual([](double l) { return 2.0 / (1.0 - l); }), 1e-9));
  out.push_back(CheckReport::residual("quadfield.ratio.opposite", "quadratic field equals 2/(lambda - 1) times the next linear field",
                                      run, ratio_residual([](double l) { return 2.0 / (l - 1.0); }), 1e-9,
                                      "companion of quadfield.ratio with the factor sign reversed"));

  // Coefficient form on the family members F_{j,i}.
  double line1 = 0.0, line2 = 0.0, line3 = 0.0, line2_sum = 0.0, line3_plus = 0.0;
  for (const auto& m : points) {
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
      const auto low = expand_pencil(alg, gens[k], m);
      const auto high = expand_pencil(alg, gens[k + 1], m);
      const int i = gens[k].exponent;
      std::vector<PairPoint> xq, xl;
      for (const auto& g : low.grads) xq.push_back(qb.field(g, m));
      for (const auto& g : high.grads) xl.push_back(lin.field(g, m));
      line1 = std::max(line1, (xq[0] - 2.0 * xl[0]).norm());
      for (int j = 1; j <= i + 1; ++j) {
        line2 = std::max(line2, (xq[j] - xq[j - 1] - 2.0 * xl[j]).norm());
        line2_sum = std::max(line2_sum, (xq[j] + xq[j - 1] - 2.0 * xl[j]).norm());
      }
      line3 = std::max(line3, (xq[i + 1] + 2.0 * xl[i + 2]).norm());
      line3_plus = std::max(line3_plus, (xq[i + 1] - 2.0 * xl[i + 2]).norm());
    }
  }
  out.push_back(CheckReport::residual("quadfield.coeff.1", "X^Q(F_0_i) = 2 X(F_0_{i+1})", run, line1, 1e-9));
  out.push_back(CheckReport::residual("quadfield.coeff.2", "X^Q(F_j_i) - X^Q(F_{j-1}_i) = 2 X(F_j_{i+1})", run, line2, 1e-9));
  out.push_back(CheckReport::residual("quadfield.coeff.3", "X^Q(F_{i+1}_i) = -2 X(F_{i+2}_{i+1})", run, line3, 1e-9));
  out.push_back(CheckReport::residual("quadfield.coeff.2.sum", "X^Q(F_j_i) + X^Q(F_{j-1}_i) = 2 X(F_j_{i+1})", run, line2_sum,
                                      1e-9, "companion of quadfield.coeff.2"));
  out.push_back(CheckReport::residual("quadfield.coeff.3.plus", "X^Q(F_{i+1}_i) = 2 X(F_{i+2}_{i+1})", run, line3_plus, 1e-9,
                                      "companion of quadfield.coeff.3"));
  return with_tol(out, opts);
}

std::vector<CheckReport> check_toda(const Algebra& alg, const CheckOptions& opts) {
  std::vector<CheckReport> out{check_poisson_iso(alg, opts.samples, opts.seed, 1e-9),
                               check_binomial_identity(alg, opts.samples, opts.seed, 1e-10)};
  for (auto& r : toda_suite(alg, opts.samples, opts.seed)) out.push_back(std::move(r));
  return with_tol(out, opts);
}

std::vector<CheckReport> check_flows(const Algebra& alg, const CheckOptions& opts) {
  const PhaseSpace tp = two_toda_space(alg);
  Rng rng(opts.seed);
  const PairPoint m0 = PairPoint::from_flat(tp.random_point(rng), alg.dim());
  std::vector<CheckReport> out;
  std::vector<FlowConfig> cfgs{{FieldKind::T}, {FieldKind::S}};
  if (alg.associative()) cfgs.push_back({FieldKind::Quadratic, 0, 0.0});
  for (const auto& cfg : cfgs) {
    const Trajectory traj = integrate(alg, cfg, m0);
    RunInfo run = info(alg, opts, cfg.field == FieldKind::Quadratic ? "quadratic" : "linear");
    run.samples = 1;
    const std::string f = to_string(cfg.field);
    out.push_back(CheckReport::residual("flow." + f + ".conservation", "family members are conserved along the flow", run,
                                        traj.truncated ? std::nan("") : conservation_drift(traj), 1e-6));
    out.push_back(CheckReport::residual("flow." + f + ".spectrum", "spectra of lambda0 L - M are constant for lambda0 in {0, 1, 2}",
                                        run, eigenvalue_drift(alg, traj, {0.0, 1.0, 2.0}), 1e-6));
    out.push_back(CheckReport::residual("flow." + f + ".tangency", "the flow stays on T_P", run, tangency_drift(tp, traj), 1e-7));
  }
  RunInfo run = info(alg, opts, "linear");
  run.samples = 1;
  out.push_back(CheckReport::residual("flow.commutation", "t- and s-flows commute", run,
                                      flow_commutation(alg, m0, 1e-3, 100), 1e-6));
  return with_tol(out, opts);
}

std::vector<CheckReport> run_check(const std::string& name, const Algebra& alg, const CheckOptions& opts) {
  using Fn = std::vector<CheckReport> (*)(const Algebra&, const CheckOptions&);
  static const std::map<std::string, Fn> table{
      {"mcybe", check_mcybe_family},   {"jacobi", check_jacobi},
      {"involutivity", check_involutivity}, {"casimir", check_casimir},
      {"morphism", check_morphism},    {"independence", check_independence},
      {"rank", check_rank},            {"rais", check_rais},
      {"fields", check_fields},        {"quadratic-relations", check_quadratic_relations},
      {"toda", check_toda},            {"flows", check_flows},
  };
  if (name == "all") {
    std::vector<CheckReport> out;
    for (const auto& n : check_names()) {
      if (n == "quadratic-relations" && !alg.associative()) continue;
      auto part = table.at(n)(alg, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown check '" + name + "'");
  return it->second(alg, opts);
}

}  // namespace toda2
