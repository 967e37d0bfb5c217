#pragma once

#include "toda2/algebra.hpp"
#include "toda2/phase_space.hpp"
#include "toda2/report.hpp"
#include "toda2/rmatrix.hpp"

#include <vector>

namespace toda2 {

/// x -> (x, x). Throws PreconditionError unless x lies on the Toda space.
PairPoint embed_phi(const Algebra& alg, const Element& x);

/// Compares the R-bracket of the Toda coordinates at x with the pair
/// bracket of the matching diagonal coordinates at (x, x).
CheckReport check_poisson_iso(const Algebra& alg, int samples, std::uint64_t seed, double tolerance);

/// F_{k,i}(x, x) = C(m_i+1, k) P_i(x) on seeded Toda points (and x = e).
CheckReport check_binomial_identity(const Algebra& alg, int samples, std::uint64_t seed, double tolerance);

/// Toda-side checks on e + g_{-1} + g_0: Poisson submanifold, Hamiltonian
/// field of (1/2)<x,x> equals [A+, A], involutivity and independence of the
/// generators, their conservation along the flow, and the Poisson rank.
std::vector<CheckReport> toda_suite(const Algebra& alg, int samples, std::uint64_t seed);

}  // namespace toda2
