#ifndef STALLINGS_EXPECTATION_HPP
#define STALLINGS_EXPECTATION_HPP

#include <vector>

#include "stallings/algebraic.hpp"
#include "stallings/laurent.hpp"
#include "stallings/mobius.hpp"
#include "stallings/rational_function.hpp"

namespace stallings {

/// Expected number of injective lifts of the morphism m -> j into a random
/// n-covering of j's graph: the product over j's vertices of (n)_{fiber}
/// divided by the product over j's edges of (n)_{fiber}. Defined whenever
/// the morphism exists (surjectivity not required). The validity threshold
/// is the largest edge fiber.
RationalFunction L_value(const CoreGraph& m, const CoreGraph& j);

/// Phi_{H,J}(n): expected number of common fixed points of the image of h's
/// subgroup under a uniform random homomorphism of j's subgroup to S_n.
/// Computed as the sum of L over all fringe(h) members admitting a morphism
/// to j. Requires h nontrivial and h's subgroup contained in j's.
RationalFunction phi(const CoreGraph& h, const CoreGraph& j);

/// Right derivation R = Phi * mu, evaluated at (h, n_graph). Requires h to
/// X-cover n_graph. R is supported on algebraic extensions and is
/// independent of the basis.
RationalFunction R_value(const CoreGraph& h, const CoreGraph& n_graph);

/// Two-sided derivation C = mu * Phi * mu = L * mu at a pair of poset
/// members. Requires m to X-cover n_graph, both in the given poset.
RationalFunction C_value(const CoreGraph& m, const CoreGraph& n_graph,
                         const FringePoset& poset);

/// All four incidence-algebra functions over a fringe poset, as matrices
/// indexed by node pairs (zero off the covering relation):
///   L (injective lifts), Phi = zeta*L, R = Phi*mu, C = L*mu.
struct DerivationTables {
  const FringePoset* poset;
  std::vector<std::vector<BigInt>> mu;
  std::vector<std::vector<RationalFunction>> L, Phi, R, C;
};

DerivationTables derive_tables(const FringePoset& poset);

/// Laurent data of Phi_{<w>, F_k} together with the primitivity profile.
/// Checks the expansion against the profile: leading term 1/n^rk~, the
/// next nonzero term |Crit|/n^pi~, zeros in between; exactly the constant 1
/// for primitive words.
struct FixedPointAsymptotics {
  RationalFunction phi;
  LaurentSeries series;
  AlgebraicProfile profile;
};

FixedPointAsymptotics fixed_point_asymptotics(const Word& w);

}  // namespace stallings

#endif
