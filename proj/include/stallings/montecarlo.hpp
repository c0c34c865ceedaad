#ifndef STALLINGS_MONTECARLO_HPP
#define STALLINGS_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stallings/core_graph.hpp"
#include "stallings/polynomial.hpp"
#include "stallings/rng.hpp"

namespace stallings {

/// A permutation of {0, ..., n-1} given by its image table.
using Permutation = std::vector<int>;

Permutation random_permutation(int n, Rng& rng);
Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& p);
int count_fixed_points(const Permutation& p);

/// A uniform random homomorphism of a subgroup into S_n: one independent
/// uniform permutation per spanning-tree basis word of its core graph.
struct HomSample {
  int degree = 1;                 // n
  std::vector<Word> basis;        // spanning_basis of the sampled subgroup
  std::vector<Permutation> images;
};

HomSample sample_hom(const CoreGraph& j, int n, std::uint64_t seed);

/// Points of {0..n-1} fixed by every image permutation (fixing all basis
/// images fixes the whole subgroup).
int common_fixed_points(const HomSample& sample);

/// A random n-sheeted covering of a core graph in the permutation model:
/// one perfect matching (permutation) per base edge; sheets over v are
/// (v, 0..n-1), and the base edge e with matching sigma lifts to the edges
/// ((origin, i), (terminus, sigma(i))). The economical variant forces the
/// identity on a spanning tree.
struct CoveringSample {
  CoreGraph base;
  int degree = 1;
  std::vector<Permutation> matchings;  // indexed like base.edges()
};

CoveringSample sample_covering(const CoreGraph& base, int n, std::uint64_t seed,
                               bool economical = false);

/// Number of basepoint-anchored lifts of the morphism h -> cov.base into the
/// covering: for each sheet over the basepoint, the lift is unique when it
/// exists. With injective_only, requires global injectivity on vertices and
/// edges (an embedding).
int count_lifts(const CoreGraph& h, const CoveringSample& cov, bool injective_only);

/// One Monte Carlo comparison against an exact value.
struct EstimateReport {
  int degree = 1;             // n
  long long trials = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
  std::optional<BigRat> exact;  // empty below the validity threshold
  std::optional<double> z_score;
};

/// Estimates Phi_{H,J}(n) by sampling homomorphisms of J (economical
/// covering model: identity on a spanning tree) and counting the sheets
/// fixed by all of H's basis words. exact/z are filled when n is at or
/// above phi's validity threshold.
EstimateReport estimate_phi(const CoreGraph& h, const CoreGraph& j, int n,
                            long long trials, std::uint64_t seed);

/// Same estimate through the redundant per-edge covering model and
/// count_lifts; kept for the model-equivalence check.
EstimateReport estimate_phi_covering(const CoreGraph& h, const CoreGraph& j, int n,
                                     long long trials, std::uint64_t seed);

/// Mean count of injective lifts of m into random coverings of j's graph,
/// compared against L_value(m, j)(n).
EstimateReport estimate_injective_lifts(const CoreGraph& m, const CoreGraph& j, int n,
                                        long long trials, std::uint64_t seed);

}  // namespace stallings

#endif
