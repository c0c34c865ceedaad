#ifndef STALLINGS_MOBIUS_HPP
#define STALLINGS_MOBIUS_HPP

#include <vector>

#include "stallings/fringe.hpp"
#include "stallings/polynomial.hpp"

namespace stallings {

/// The zeta and Möbius matrices of a closed interval of the X-covering
/// poset. Indices refer to positions in `interval` (topologically ordered,
/// interval[0] = the interval's bottom). zeta * mu = mu * zeta = identity.
struct MobiusTable {
  std::vector<int> interval;              // fringe node indices
  std::vector<std::vector<BigInt>> zeta;  // zeta[a][b] = 1 iff a X-covers b
  std::vector<std::vector<BigInt>> mu;

  int position_of(int node_index) const;  // -1 if absent
  bool verify_inverse() const;            // checks zeta*mu = mu*zeta = delta
};

/// Table over the interval [root, top] under X-covering; throws when top is
/// not in the fringe.
MobiusTable mobius_table(const FringePoset& poset, const CoreGraph& top);
MobiusTable mobius_table_for(const FringePoset& poset, int top_index);

/// Möbius function over all comparable pairs of the fringe poset:
/// mu[i][j] with mu(i,i) = 1 and sum over [i,j] of mu(i,z) = 0 for i < j.
std::vector<std::vector<BigInt>> mobius_matrix(const FringePoset& poset);

}  // namespace stallings

#endif
