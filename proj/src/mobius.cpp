#include "stallings/mobius.hpp"

#include <algorithm>
#include <stdexcept>

namespace stallings {

std::vector<std::vector<BigInt>> mobius_matrix(const FringePoset& poset) {
  const int n = poset.size();
  std::vector<std::vector<BigInt>> mu(n, std::vector<BigInt>(n, BigInt(0)));
  const auto& topo = poset.topological_order();
  for (int i = 0; i < n; ++i) {
    mu[i][i] = 1;
    // process targets in topological order so that mu(i, z) is ready for
    // every z strictly between i and j
    for (int j : topo) {
      if (j == i || !poset.covers(i, j)) continue;
      BigInt acc = 0;
      for (int z : topo)
        if (z != j && poset.covers(i, z) && poset.covers(z, j)) acc += mu[i][z];
      mu[i][j] = -acc;
    }
  }
  return mu;
}

int MobiusTable::position_of(int node_index) const {
  auto it = std::find(interval.begin(), interval.end(), node_index);
  return it == interval.end() ? -1 : static_cast<int>(it - interval.begin());
}

bool MobiusTable::verify_inverse() const {
  const int n = static_cast<int>(interval.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      BigInt zm = 0, mz = 0;
      for (int z = 0; z < n; ++z) {
        zm += zeta[a][z] * mu[z][b];
        mz += mu[a][z] * zeta[z][b];
      }
      BigInt want = (a == b) ? 1 : 0;
      if (zm != want || mz != want) return false;
    }
  return true;
}

MobiusTable mobius_table_for(const FringePoset& poset, int top_index) {
  if (top_index < 0 || top_index >= poset.size())
    throw std::invalid_argument("interval top is not in the fringe");
  MobiusTable t;
  t.interval = poset.interval(0, top_index);
  const int n = static_cast<int>(t.interval.size());
  t.zeta.assign(n, std::vector<BigInt>(n, BigInt(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (poset.covers(t.interval[a], t.interval[b])) t.zeta[a][b] = 1;
  auto full = mobius_matrix(poset);
  t.mu.assign(n, std::vector<BigInt>(n, BigInt(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.mu[a][b] = full[t.interval[a]][t.interval[b]];
  return t;
}

MobiusTable mobius_table(const FringePoset& poset, const CoreGraph& top) {
  int idx = poset.find(top);
  if (idx < 0) throw std::invalid_argument("interval top is not in the fringe");
  return mobius_table_for(poset, idx);
}

}  // namespace stallings
