#include "stallings/expectation.hpp"

#include <stdexcept>

namespace stallings {

RationalFunction L_value(const CoreGraph& m, const CoreGraph& j) {
  auto eta = find_morphism(m, j);
  if (!eta) throw std::invalid_argument("L requires a morphism between the graphs");

  std::vector<int> vertex_fiber(j.num_vertices(), 0);
  for (int u = 0; u < m.num_vertices(); ++u) vertex_fiber[eta->vertex_map[u]]++;
  std::vector<int> edge_fiber(j.num_edges(), 0);
  for (const auto& e : m.edges())
    edge_fiber[j.edge_index(eta->vertex_map[e.origin], e.label)]++;

  Polynomial num(1), den(1);
  int threshold = 1;
  for (int f : vertex_fiber) num *= falling_factorial(f);
  for (int f : edge_fiber) {
    den *= falling_factorial(f);
    threshold = std::max(threshold, f);
  }
  return RationalFunction(std::move(num), std::move(den), threshold);
}

RationalFunction phi(const CoreGraph& h, const CoreGraph& j) {
  if (h.is_trivial()) throw std::invalid_argument("phi requires a nontrivial subgroup");
  if (!find_morphism(h, j)) throw std::invalid_argument("not a subgroup of the target");
  FringePoset poset(h);
  RationalFunction total;
  for (int i = 0; i < poset.size(); ++i)
    if (find_morphism(poset.node(i), j)) total += L_value(poset.node(i), j);
  return total;
}

DerivationTables derive_tables(const FringePoset& poset) {
  const int n = poset.size();
  DerivationTables t;
  t.poset = &poset;
  t.mu = mobius_matrix(poset);
  auto zero_matrix = [&] {
    return std::vector<std::vector<RationalFunction>>(
        n, std::vector<RationalFunction>(n, RationalFunction::zero()));
  };
  t.L = zero_matrix();
  t.Phi = zero_matrix();
  t.R = zero_matrix();
  t.C = zero_matrix();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (poset.covers(i, j)) t.L[i][j] = L_value(poset.node(i), poset.node(j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!poset.covers(i, j)) continue;
      RationalFunction phi_ij, c_ij;
      for (int z = 0; z < n; ++z) {
        if (!(poset.covers(i, z) && poset.covers(z, j))) continue;
        phi_ij += t.L[z][j];
        c_ij += t.L[i][z] * RationalFunction::constant(t.mu[z][j]);
      }
      t.Phi[i][j] = phi_ij;
      t.C[i][j] = c_ij;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!poset.covers(i, j)) continue;
      RationalFunction r_ij;
      for (int z = 0; z < n; ++z)
        if (poset.covers(i, z) && poset.covers(z, j))
          r_ij += t.Phi[i][z] * RationalFunction::constant(t.mu[z][j]);
      t.R[i][j] = r_ij;
    }
  return t;
}

RationalFunction R_value(const CoreGraph& h, const CoreGraph& n_graph) {
  FringePoset poset(h);
  int top = poset.find(n_graph);
  if (top < 0) throw std::invalid_argument("R requires the second argument to be X-covered");
  auto mu = mobius_matrix(poset);
  // R(0, top) = sum over z in [0, top] of Phi(0, z) mu(z, top);
  // Phi(0, z) = sum over y in [0, z] of L(y, z)
  RationalFunction r;
  for (int z : poset.interval(0, top)) {
    RationalFunction phi_z;
    for (int y : poset.interval(0, z)) phi_z += L_value(poset.node(y), poset.node(z));
    r += phi_z * RationalFunction::constant(mu[z][top]);
  }
  return r;
}

RationalFunction C_value(const CoreGraph& m, const CoreGraph& n_graph,
                         const FringePoset& poset) {
  int mi = poset.find(m);
  int ni = poset.find(n_graph);
  if (mi < 0 || ni < 0) throw std::invalid_argument("C arguments must lie in the poset");
  if (!poset.covers(mi, ni))
    throw std::invalid_argument("C requires the first argument to X-cover the second");
  auto mu = mobius_matrix(poset);
  RationalFunction c;
  for (int z : poset.interval(mi, ni))
    c += L_value(poset.node(mi), poset.node(z)) * RationalFunction::constant(mu[z][ni]);
  return c;
}

FixedPointAsymptotics fixed_point_asymptotics(const Word& w) {
  if (w.is_identity())
    throw std::invalid_argument("fixed-point asymptotics of the identity word is degenerate");
  const int k = w.ambient_rank();
  CoreGraph h = CoreGraph::from_generators({w}, k);
  AlgebraicProfile profile = primitivity_profile(h);
  RationalFunction f = phi(h, CoreGraph::bouquet(k));
  const int reduced = h.reduced_rank();

  if (profile.is_primitive()) {
    if (!(f == RationalFunction::one()))
      throw std::logic_error("primitive word with expectation differing from 1");
    LaurentSeries series = laurent_expand(f, 2);
    return FixedPointAsymptotics{std::move(f), std::move(series), std::move(profile)};
  }

  const int reduced_pi = profile.reduced_primitivity_rank();
  const int order = (reduced_pi - reduced) + 2;
  LaurentSeries series = laurent_expand(f, order);
  // expansion must read 1/n^rk~ + |Crit|/n^pi~ + O(1/n^(pi~+1))
  if (series.leading_exponent() != reduced)
    throw std::logic_error("leading exponent differs from the reduced rank");
  BigInt crit_count(profile.critical.size());
  for (int e = reduced; e <= reduced_pi; ++e) {
    BigRat want = (e == reduced ? BigRat(1) : BigRat(0));
    if (e == reduced_pi) want += BigRat(crit_count);
    if (series.coeff_at_exponent(e) != want)
      throw std::logic_error("expansion coefficient differs from the critical count");
  }
  return FixedPointAsymptotics{std::move(f), std::move(series), std::move(profile)};
}

}  // namespace stallings
