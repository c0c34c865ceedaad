#include "stallings/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stallings/expectation.hpp"

namespace stallings {

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation random_permutation(int n, Rng& rng) {
  Permutation p = identity_permutation(n);
  rng.shuffle(p);
  return p;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

int count_fixed_points(const Permutation& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == static_cast<int>(i)) ++c;
  return c;
}

HomSample sample_hom(const CoreGraph& j, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("covering degree must be at least 1");
  HomSample s;
  s.degree = n;
  s.basis = j.spanning_basis();
  Rng rng(seed);
  for (std::size_t i = 0; i < s.basis.size(); ++i) s.images.push_back(random_permutation(n, rng));
  return s;
}

int common_fixed_points(const HomSample& sample) {
  int count = 0;
  for (int pt = 0; pt < sample.degree; ++pt) {
    bool fixed = true;
    for (const Permutation& img : sample.images)
      if (img[pt] != pt) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

CoveringSample sample_covering(const CoreGraph& base, int n, std::uint64_t seed,
                               bool economical) {
  if (n < 1) throw std::invalid_argument("covering degree must be at least 1");
  CoveringSample cov;
  cov.base = base;
  cov.degree = n;
  Rng rng(seed);
  auto es = base.edges();
  cov.matchings.resize(es.size());
  std::vector<char> tree_edge(es.size(), 0);
  if (economical) {
    // mark a BFS spanning tree (same traversal as spanning_basis)
    std::vector<char> visited(base.num_vertices(), 0);
    visited[CoreGraph::kBasepoint] = 1;
    std::vector<int> queue = {CoreGraph::kBasepoint};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int j = 1; j <= base.rank_alphabet(); ++j) {
        int t = base.out_edge(v, j);
        if (t >= 0 && !visited[t]) {
          visited[t] = 1;
          tree_edge[base.edge_index(v, j)] = 1;
          queue.push_back(t);
        }
      }
      for (int j = 1; j <= base.rank_alphabet(); ++j) {
        int o = base.in_edge(v, j);
        if (o >= 0 && !visited[o]) {
          visited[o] = 1;
          tree_edge[base.edge_index(o, j)] = 1;
          queue.push_back(o);
        }
      }
    }
  }
  for (std::size_t e = 0; e < es.size(); ++e)
    cov.matchings[e] = tree_edge[e] ? identity_permutation(n) : random_permutation(n, rng);
  return cov;
}

namespace {

// permutation action of a subgroup element on the basepoint fiber: trace the
// word through the base graph, composing matchings (inverted on backward
// steps)
Permutation trace_action(const Word& w, const CoveringSample& cov) {
  const CoreGraph& g = cov.base;
  Permutation act = identity_permutation(cov.degree);
  for (int i = 0; i < cov.degree; ++i) {
    int v = CoreGraph::kBasepoint;
    int sheet = i;
    for (const Letter& l : w.letters()) {
      if (l.sign > 0) {
        int t = g.out_edge(v, l.generator);
        if (t < 0) throw std::invalid_argument("word does not trace in the base graph");
        sheet = cov.matchings[g.edge_index(v, l.generator)][sheet];
        v = t;
      } else {
        int o = g.in_edge(v, l.generator);
        if (o < 0) throw std::invalid_argument("word does not trace in the base graph");
        const Permutation& m = cov.matchings[g.edge_index(o, l.generator)];
        int pre = -1;
        for (int s = 0; s < cov.degree; ++s)
          if (m[s] == sheet) {
            pre = s;
            break;
          }
        sheet = pre;
        v = o;
      }
    }
    if (v != CoreGraph::kBasepoint)
      throw std::invalid_argument("word is not a closed path at the basepoint");
    act[i] = sheet;
  }
  return act;
}

struct RunningStats {
  long long count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double stderr_of_mean() const {
    if (count < 2) return 0.0;
    double m = mean();
    double var = (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1);
    if (var < 0) var = 0;
    return std::sqrt(var / static_cast<double>(count));
  }
};

EstimateReport finish_report(const CoreGraph& h, const CoreGraph& j, int n, long long trials,
                             std::uint64_t seed, const RunningStats& stats) {
  EstimateReport r;
  r.degree = n;
  r.trials = trials;
  r.seed = seed;
  r.mean = stats.mean();
  r.stderr_ = stats.stderr_of_mean();
  RationalFunction f = phi(h, j);
  if (n >= f.validity_threshold()) {
    r.exact = f.evaluate_at(n);
    double exact_d = static_cast<double>(*r.exact);
    r.z_score = r.stderr_ > 0 ? (r.mean - exact_d) / r.stderr_
                              : (r.mean == exact_d ? 0.0 : std::numeric_limits<double>::infinity());
  }
  return r;
}

}  // namespace

int count_lifts(const CoreGraph& h, const CoveringSample& cov, bool injective_only) {
  auto eta = find_morphism(h, cov.base);
  if (!eta) throw std::invalid_argument("count_lifts requires a morphism to the base");
  const CoreGraph& base = cov.base;
  auto h_edges = h.edges();
  int lifts = 0;
  std::vector<int> sheet(h.num_vertices());
  for (int start = 0; start < cov.degree; ++start) {
    // propagate sheet assignments over a spanning structure, then verify
    std::vector<char> assigned(h.num_vertices(), 0);
    sheet[CoreGraph::kBasepoint] = start;
    assigned[CoreGraph::kBasepoint] = 1;
    std::vector<int> queue = {CoreGraph::kBasepoint};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int j = 1; j <= h.rank_alphabet(); ++j) {
        int t = h.out_edge(u, j);
        if (t >= 0 && !assigned[t]) {
          const Permutation& m =
              cov.matchings[base.edge_index(eta->vertex_map[u], j)];
          sheet[t] = m[sheet[u]];
          assigned[t] = 1;
          queue.push_back(t);
        }
        int o = h.in_edge(u, j);
        if (o >= 0 && !assigned[o]) {
          const Permutation& m =
              cov.matchings[base.edge_index(eta->vertex_map[o], j)];
          int pre = -1;
          for (int s = 0; s < cov.degree; ++s)
            if (m[s] == sheet[u]) {
              pre = s;
              break;
            }
          sheet[o] = pre;
          assigned[o] = 1;
          queue.push_back(o);
        }
      }
    }
    bool ok = true;
    for (const auto& e : h_edges) {
      const Permutation& m = cov.matchings[base.edge_index(eta->vertex_map[e.origin], e.label)];
      if (m[sheet[e.origin]] != sheet[e.terminus]) {
        ok = false;
        break;
      }
    }
    if (ok && injective_only) {
      std::vector<char> used(static_cast<std::size_t>(base.num_vertices()) * cov.degree, 0);
      for (int u = 0; u < h.num_vertices(); ++u) {
        auto slot = static_cast<std::size_t>(eta->vertex_map[u]) * cov.degree + sheet[u];
        if (used[slot]) {
          ok = false;
          break;
        }
        used[slot] = 1;
      }
      // vertex-injectivity implies edge-injectivity for folded graphs
    }
    if (ok) ++lifts;
  }
  return lifts;
}

EstimateReport estimate_phi(const CoreGraph& h, const CoreGraph& j, int n, long long trials,
                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("at least one trial is required");
  if (!find_morphism(h, j)) throw std::invalid_argument("not a subgroup of the target");
  std::vector<Word> h_basis = h.spanning_basis();
  Rng master(seed);
  RunningStats stats;
  for (long long t = 0; t < trials; ++t) {
    Rng rng = master.split(static_cast<std::uint64_t>(t));
    // economical model: one permutation per non-tree edge
    CoveringSample cov = sample_covering(j, n, rng.next_u64(), /*economical=*/true);
    int fixed = 0;
    std::vector<Permutation> actions;
    actions.reserve(h_basis.size());
    for (const Word& w : h_basis) actions.push_back(trace_action(w, cov));
    for (int i = 0; i < n; ++i) {
      bool all = true;
      for (const auto& act : actions)
        if (act[i] != i) {
          all = false;
          break;
        }
      if (all) ++fixed;
    }
    stats.add(static_cast<double>(fixed));
  }
  return finish_report(h, j, n, trials, seed, stats);
}

EstimateReport estimate_phi_covering(const CoreGraph& h, const CoreGraph& j, int n,
                                     long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("at least one trial is required");
  if (!find_morphism(h, j)) throw std::invalid_argument("not a subgroup of the target");
  Rng master(seed);
  RunningStats stats;
  for (long long t = 0; t < trials; ++t) {
    Rng rng = master.split(static_cast<std::uint64_t>(t));
    CoveringSample cov = sample_covering(j, n, rng.next_u64(), /*economical=*/false);
    stats.add(static_cast<double>(count_lifts(h, cov, /*injective_only=*/false)));
  }
  return finish_report(h, j, n, trials, seed, stats);
}

EstimateReport estimate_injective_lifts(const CoreGraph& m, const CoreGraph& j, int n,
                                        long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("at least one trial is required");
  Rng master(seed);
  RunningStats stats;
  for (long long t = 0; t < trials; ++t) {
    Rng rng = master.split(static_cast<std::uint64_t>(t));
    CoveringSample cov = sample_covering(j, n, rng.next_u64(), /*economical=*/false);
    stats.add(static_cast<double>(count_lifts(m, cov, /*injective_only=*/true)));
  }
  EstimateReport r;
  r.degree = n;
  r.trials = trials;
  r.seed = seed;
  r.mean = stats.mean();
  r.stderr_ = stats.stderr_of_mean();
  RationalFunction f = L_value(m, j);
  if (n >= f.validity_threshold()) {
    r.exact = f.evaluate_at(n);
    double exact_d = static_cast<double>(*r.exact);
    r.z_score = r.stderr_ > 0 ? (r.mean - exact_d) / r.stderr_
                              : (r.mean == exact_d ? 0.0 : std::numeric_limits<double>::infinity());
  }
  return r;
}

}  // namespace stallings
