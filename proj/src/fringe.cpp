#include "stallings/fringe.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace stallings {

std::vector<CoreGraph> immediate_quotients(const CoreGraph& g) {
  if (g.is_trivial()) throw std::invalid_argument("the trivial subgroup has no quotients");
  std::vector<CoreGraph> out;
  std::vector<std::string> seen;
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v = u + 1; v < g.num_vertices(); ++v) {
      CoreGraph q = g.quotient_merging(u, v);
      std::string key = q.serialize();
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(std::move(key));
        out.push_back(std::move(q));
      }
    }
  }
  // deterministic order: by serialization
  std::vector<std::size_t> perm(out.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return seen[a] < seen[b]; });
  std::vector<CoreGraph> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : perm) sorted.push_back(std::move(out[i]));
  return sorted;
}

FringePoset::FringePoset(const CoreGraph& root) {
  if (root.is_trivial())
    throw std::invalid_argument("fringe is defined for nontrivial subgroups only");
  nodes_.push_back(root);
  dist_.push_back(0);
  index_.emplace(root.serialize(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop();
    std::vector<int> children;
    for (CoreGraph& q : immediate_quotients(nodes_[i])) {
      std::string key = q.serialize();
      auto [it, inserted] = index_.emplace(std::move(key), static_cast<int>(nodes_.size()));
      if (inserted) {
        nodes_.push_back(std::move(q));
        dist_.push_back(dist_[i] + 1);
        frontier.push(it->second);
      }
      children.push_back(it->second);
    }
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    immediate_.resize(nodes_.size());
    immediate_[i] = std::move(children);
  }
  immediate_.resize(nodes_.size());

  reduced_rank_.reserve(nodes_.size());
  for (const CoreGraph& g : nodes_) reduced_rank_.push_back(g.reduced_rank());

  // reachability closure (the DAG is tiny; vertex counts strictly decrease
  // along immediate edges, so sorting by vertex count is a topological order)
  const int n = size();
  covers_.assign(n, std::vector<char>(n, 0));
  topo_.resize(n);
  for (int i = 0; i < n; ++i) topo_[i] = i;
  std::sort(topo_.begin(), topo_.end(), [&](int a, int b) {
    if (nodes_[a].num_vertices() != nodes_[b].num_vertices())
      return nodes_[a].num_vertices() > nodes_[b].num_vertices();
    return a < b;
  });
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    int i = *it;
    covers_[i][i] = 1;
    for (int c : immediate_[i])
      for (int j = 0; j < n; ++j)
        if (covers_[c][j]) covers_[i][j] = 1;
  }
}

int FringePoset::find(const CoreGraph& g) const {
  auto it = index_.find(g.serialize());
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FringePoset::interval(int lo, int hi) const {
  std::vector<int> out;
  for (int z : topo_)
    if (covers_[lo][z] && covers_[z][hi]) out.push_back(z);
  return out;
}

int distance(const FringePoset& poset, const CoreGraph& target) {
  int i = poset.find(target);
  if (i < 0) throw std::invalid_argument("target is not a quotient of the root");
  return poset.distance(i);
}

}  // namespace stallings
