#ifndef STALLINGS_FRINGE_HPP
#define STALLINGS_FRINGE_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "stallings/core_graph.hpp"

namespace stallings {

/// All immediate quotients of g: for every unordered vertex pair, the folded
/// core graph generated by identifying that pair. Deduplicated, in a
/// deterministic order.
std::vector<CoreGraph> immediate_quotients(const CoreGraph& g);

/// The X-fringe of a core graph: the finite DAG of all its quotient core
/// graphs, with immediate-quotient edges and BFS distances. Node 0 is the
/// root. Immutable after construction.
class FringePoset {
 public:
  explicit FringePoset(const CoreGraph& root);

  int size() const { return static_cast<int>(nodes_.size()); }
  const CoreGraph& node(int i) const { return nodes_[i]; }
  const CoreGraph& root() const { return nodes_[0]; }

  /// rho_X(root, node i): BFS depth, the shortest immediate-quotient chain.
  int distance(int i) const { return dist_[i]; }
  int reduced_rank(int i) const { return reduced_rank_[i]; }
  int rank(int i) const { return reduced_rank_[i] + 1; }

  /// Index of a graph among the nodes, or -1 when absent.
  int find(const CoreGraph& g) const;

  /// Immediate quotients of node i, as sorted node indices.
  const std::vector<int>& immediate(int i) const { return immediate_[i]; }

  /// X-covering order: node i covers node j (reflexive, = reachability).
  bool covers(int i, int j) const { return covers_[i][j] != 0; }

  /// The closed interval [lo, hi] under X-covering, topologically ordered
  /// (vertex counts strictly decrease along the order).
  std::vector<int> interval(int lo, int hi) const;

  /// All nodes in a topological order of the covering DAG (root first).
  const std::vector<int>& topological_order() const { return topo_; }

 private:
  std::vector<CoreGraph> nodes_;
  std::vector<int> dist_;
  std::vector<int> reduced_rank_;
  std::vector<std::vector<int>> immediate_;
  std::vector<std::vector<char>> covers_;
  std::vector<int> topo_;
  std::unordered_map<std::string, int> index_;
};

inline FringePoset fringe(const CoreGraph& root) { return FringePoset(root); }

/// rho_X(root, target); throws std::invalid_argument if target is not a
/// quotient of the poset's root.
int distance(const FringePoset& poset, const CoreGraph& target);

}  // namespace stallings

#endif
