#ifndef STALLINGS_CORE_GRAPH_HPP
#define STALLINGS_CORE_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stallings/word.hpp"

namespace stallings {

class Rng;  // montecarlo.hpp

/// A directed labeled edge. Labels are 1-based basis indices.
struct GraphEdge {
  int origin = 0;
  int terminus = 0;
  int label = 1;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

/// A pointed, edge-labeled graph under construction: not necessarily folded,
/// core, or even connected. Vertex 0 is the basepoint. Multi-edges allowed.
struct PreGraph {
  int rank = 0;  // alphabet size k
  int num_vertices = 1;
  std::vector<GraphEdge> edges;

  explicit PreGraph(int k) : rank(k) {}

  int add_vertex() { return num_vertices++; }
  void add_edge(int origin, int terminus, int label);
  /// Traces w as a closed loop at the basepoint (fresh interior vertices).
  void add_word_loop(const Word& w);
};

/// A set partition of {0, ..., n-1}, used to generate quotient graphs.
struct Partition {
  std::vector<std::vector<int>> blocks;

  static Partition discrete(int n);
  /// Finest partition identifying each listed pair (closure under transitivity).
  static Partition from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  /// ||P|| = |set| - |blocks|, the number of identifications P encodes.
  int norm(int set_size) const { return set_size - static_cast<int>(blocks.size()); }
  void validate(int set_size) const;
  /// block index of each element
  std::vector<int> block_of(int set_size) const;
};

/// The Stallings core graph of a finitely generated subgroup: pointed,
/// connected, folded (no two equally labeled edges share an origin or a
/// terminus), and core (every vertex and edge lies on a reduced closed path
/// through the basepoint; the basepoint may have degree one).
///
/// Instances are always stored in canonical form: vertices are numbered by a
/// deterministic traversal from the basepoint, so two core graphs are
/// label-isomorphic exactly when they compare equal (and when their
/// serializations are bit-identical). Immutable after construction.
class CoreGraph {
 public:
  static constexpr int kBasepoint = 0;

  CoreGraph() = default;  // empty placeholder; not a valid core graph

  /// The wedge of k loops: the core graph of F_k itself.
  static CoreGraph bouquet(int k);

  /// Core graph of the subgroup generated by the given reduced words.
  /// Identity words are skipped; an empty effective set yields the
  /// single-vertex graph of the trivial subgroup.
  static CoreGraph from_generators(const std::vector<Word>& generators, int k);

  /// Stallings folding: repeatedly merges equally labeled edge pairs sharing
  /// an origin or terminus, keeps the basepoint component, prunes hanging
  /// trees, and canonicalizes. The labeled fundamental group is preserved.
  /// The optional rng randomizes the merge order (the result is invariant).
  static CoreGraph fold(const PreGraph& pre, Rng* order_rng = nullptr);

  /// Parses the serialization format (see serialize()); validates the core
  /// graph invariants and canonicalizes. The format does not record the
  /// ambient rank, so it is passed explicitly (0 = infer from the labels).
  static CoreGraph parse(const std::string& text, int ambient_rank = 0);

  int rank_alphabet() const { return rank_; }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return num_edges_; }
  bool is_trivial() const { return num_edges_ == 0; }

  /// terminus of the label-edge leaving v, or -1
  int out_edge(int v, int label) const { return out_[idx(v, label)]; }
  /// origin of the label-edge entering v, or -1
  int in_edge(int v, int label) const { return in_[idx(v, label)]; }

  /// All edges, sorted by (origin, label). Since the graph is folded, the
  /// pair (origin, label) identifies an edge uniquely.
  std::vector<GraphEdge> edges() const;
  /// Position of edge (origin, label) in edges(), or -1.
  int edge_index(int origin, int label) const;

  /// Membership: true iff w traces a closed path from the basepoint.
  bool contains(const Word& w) const;

  /// -chi = |E| - |V|; equals rank - 1 for nontrivial subgroups and -1 for
  /// the trivial one.
  int reduced_rank() const { return num_edges_ - num_vertices_; }
  /// Cycle rank |E| - |V| + 1 (0 for the trivial subgroup).
  int rank() const { return reduced_rank() + 1; }

  /// Folded core graph generated by identifying the blocks of p; its group
  /// contains this graph's group. Optional edge identifications are
  /// translated to origin/terminus identifications.
  CoreGraph quotient(const Partition& p,
                     const std::vector<std::pair<GraphEdge, GraphEdge>>& edge_pairs = {}) const;
  /// Quotient by the norm-1 partition identifying u and v.
  CoreGraph quotient_merging(int u, int v) const;

  /// A free basis of the subgroup, one word per edge outside a spanning
  /// tree: tree path to the origin, the edge, reverse tree path from the
  /// terminus. Length equals rank().
  std::vector<Word> spanning_basis() const;

  /// Canonical text form:
  ///   v <count> basepoint=0
  ///   e <origin> <terminus> <label>   (one line per edge, sorted)
  /// Serialized equality coincides with label-isomorphism.
  std::string serialize() const;

  friend bool operator==(const CoreGraph&, const CoreGraph&) = default;

 private:
  std::size_t idx(int v, int label) const {
    return static_cast<std::size_t>(v) * rank_ + (label - 1);
  }
  static CoreGraph canonicalize(int rank, int nv,
                                const std::vector<GraphEdge>& edges);

  int rank_ = 0;
  int num_vertices_ = 0;
  int num_edges_ = 0;
  std::vector<int> out_;  // nv x rank, -1 = absent
  std::vector<int> in_;
};

/// The unique basepoint-preserving, label-preserving graph morphism between
/// two core graphs over the same basis, when one exists (iff the domain's
/// subgroup is contained in the codomain's). Morphisms are immersions.
struct GraphMorphism {
  CoreGraph domain;
  CoreGraph codomain;
  std::vector<int> vertex_map;  // domain vertex -> codomain vertex
  bool surjective = false;      // onto both vertices and edges ("X-covers")

  GraphEdge edge_image(const GraphEdge& e) const {
    return GraphEdge{vertex_map[e.origin], vertex_map[e.terminus], e.label};
  }
};

/// Returns the morphism from `from` to `to`, or nullopt when none exists.
std::optional<GraphMorphism> find_morphism(const CoreGraph& from, const CoreGraph& to);

/// The embedded image of a morphism, as a core graph in canonical form.
/// Its subgroup M satisfies: domain X-covers M and M embeds in the codomain.
CoreGraph morphism_image(const GraphMorphism& m);

}  // namespace stallings

#endif
