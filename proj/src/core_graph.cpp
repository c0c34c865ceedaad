#include "stallings/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "stallings/rng.hpp"

namespace stallings {

void PreGraph::add_edge(int origin, int terminus, int label) {
  if (origin < 0 || origin >= num_vertices || terminus < 0 || terminus >= num_vertices)
    throw std::invalid_argument("edge endpoint out of range");
  if (label < 1 || label > rank) throw std::invalid_argument("edge label out of range");
  edges.push_back(GraphEdge{origin, terminus, label});
}

void PreGraph::add_word_loop(const Word& w) {
  if (w.ambient_rank() > rank)
    throw std::invalid_argument("word rank exceeds graph alphabet");
  if (w.is_identity()) return;
  int prev = 0;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    int next = (i + 1 == ls.size()) ? 0 : add_vertex();
    if (ls[i].sign > 0)
      add_edge(prev, next, ls[i].generator);
    else
      add_edge(next, prev, ls[i].generator);
    prev = next;
  }
}

Partition Partition::discrete(int n) {
  Partition p;
  p.blocks.resize(n);
  for (int i = 0; i < n; ++i) p.blocks[i] = {i};
  return p;
}

Partition Partition::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("partition pair out of range");
    parent[find(a)] = find(b);
  }
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  Partition p;
  for (auto& [root, block] : by_root) p.blocks.push_back(std::move(block));
  return p;
}

void Partition::validate(int set_size) const {
  std::vector<char> seen(set_size, 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition has an empty block");
    for (int v : block) {
      if (v < 0 || v >= set_size) throw std::invalid_argument("partition element out of range");
      if (seen[v]) throw std::invalid_argument("partition blocks are not disjoint");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < set_size; ++v)
    if (!seen[v]) throw std::invalid_argument("partition does not cover the vertex set");
}

std::vector<int> Partition::block_of(int set_size) const {
  validate(set_size);
  std::vector<int> of(set_size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) of[v] = static_cast<int>(b);
  return of;
}

// ---------------------------------------------------------------------------
// Folding
// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

}  // namespace

CoreGraph CoreGraph::fold(const PreGraph& pre, Rng* order_rng) {
  const int k = pre.rank;
  if (k < 1) throw std::invalid_argument("alphabet rank must be at least 1");

  std::vector<GraphEdge> edges = pre.edges;
  std::vector<char> alive(edges.size(), 1);
  UnionFind uf(pre.num_vertices);

  // incident edge ids per class, merged small-to-large on union
  std::vector<std::vector<int>> incident(pre.num_vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].origin].push_back(static_cast<int>(e));
    if (edges[e].terminus != edges[e].origin)
      incident[edges[e].terminus].push_back(static_cast<int>(e));
  }

  std::deque<int> work;
  {
    std::vector<int> init(pre.num_vertices);
    std::iota(init.begin(), init.end(), 0);
    if (order_rng) order_rng->shuffle(init);
    work.assign(init.begin(), init.end());
  }
  std::vector<char> queued(pre.num_vertices, 1);

  auto enqueue = [&](int v) {
    v = uf.find(v);
    if (!queued[v]) {
      queued[v] = 1;
      work.push_back(v);
    }
  };
  auto unite_classes = [&](int a, int b) {
    a = uf.find(a);
    b = uf.find(b);
    if (a == b) return;
    if (incident[a].size() < incident[b].size()) std::swap(a, b);
    uf.parent[b] = a;
    incident[a].insert(incident[a].end(), incident[b].begin(), incident[b].end());
    incident[b].clear();
    incident[b].shrink_to_fit();
    enqueue(a);
  };

  while (!work.empty()) {
    int c = work.front();
    work.pop_front();
    if (uf.find(c) != c) continue;  // stale entry
    queued[c] = 0;

    // first edge seen per (label, direction); collisions trigger merges
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> first_out(k + 1, -1), first_in(k + 1, -1);
      auto& inc = incident[c];
      if (order_rng) order_rng->shuffle(inc);
      for (std::size_t pos = 0; pos < inc.size(); ++pos) {
        int e = inc[pos];
        if (!alive[e]) continue;
        int o = uf.find(edges[e].origin);
        int t = uf.find(edges[e].terminus);
        int j = edges[e].label;
        if (o == c) {
          if (first_out[j] == -1) {
            first_out[j] = e;
          } else if (first_out[j] != e) {
            int keep = first_out[j];
            int tk = uf.find(edges[keep].terminus);
            alive[e] = 0;
            if (tk != t) {
              unite_classes(tk, t);
              changed = true;
              break;  // class ids may have moved; rescan
            }
            changed = true;
          }
        }
        if (t == c && alive[e]) {
          if (first_in[j] == -1) {
            first_in[j] = e;
          } else if (first_in[j] != e) {
            int keep = first_in[j];
            int ok = uf.find(edges[keep].origin);
            alive[e] = 0;
            if (ok != o) {
              unite_classes(ok, o);
              changed = true;
              break;
            }
            changed = true;
          }
        }
      }
      c = uf.find(c);
    }
  }

  // collapse to classes
  std::vector<int> class_id(pre.num_vertices, -1);
  int nv = 0;
  int base_root = uf.find(kBasepoint);
  class_id[base_root] = nv++;
  for (int v = 0; v < pre.num_vertices; ++v) {
    int r = uf.find(v);
    if (class_id[r] == -1) class_id[r] = nv++;
  }
  std::vector<GraphEdge> folded;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!alive[e]) continue;
    folded.push_back(GraphEdge{class_id[uf.find(edges[e].origin)],
                               class_id[uf.find(edges[e].terminus)], edges[e].label});
  }
  std::sort(folded.begin(), folded.end());
  folded.erase(std::unique(folded.begin(), folded.end()), folded.end());

  // keep the basepoint component
  std::vector<std::vector<int>> adj(nv);
  for (std::size_t e = 0; e < folded.size(); ++e) {
    adj[folded[e].origin].push_back(static_cast<int>(e));
    adj[folded[e].terminus].push_back(static_cast<int>(e));
  }
  std::vector<char> reach(nv, 0);
  std::queue<int> bfs;
  bfs.push(0);
  reach[0] = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int e : adj[v])
      for (int w : {folded[e].origin, folded[e].terminus})
        if (!reach[w]) {
          reach[w] = 1;
          bfs.push(w);
        }
  }

  // prune hanging trees: iteratively drop non-basepoint vertices of degree 1
  std::vector<char> edge_alive(folded.size(), 1);
  std::vector<int> degree(nv, 0);
  for (std::size_t e = 0; e < folded.size(); ++e) {
    if (!reach[folded[e].origin]) {
      edge_alive[e] = 0;
      continue;
    }
    degree[folded[e].origin]++;
    degree[folded[e].terminus]++;  // loops count twice
  }
  std::queue<int> leaves;
  for (int v = 0; v < nv; ++v)
    if (reach[v] && v != 0 && degree[v] == 1) leaves.push(v);
  std::vector<char> removed(nv, 0);
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop();
    if (removed[v] || degree[v] != 1) continue;
    removed[v] = 1;
    for (int e : adj[v]) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      degree[folded[e].origin]--;
      degree[folded[e].terminus]--;
      int other = folded[e].origin == v ? folded[e].terminus : folded[e].origin;
      if (other != 0 && !removed[other] && degree[other] == 1) leaves.push(other);
    }
  }

  std::vector<GraphEdge> final_edges;
  for (std::size_t e = 0; e < folded.size(); ++e)
    if (edge_alive[e] && reach[folded[e].origin] && !removed[folded[e].origin] &&
        !removed[folded[e].terminus])
      final_edges.push_back(folded[e]);
  // vertices left with no surviving edge vanish (except the basepoint)
  std::vector<char> touched(nv, 0);
  touched[0] = 1;
  for (auto& e : final_edges) touched[e.origin] = touched[e.terminus] = 1;
  int kept = 0;
  std::vector<int> remap(nv, -1);
  for (int v = 0; v < nv; ++v) remap[v] = (touched[v] && reach[v] && !removed[v]) ? kept++ : -1;
  for (auto& e : final_edges) {
    e.origin = remap[e.origin];
    e.terminus = remap[e.terminus];
  }
  return canonicalize(k, kept, final_edges);
}

CoreGraph CoreGraph::canonicalize(int rank, int nv, const std::vector<GraphEdge>& edges) {
  // adjacency tables on the raw numbering
  std::vector<int> out(static_cast<std::size_t>(nv) * rank, -1);
  std::vector<int> in(static_cast<std::size_t>(nv) * rank, -1);
  auto at = [&](int v, int j) { return static_cast<std::size_t>(v) * rank + (j - 1); };
  for (const auto& e : edges) {
    if (out[at(e.origin, e.label)] != -1 || in[at(e.terminus, e.label)] != -1)
      throw std::logic_error("canonicalize: graph is not folded");
    out[at(e.origin, e.label)] = e.terminus;
    in[at(e.terminus, e.label)] = e.origin;
  }

  // deterministic BFS from the basepoint: out-edges by label, then in-edges
  std::vector<int> order(nv, -1);
  int next = 0;
  std::queue<int> q;
  order[0] = next++;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int j = 1; j <= rank; ++j) {
      int t = out[at(v, j)];
      if (t >= 0 && order[t] == -1) {
        order[t] = next++;
        q.push(t);
      }
    }
    for (int j = 1; j <= rank; ++j) {
      int o = in[at(v, j)];
      if (o >= 0 && order[o] == -1) {
        order[o] = next++;
        q.push(o);
      }
    }
  }
  if (next != nv) throw std::logic_error("canonicalize: graph is not connected");

  CoreGraph g;
  g.rank_ = rank;
  g.num_vertices_ = nv;
  g.num_edges_ = static_cast<int>(edges.size());
  g.out_.assign(static_cast<std::size_t>(nv) * rank, -1);
  g.in_.assign(static_cast<std::size_t>(nv) * rank, -1);
  for (const auto& e : edges) {
    g.out_[g.idx(order[e.origin], e.label)] = order[e.terminus];
    g.in_[g.idx(order[e.terminus], e.label)] = order[e.origin];
  }
  return g;
}

// ---------------------------------------------------------------------------
// Constructors and queries
// ---------------------------------------------------------------------------

CoreGraph CoreGraph::bouquet(int k) {
  if (k < 1) throw std::invalid_argument("bouquet rank must be at least 1");
  std::vector<GraphEdge> loops;
  for (int j = 1; j <= k; ++j) loops.push_back(GraphEdge{0, 0, j});
  return canonicalize(k, 1, loops);
}

CoreGraph CoreGraph::from_generators(const std::vector<Word>& generators, int k) {
  PreGraph pre(k);
  for (const Word& w : generators) pre.add_word_loop(w);
  return fold(pre);
}

std::vector<GraphEdge> CoreGraph::edges() const {
  std::vector<GraphEdge> es;
  es.reserve(num_edges_);
  for (int v = 0; v < num_vertices_; ++v)
    for (int j = 1; j <= rank_; ++j)
      if (out_[idx(v, j)] >= 0) es.push_back(GraphEdge{v, out_[idx(v, j)], j});
  return es;
}

int CoreGraph::edge_index(int origin, int label) const {
  int count = 0;
  for (int v = 0; v < num_vertices_; ++v)
    for (int j = 1; j <= rank_; ++j)
      if (out_[idx(v, j)] >= 0) {
        if (v == origin && j == label) return count;
        ++count;
      }
  return -1;
}

bool CoreGraph::contains(const Word& w) const {
  if (w.ambient_rank() > rank_)
    throw std::invalid_argument("word rank exceeds graph alphabet");
  int v = kBasepoint;
  for (const Letter& l : w.letters()) {
    v = l.sign > 0 ? out_edge(v, l.generator) : in_edge(v, l.generator);
    if (v < 0) return false;
  }
  return v == kBasepoint;
}

CoreGraph CoreGraph::quotient(const Partition& p,
                              const std::vector<std::pair<GraphEdge, GraphEdge>>& edge_pairs) const {
  std::vector<int> of = p.block_of(num_vertices_);
  std::vector<std::pair<int, int>> extra;
  for (const auto& [e, f] : edge_pairs) {
    if (e.label != f.label)
      throw std::invalid_argument("identified edges must share a label");
    for (const GraphEdge* ge : {&e, &f})
      if (ge->origin < 0 || ge->origin >= num_vertices_ ||
          out_edge(ge->origin, ge->label) != ge->terminus)
        throw std::invalid_argument("identified edge is not in the graph");
    extra.emplace_back(e.origin, f.origin);
    extra.emplace_back(e.terminus, f.terminus);
  }
  PreGraph pre(rank_);
  pre.num_vertices = static_cast<int>(p.blocks.size());
  // keep the basepoint's block as vertex 0
  int base_block = of[kBasepoint];
  auto renum = [&](int v) {
    int b = of[v];
    if (b == base_block) return 0;
    return b < base_block ? b + 1 : b;
  };
  for (const auto& e : edges()) pre.add_edge(renum(e.origin), renum(e.terminus), e.label);
  if (!extra.empty()) {
    // translate the edge identifications into vertex identifications
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(extra.size());
    for (auto [a, b] : extra) pairs.emplace_back(renum(a), renum(b));
    Partition q = Partition::from_pairs(pre.num_vertices, pairs);
    std::vector<int> qof = q.block_of(pre.num_vertices);
    int qbase = qof[0];
    auto renum2 = [&](int v) {
      int b = qof[v];
      if (b == qbase) return 0;
      return b < qbase ? b + 1 : b;
    };
    PreGraph pre2(rank_);
    pre2.num_vertices = static_cast<int>(q.blocks.size());
    for (const auto& e : pre.edges) pre2.add_edge(renum2(e.origin), renum2(e.terminus), e.label);
    return fold(pre2);
  }
  return fold(pre);
}

CoreGraph CoreGraph::quotient_merging(int u, int v) const {
  if (u == v) throw std::invalid_argument("refusing to merge a vertex with itself");
  return quotient(Partition::from_pairs(num_vertices_, {{u, v}}));
}

std::vector<Word> CoreGraph::spanning_basis() const {
  // BFS spanning tree in the canonical traversal order
  std::vector<std::vector<Letter>> path_to(num_vertices_);
  std::vector<char> visited(num_vertices_, 0);
  std::vector<std::pair<int, int>> tree_edges;  // (origin, label)
  std::queue<int> q;
  visited[kBasepoint] = 1;
  q.push(kBasepoint);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int j = 1; j <= rank_; ++j) {
      int t = out_edge(v, j);
      if (t >= 0 && !visited[t]) {
        visited[t] = 1;
        path_to[t] = path_to[v];
        path_to[t].emplace_back(j, +1);
        tree_edges.emplace_back(v, j);
        q.push(t);
      }
    }
    for (int j = 1; j <= rank_; ++j) {
      int o = in_edge(v, j);
      if (o >= 0 && !visited[o]) {
        visited[o] = 1;
        path_to[o] = path_to[v];
        path_to[o].emplace_back(j, -1);
        tree_edges.emplace_back(o, j);
        q.push(o);
      }
    }
  }
  auto is_tree = [&](int origin, int label) {
    return std::find(tree_edges.begin(), tree_edges.end(), std::make_pair(origin, label)) !=
           tree_edges.end();
  };
  std::vector<Word> basis;
  for (const auto& e : edges()) {
    if (is_tree(e.origin, e.label)) continue;
    std::vector<Letter> ls = path_to[e.origin];
    ls.emplace_back(e.label, +1);
    std::vector<Letter> back = path_to[e.terminus];
    for (auto it = back.rbegin(); it != back.rend(); ++it) ls.push_back(it->inverse());
    basis.emplace_back(std::move(ls), rank_);
  }
  return basis;
}

std::string CoreGraph::serialize() const {
  std::ostringstream out;
  out << "v " << num_vertices_ << " basepoint=0\n";
  for (const auto& e : edges())
    out << "e " << e.origin << ' ' << e.terminus << ' ' << e.label << '\n';
  return out.str();
}

CoreGraph CoreGraph::parse(const std::string& text, int ambient_rank) {
  std::istringstream in(text);
  std::string line;
  int nv = -1;
  int max_label = 0;
  std::vector<GraphEdge> es;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      std::string bp;
      if (!(ls >> nv >> bp) || bp != "basepoint=0" || nv < 1)
        throw std::invalid_argument("bad graph header: '" + line + "'");
    } else if (tag == "e") {
      GraphEdge e;
      if (!(ls >> e.origin >> e.terminus >> e.label))
        throw std::invalid_argument("bad edge line: '" + line + "'");
      if (nv < 0 || e.origin < 0 || e.origin >= nv || e.terminus < 0 || e.terminus >= nv ||
          e.label < 1)
        throw std::invalid_argument("edge out of range: '" + line + "'");
      max_label = std::max(max_label, e.label);
      es.push_back(e);
    } else {
      throw std::invalid_argument("unknown line in graph text: '" + line + "'");
    }
  }
  if (nv < 1) throw std::invalid_argument("graph text has no vertex header");
  int k = ambient_rank > 0 ? ambient_rank : std::max(max_label, 1);
  if (max_label > k) throw std::invalid_argument("edge label exceeds the ambient rank");
  CoreGraph g;
  try {
    g = canonicalize(k, nv, es);
  } catch (const std::logic_error& err) {
    throw std::invalid_argument(err.what());  // unfolded or disconnected input
  }
  // reject graphs with hanging trees
  for (int v = 1; v < g.num_vertices(); ++v) {
    int deg = 0;
    for (int j = 1; j <= k; ++j) {
      if (g.out_edge(v, j) >= 0) ++deg;
      if (g.in_edge(v, j) >= 0) ++deg;
    }
    if (deg < 2) throw std::invalid_argument("graph has a hanging tree (non-core)");
  }
  return g;
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

std::optional<GraphMorphism> find_morphism(const CoreGraph& from, const CoreGraph& to) {
  if (from.rank_alphabet() != to.rank_alphabet())
    throw std::invalid_argument("morphism requires equal ambient ranks");
  const int k = from.rank_alphabet();
  std::vector<int> f(from.num_vertices(), -1);
  f[CoreGraph::kBasepoint] = CoreGraph::kBasepoint;
  std::queue<int> q;
  q.push(CoreGraph::kBasepoint);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int j = 1; j <= k; ++j) {
      int t = from.out_edge(u, j);
      if (t >= 0) {
        int ft = to.out_edge(f[u], j);
        if (ft < 0) return std::nullopt;
        if (f[t] == -1) {
          f[t] = ft;
          q.push(t);
        }
      }
      int o = from.in_edge(u, j);
      if (o >= 0) {
        int fo = to.in_edge(f[u], j);
        if (fo < 0) return std::nullopt;
        if (f[o] == -1) {
          f[o] = fo;
          q.push(o);
        }
      }
    }
  }
  // every edge must map to an edge, consistently with the vertex map
  for (const auto& e : from.edges())
    if (to.out_edge(f[e.origin], e.label) != f[e.terminus]) return std::nullopt;

  GraphMorphism m;
  m.domain = from;
  m.codomain = to;
  m.vertex_map = std::move(f);
  std::vector<char> vhit(to.num_vertices(), 0);
  std::vector<char> ehit(to.num_edges(), 0);
  for (int u = 0; u < from.num_vertices(); ++u) vhit[m.vertex_map[u]] = 1;
  for (const auto& e : from.edges())
    ehit[to.edge_index(m.vertex_map[e.origin], e.label)] = 1;
  m.surjective = std::count(vhit.begin(), vhit.end(), 1) == to.num_vertices() &&
                 std::count(ehit.begin(), ehit.end(), 1) == to.num_edges();
  return m;
}

CoreGraph morphism_image(const GraphMorphism& m) {
  // image subgraph of the codomain; it is itself a core graph
  std::vector<int> keep(m.codomain.num_vertices(), -1);
  int nv = 0;
  keep[CoreGraph::kBasepoint] = nv++;
  for (int u = 0; u < m.domain.num_vertices(); ++u)
    if (keep[m.vertex_map[u]] == -1) keep[m.vertex_map[u]] = nv++;
  std::vector<GraphEdge> es;
  for (const auto& e : m.domain.edges())
    es.push_back(GraphEdge{keep[m.vertex_map[e.origin]], keep[m.vertex_map[e.terminus]], e.label});
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  PreGraph pre(m.codomain.rank_alphabet());
  pre.num_vertices = nv;
  pre.edges = std::move(es);
  return CoreGraph::fold(pre);  // already folded and core; this canonicalizes
}

}  // namespace stallings
