#include "stallings/algebraic.hpp"

#include <limits>
#include <stdexcept>

namespace stallings {

bool is_free_factor(const CoreGraph& h, const CoreGraph& j) {
  if (h.is_trivial()) return true;
  auto m = find_morphism(h, j);
  if (!m) throw std::invalid_argument("not a subgroup of the target");
  CoreGraph image = morphism_image(*m);
  // h <=ff j  iff  h <=ff image (the image is intermediate and embeds in j,
  // so it is a free factor of j; free factors pass to intermediate groups)
  FringePoset poset(h);
  int idx = poset.find(image);
  if (idx < 0) throw std::logic_error("morphism image missing from the fringe");
  return poset.distance(idx) == image.rank() - h.rank();
}

std::vector<int> algebraic_extension_indices(const FringePoset& poset) {
  std::vector<char> algebraic(poset.size(), 1);
  for (int i = 0; i < poset.size(); ++i)
    for (int j : poset.immediate(i))
      if (poset.rank(i) < poset.rank(j)) algebraic[j] = 0;
  std::vector<int> out;
  for (int i = 0; i < poset.size(); ++i)
    if (algebraic[i]) out.push_back(i);
  return out;
}

std::vector<CoreGraph> algebraic_extensions(const CoreGraph& root) {
  FringePoset poset(root);
  std::vector<CoreGraph> out;
  for (int i : algebraic_extension_indices(poset)) out.push_back(poset.node(i));
  return out;
}

std::vector<CoreGraph> AlgebraicProfile::critical_graphs() const {
  std::vector<CoreGraph> out;
  for (int i : critical) out.push_back(fringe.node(i));
  return out;
}

AlgebraicProfile primitivity_profile(const CoreGraph& root) {
  if (root.is_trivial())
    throw std::invalid_argument("primitivity profile of the trivial subgroup is undefined");
  AlgebraicProfile p{root, FringePoset(root), {}, std::nullopt, {}};
  p.algebraic = algebraic_extension_indices(p.fringe);
  int best = std::numeric_limits<int>::max();
  for (int i : p.algebraic) {
    if (i == 0) continue;  // the subject itself is not a proper extension
    best = std::min(best, p.fringe.rank(i));
  }
  if (best == std::numeric_limits<int>::max()) return p;
  p.primitivity_rank = best;
  for (int i : p.algebraic)
    if (i != 0 && p.fringe.rank(i) == best) p.critical.push_back(i);
  return p;
}

bool is_primitive(const Word& w) {
  if (w.is_identity()) throw std::invalid_argument("the identity word has no primitivity rank");
  CoreGraph g = CoreGraph::from_generators({w}, w.ambient_rank());
  return primitivity_profile(g).is_primitive();
}

}  // namespace stallings
