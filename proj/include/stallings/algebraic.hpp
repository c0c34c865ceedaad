#ifndef STALLINGS_ALGEBRAIC_HPP
#define STALLINGS_ALGEBRAIC_HPP

#include <optional>
#include <vector>

#include "stallings/fringe.hpp"

namespace stallings {

/// Decides whether the subgroup of h is a free factor of the subgroup of j.
/// Requires h's subgroup to be contained in j's (throws otherwise). The
/// trivial subgroup is a free factor of everything.
///
/// Method: factor the morphism h -> j through its embedded image M (so h
/// X-covers M and M embeds in j); then h <=ff j iff the covering distance
/// rho_X(h, M) equals rank(M) - rank(h).
bool is_free_factor(const CoreGraph& h, const CoreGraph& j);

/// Node indices of the algebraic extensions of the root among the fringe:
/// the nodes that are not immediate quotients of any lower-rank fringe node.
/// Always contains the root (index 0).
std::vector<int> algebraic_extension_indices(const FringePoset& poset);

/// The algebraic extensions of root's subgroup, as core graphs.
std::vector<CoreGraph> algebraic_extensions(const CoreGraph& root);

/// Primitivity data of a subgroup: its algebraic extensions, the minimal
/// rank of a proper one (the primitivity rank; nullopt = infinity), and the
/// critical set attaining it.
struct AlgebraicProfile {
  CoreGraph subject;
  FringePoset fringe;
  std::vector<int> algebraic;            // node indices, includes 0
  std::optional<int> primitivity_rank;   // nullopt when no proper algebraic extension
  std::vector<int> critical;             // node indices of minimal-rank proper extensions

  bool is_primitive() const { return !primitivity_rank.has_value(); }
  int reduced_primitivity_rank() const { return *primitivity_rank - 1; }
  std::vector<CoreGraph> critical_graphs() const;
};

AlgebraicProfile primitivity_profile(const CoreGraph& root);

/// pi(w) = pi(<w>); true iff no proper algebraic extension exists.
bool is_primitive(const Word& w);

}  // namespace stallings

#endif
