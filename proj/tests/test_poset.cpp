#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "stallings/algebraic.hpp"
#include "stallings/fringe.hpp"
#include "stallings/rng.hpp"

using namespace stallings;

namespace {

CoreGraph graph_of(const std::vector<std::string>& words, int k) {
  std::vector<Word> ws;
  for (const auto& t : words) ws.push_back(Word::parse(t, k));
  return CoreGraph::from_generators(ws, k);
}

const char* kCommutator = "x1 x2 X1 X2";

Word random_reduced_word(Rng& rng, int k, int max_len) {
  std::vector<Letter> ls;
  int len = static_cast<int>(rng.below(max_len)) + 1;
  for (int i = 0; i < len; ++i)
    ls.emplace_back(static_cast<int>(rng.below(k)) + 1, rng.below(2) ? +1 : -1);
  return Word(std::move(ls), k);
}

// small Nielsen-style automorphisms of F_2 for basis-change tests
std::vector<Word> random_automorphism(Rng& rng) {
  std::vector<Word> phi = {Word::parse("x1", 2), Word::parse("x2", 2)};
  int moves = 1 + static_cast<int>(rng.below(3));
  for (int m = 0; m < moves; ++m) {
    std::vector<Word> next = phi;
    switch (rng.below(4)) {
      case 0:  // x1 -> x1 x2
        next[0] = phi[0] * phi[1];
        break;
      case 1:  // x2 -> x2 x1
        next[1] = phi[1] * phi[0];
        break;
      case 2:  // swap
        std::swap(next[0], next[1]);
        break;
      case 3:  // invert x1
        next[0] = phi[0].inverse();
        break;
    }
    phi = next;
  }
  return phi;
}

}  // namespace

TEST_CASE("immediate quotients: worked counts") {
  CHECK(immediate_quotients(graph_of({kCommutator}, 2)).size() == 4);

  CoreGraph sq = graph_of({"x1 x1"}, 2);
  auto iq = immediate_quotients(sq);
  REQUIRE(iq.size() == 1);
  CHECK(iq[0] == graph_of({"x1"}, 2));

  CHECK_THROWS_AS(immediate_quotients(CoreGraph::from_generators({}, 2)),
                  std::invalid_argument);
}

TEST_CASE("bouquet has no immediate quotients and a singleton fringe") {
  CoreGraph b2 = CoreGraph::bouquet(2);
  CHECK(immediate_quotients(b2).empty());
  FringePoset poset(b2);
  CHECK(poset.size() == 1);
  CHECK(poset.distance(0) == 0);
}

TEST_CASE("fringe of the commutator has seven nodes, 4 at distance 1, 2 at distance 2") {
  FringePoset poset(graph_of({kCommutator}, 2));
  CHECK(poset.size() == 7);
  int d1 = 0, d2 = 0;
  for (int i = 1; i < poset.size(); ++i) {
    if (poset.distance(i) == 1) ++d1;
    if (poset.distance(i) == 2) ++d2;
  }
  CHECK(d1 == 4);
  CHECK(d2 == 2);
  CHECK(poset.distance(poset.find(CoreGraph::bouquet(2))) == 2);
}

TEST_CASE("fringe of <x1^2> is the 2-chain") {
  FringePoset poset(graph_of({"x1 x1"}, 2));
  CHECK(poset.size() == 2);
  CHECK(poset.distance(1) == 1);
  CHECK(poset.node(1) == graph_of({"x1"}, 2));
  CHECK(distance(poset, graph_of({"x1"}, 2)) == 1);
  CHECK(distance(poset, poset.root()) == 0);
  CHECK_THROWS_AS(distance(poset, CoreGraph::bouquet(2)), std::invalid_argument);
}

TEST_CASE("rank difference bounds the distance, which bounds the rank") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    CoreGraph g = CoreGraph::from_generators({random_reduced_word(rng, 2, 6)}, 2);
    if (g.is_trivial()) continue;
    FringePoset poset(g);
    for (int i = 0; i < poset.size(); ++i) {
      CHECK(poset.rank(i) - poset.rank(0) <= poset.distance(i));
      CHECK(poset.distance(i) <= poset.rank(i));
    }
  }
}

TEST_CASE("BFS distance equals the exhaustive partition-norm minimum") {
  Rng rng(202);
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 12; ++trial) {
    CoreGraph g = CoreGraph::from_generators(
        {random_reduced_word(rng, 2, 6), random_reduced_word(rng, 2, 4)}, 2);
    if (g.is_trivial() || g.num_vertices() > 6) continue;
    ++tested;
    FringePoset poset(g);
    // every fringe node arises from some partition, at matching distance
    for (int i = 0; i < poset.size(); ++i)
      CHECK(oracles::partition_distance(g, poset.node(i)) == poset.distance(i));
    // and partition enumeration finds no quotients outside the fringe
    auto keys = oracles::all_quotients_by_partitions(g);
    CHECK(static_cast<int>(keys.size()) == poset.size());
    for (const auto& key : keys) CHECK(poset.find(CoreGraph::parse(key, 2)) >= 0);
  }
  CHECK(tested > 0);
}

TEST_CASE("covering order is consistent with surjective morphisms") {
  FringePoset poset(graph_of({kCommutator}, 2));
  for (int i = 0; i < poset.size(); ++i)
    for (int j = 0; j < poset.size(); ++j) {
      auto m = find_morphism(poset.node(i), poset.node(j));
      bool surj = m.has_value() && m->surjective;
      CHECK(surj == poset.covers(i, j));
    }
}

TEST_CASE("free factor decisions") {
  CoreGraph f2 = CoreGraph::bouquet(2);
  CHECK(is_free_factor(graph_of({"x1"}, 2), f2));
  CHECK(is_free_factor(graph_of({"x1 x2 x2"}, 2), f2));  // no injective morphism, still ff
  CHECK_FALSE(is_free_factor(graph_of({kCommutator}, 2), f2));
  CHECK_FALSE(is_free_factor(graph_of({"x1 x1"}, 2), graph_of({"x1"}, 2)));
  // the trivial subgroup is a free factor of everything
  CHECK(is_free_factor(CoreGraph::from_generators({}, 2), f2));
  // not a subgroup at all
  CHECK_THROWS_AS(is_free_factor(graph_of({"x2"}, 2), graph_of({"x1"}, 2)),
                  std::invalid_argument);
}

TEST_CASE("algebraic extensions of the worked examples") {
  // commutator: AE = {H, F_2}
  CoreGraph comm = graph_of({kCommutator}, 2);
  auto ae = algebraic_extensions(comm);
  REQUIRE(ae.size() == 2);
  CHECK(ae[0] == comm);
  CHECK((ae[1] == CoreGraph::bouquet(2) || ae[0] == CoreGraph::bouquet(2)));

  // <x1^2>: AE = {<x1^2>, <x1>}
  auto ae2 = algebraic_extensions(graph_of({"x1 x1"}, 2));
  REQUIRE(ae2.size() == 2);
  CHECK(ae2[1] == graph_of({"x1"}, 2));

  // <x1>: primitive, AE = {<x1>}
  CHECK(algebraic_extensions(graph_of({"x1"}, 2)).size() == 1);
}

TEST_CASE("primitivity profiles of the worked examples") {
  AlgebraicProfile comm = primitivity_profile(graph_of({kCommutator}, 2));
  REQUIRE(comm.primitivity_rank.has_value());
  CHECK(*comm.primitivity_rank == 2);
  REQUIRE(comm.critical.size() == 1);
  CHECK(comm.fringe.node(comm.critical[0]) == CoreGraph::bouquet(2));

  AlgebraicProfile sq = primitivity_profile(graph_of({"x1 x1"}, 2));
  REQUIRE(sq.primitivity_rank.has_value());
  CHECK(*sq.primitivity_rank == 1);
  REQUIRE(sq.critical.size() == 1);
  CHECK(sq.fringe.node(sq.critical[0]) == graph_of({"x1"}, 2));

  AlgebraicProfile quads = primitivity_profile(graph_of({"x1 x1 x2 x2"}, 2));
  REQUIRE(quads.primitivity_rank.has_value());
  CHECK(*quads.primitivity_rank == 2);

  AlgebraicProfile prim = primitivity_profile(graph_of({"x1"}, 2));
  CHECK(prim.is_primitive());
  CHECK(prim.critical.empty());
}

TEST_CASE("primitivity rank of x1^2...xk^2 equals k") {
  for (int k = 2; k <= 4; ++k) {
    std::string text;
    for (int i = 1; i <= k; ++i)
      text += "x" + std::to_string(i) + " x" + std::to_string(i) + " ";
    AlgebraicProfile p = primitivity_profile(graph_of({text}, k));
    REQUIRE(p.primitivity_rank.has_value());
    CHECK(*p.primitivity_rank == k);
  }
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(Word::parse("x1", 2)));
  CHECK(is_primitive(Word::parse("x1 x2 x2", 2)));
  CHECK_FALSE(is_primitive(Word::parse(kCommutator, 2)));
  CHECK_FALSE(is_primitive(Word::parse("x1 x1", 2)));
  CHECK_THROWS_AS(is_primitive(Word::identity(2)), std::invalid_argument);
}

TEST_CASE("pi takes values in {1..k} union infinity on random words") {
  Rng rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_reduced_word(rng, 2, 6);
    if (w.is_identity()) continue;
    AlgebraicProfile p =
        primitivity_profile(CoreGraph::from_generators({w}, 2));
    if (p.primitivity_rank) {
      CHECK(*p.primitivity_rank >= 1);
      CHECK(*p.primitivity_rank <= 2);
    }
  }
}

TEST_CASE("algebraic extensions persist in the fringe after a basis change") {
  Rng rng(404);
  for (int trial = 0; trial < 12; ++trial) {
    Word w = random_reduced_word(rng, 2, 5);
    CoreGraph h = CoreGraph::from_generators({w}, 2);
    if (h.is_trivial()) continue;
    std::vector<Word> phi = random_automorphism(rng);
    CoreGraph h_phi = CoreGraph::from_generators({w.substitute(phi)}, 2);
    if (h_phi.is_trivial()) continue;
    FringePoset phi_fringe(h_phi);
    for (const CoreGraph& ae : algebraic_extensions(h)) {
      std::vector<Word> mapped;
      for (const Word& b : ae.spanning_basis()) mapped.push_back(b.substitute(phi));
      CHECK(phi_fringe.find(CoreGraph::from_generators(mapped, 2)) >= 0);
    }
  }
}

TEST_CASE("algebraic extensions are transitive on sampled chains") {
  Rng rng(505);
  int chains = 0;
  for (int trial = 0; trial < 30 && chains < 10; ++trial) {
    Word w = random_reduced_word(rng, 2, 6);
    CoreGraph h = CoreGraph::from_generators({w}, 2);
    if (h.is_trivial()) continue;
    FringePoset hf(h);
    auto h_ae = algebraic_extension_indices(hf);
    std::set<std::string> h_ae_keys;
    for (int i : h_ae) h_ae_keys.insert(hf.node(i).serialize());
    for (int mi : h_ae) {
      if (mi == 0) continue;
      const CoreGraph& m = hf.node(mi);
      for (const CoreGraph& j : algebraic_extensions(m)) {
        if (j == m) continue;
        ++chains;
        CHECK(h_ae_keys.count(j.serialize()) == 1);
      }
    }
  }
  CHECK(chains > 0);
}

TEST_CASE("every extension factors through a unique algebraic closure") {
  Rng rng(606);
  int sampled = 0;
  for (int trial = 0; trial < 40 && sampled < 12; ++trial) {
    Word w = random_reduced_word(rng, 2, 6);
    CoreGraph h = CoreGraph::from_generators({w}, 2);
    if (h.is_trivial()) continue;
    FringePoset hf(h);
    if (hf.size() < 2) continue;
    int ji = 1 + static_cast<int>(rng.below(hf.size() - 1));
    const CoreGraph& j = hf.node(ji);
    ++sampled;
    auto ae = algebraic_extension_indices(hf);
    std::vector<int> closures;
    for (int li = 0; li < hf.size(); ++li) {
      if (!find_morphism(hf.node(li), j)) continue;  // need L <= J
      bool l_algebraic = std::find(ae.begin(), ae.end(), li) != ae.end();
      if (l_algebraic && is_free_factor(hf.node(li), j)) closures.push_back(li);
    }
    REQUIRE(closures.size() == 1);
    // the closure contains every intermediate algebraic extension
    for (int ni : ae)
      if (find_morphism(hf.node(ni), j))
        CHECK(find_morphism(hf.node(ni), hf.node(closures[0])).has_value());
  }
  CHECK(sampled > 0);
}

TEST_CASE("covering in one basis does not make an extension algebraic") {
  CoreGraph h = graph_of({"x1 x1 x2 x2"}, 2);
  CoreGraph j = graph_of({"x1 x1 x2 x2", "x1 x2"}, 2);
  FringePoset hf(h);
  int ji = hf.find(j);
  REQUIRE(ji >= 0);  // H does X-cover J in this basis
  auto ae = algebraic_extension_indices(hf);
  CHECK(std::find(ae.begin(), ae.end(), ji) == ae.end());
}
