#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stallings/rng.hpp"
#include "stallings/word.hpp"

using namespace stallings;

namespace {

std::vector<Letter> random_letters(Rng& rng, int k, int len) {
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i)
    ls.emplace_back(static_cast<int>(rng.below(k)) + 1, rng.below(2) ? +1 : -1);
  return ls;
}

Word random_reduced_word(Rng& rng, int k, int max_len) {
  return Word(random_letters(rng, k, static_cast<int>(rng.below(max_len + 1))), k);
}

}  // namespace

TEST_CASE("parsing reduces and respects the grammar") {
  CHECK(Word::parse("x1 X1 x2", 2) == Word::parse("x2", 2));
  CHECK(Word::parse("x1 X1 x2", 2).length() == 1);

  Word comm = Word::parse("x1 x2 X1 X2", 2);
  CHECK(comm.length() == 4);
  CHECK(comm.str() == "x1 x2 X1 X2");

  CHECK(Word::parse("x1 x2 x2 X2 x1", 2) == Word::parse("x1 x2 x1", 2));
  CHECK(Word::parse("x1 x2 x2 X2 x1", 2).length() == 3);

  // compact alias
  CHECK(Word::parse("abAB", 2) == comm);
  CHECK(Word::parse("aA", 1).is_identity());

  CHECK_THROWS_AS(Word::parse("x3", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("x0", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("y1", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("x1", 0), std::invalid_argument);
}

TEST_CASE("parse-print round trip is idempotent") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_reduced_word(rng, 3, 12);
    Word again = Word::parse(w.str(), 3);
    CHECK(again == w);
    CHECK(again.str() == w.str());
  }
}

TEST_CASE("free reduction") {
  CHECK(reduce({}).empty());
  CHECK(Word({Letter(1, 1), Letter(1, -1), Letter(1, 1)}, 1) == Word::generator(1, 1));
  CHECK(Word({Letter(1, 1), Letter(2, 1), Letter(2, -1), Letter(1, 1)}, 2) ==
        Word::parse("x1 x1", 2));
}

TEST_CASE("reduction is idempotent, shortening, and parity preserving") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto raw = random_letters(rng, 2, static_cast<int>(rng.below(16)));
    auto red = reduce(raw);
    CHECK(reduce(red) == red);
    CHECK(red.size() <= raw.size());
    CHECK((raw.size() - red.size()) % 2 == 0);
  }
}

TEST_CASE("substitution") {
  Word w = Word::parse("x1 x2", 2);
  std::vector<Word> id = {Word::generator(1, 2), Word::generator(2, 2)};
  CHECK(w.substitute(id) == w);

  Word x1 = Word::parse("x1", 2);
  std::vector<Word> images = {Word::parse("x1 x2", 2), Word::parse("x2", 2)};
  CHECK(x1.substitute(images) == Word::parse("x1 x2", 2));

  CHECK(Word::parse("x1 X2", 2).substitute(images) == Word::parse("x1", 2));

  CHECK_THROWS_AS(x1.substitute({Word::generator(1, 2)}), std::invalid_argument);
}

TEST_CASE("substitution respects concatenation") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_reduced_word(rng, 2, 8);
    Word v = random_reduced_word(rng, 2, 8);
    std::vector<Word> images = {random_reduced_word(rng, 3, 5), random_reduced_word(rng, 3, 5)};
    CHECK((u * v).substitute(images) == u.substitute(images) * v.substitute(images));
  }
}

TEST_CASE("inverse and powers") {
  Word w = Word::parse("x1 x2 X1", 2);
  CHECK((w * w.inverse()).is_identity());
  CHECK(w.pow(0).is_identity());
  CHECK(w.pow(3) == w * w * w);
  CHECK(w.pow(-2) == (w * w).inverse());
}

TEST_CASE("identity word handling") {
  Word e = Word::identity(2);
  CHECK(e.is_identity());
  CHECK(e.str() == "1");
  CHECK(Word::parse("1", 2) == e);
  Word w = Word::parse("x1", 2);
  CHECK(e * w == w);
  CHECK(w * e == w);
}
