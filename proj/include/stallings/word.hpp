#ifndef STALLINGS_WORD_HPP
#define STALLINGS_WORD_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace stallings {

/// A basis letter x_i (sign = +1) or its formal inverse X_i (sign = -1).
struct Letter {
  int generator = 1;  // 1-based index into the ambient basis
  int sign = +1;      // +1 or -1

  Letter() = default;
  Letter(int gen, int sgn) : generator(gen), sign(sgn) {}

  Letter inverse() const { return Letter(generator, -sign); }
  bool cancels(const Letter& other) const {
    return generator == other.generator && sign == -other.sign;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Free reduction: iterated cancellation of adjacent inverse pairs.
/// The result is independent of the cancellation order.
std::vector<Letter> reduce(const std::vector<Letter>& letters);

/// A freely reduced word over the basis {x_1, ..., x_k}.
///
/// Words carry their ambient rank k explicitly so that subgroup contexts
/// are unambiguous. The empty word (identity) is valid. Immutable.
class Word {
 public:
  Word() = default;  // identity in rank 0
  Word(const std::vector<Letter>& letters, int ambient_rank);

  static Word identity(int ambient_rank);
  static Word generator(int index, int ambient_rank);

  /// Parses the word grammar: whitespace-separated tokens, each either
  /// ('x'|'X')<digits> or a run of compact-alias letters (a..z = x1..x26,
  /// A..Z their inverses). Throws std::invalid_argument on syntax errors
  /// or generator indices exceeding k.
  static Word parse(const std::string& text, int ambient_rank);

  const std::vector<Letter>& letters() const { return letters_; }
  int ambient_rank() const { return ambient_rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;  // concatenation followed by reduction
  Word pow(int exponent) const;

  /// Image of this word under x_i -> images[i-1], freely reduced.
  /// images.size() must equal ambient_rank(); all images must share a rank.
  Word substitute(const std::vector<Word>& images) const;

  /// Canonical textual form, e.g. "x1 x2 X1 X2"; the identity prints as "1".
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  int ambient_rank_ = 0;
};

}  // namespace stallings

#endif
