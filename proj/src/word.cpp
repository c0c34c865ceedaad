#include "stallings/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace stallings {

std::vector<Letter> reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(const std::vector<Letter>& letters, int ambient_rank)
    : letters_(reduce(letters)), ambient_rank_(ambient_rank) {
  if (ambient_rank < 0) throw std::invalid_argument("ambient rank must be nonnegative");
  for (const Letter& l : letters_) {
    if (l.generator < 1 || l.generator > ambient_rank_)
      throw std::invalid_argument("generator index " + std::to_string(l.generator) +
                                  " outside ambient rank " + std::to_string(ambient_rank_));
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

Word Word::identity(int ambient_rank) { return Word({}, ambient_rank); }

Word Word::generator(int index, int ambient_rank) {
  return Word({Letter(index, +1)}, ambient_rank);
}

namespace {

void parse_token(const std::string& tok, std::vector<Letter>& out) {
  if ((tok[0] == 'x' || tok[0] == 'X') && tok.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(tok[1]))) {
    std::size_t pos = 1;
    for (; pos < tok.size(); ++pos)
      if (!std::isdigit(static_cast<unsigned char>(tok[pos])))
        throw std::invalid_argument("bad word token: '" + tok + "'");
    int idx = 0;
    try {
      idx = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator index in token: '" + tok + "'");
    }
    if (idx < 1) throw std::invalid_argument("generator index must be positive: '" + tok + "'");
    out.emplace_back(idx, tok[0] == 'x' ? +1 : -1);
    return;
  }
  // compact alias: a..z = x1..x26, A..Z = inverses, no separators
  for (char c : tok) {
    if (c >= 'a' && c <= 'z')
      out.emplace_back(c - 'a' + 1, +1);
    else if (c >= 'A' && c <= 'Z')
      out.emplace_back(c - 'A' + 1, -1);
    else
      throw std::invalid_argument("bad word token: '" + tok + "'");
  }
}

}  // namespace

Word Word::parse(const std::string& text, int ambient_rank) {
  if (ambient_rank < 1) throw std::invalid_argument("ambient rank must be at least 1");
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;  // identity token
    parse_token(tok, letters);
  }
  return Word(letters, ambient_rank);
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back(it->inverse());
  Word w;
  w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
  w.ambient_rank_ = ambient_rank_;
  return w;
}

Word Word::operator*(const Word& rhs) const {
  if (ambient_rank_ != rhs.ambient_rank_)
    throw std::invalid_argument("cannot multiply words of different ambient ranks");
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(cat, ambient_rank_);
}

Word Word::pow(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  int reps = exponent < 0 ? -exponent : exponent;
  Word acc = Word::identity(ambient_rank_);
  for (int i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

Word Word::substitute(const std::vector<Word>& images) const {
  if (static_cast<int>(images.size()) != ambient_rank_)
    throw std::invalid_argument("substitute: expected " + std::to_string(ambient_rank_) +
                                " images, got " + std::to_string(images.size()));
  int target_rank = images.empty() ? 0 : images.front().ambient_rank();
  std::vector<Letter> out;
  for (const Word& im : images)
    if (im.ambient_rank() != target_rank)
      throw std::invalid_argument("substitute: images have mixed ambient ranks");
  for (const Letter& l : letters_) {
    const Word& im = images[static_cast<std::size_t>(l.generator) - 1];
    if (l.sign > 0) {
      out.insert(out.end(), im.letters().begin(), im.letters().end());
    } else {
      Word inv = im.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return Word(out, target_rank);
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += letters_[i].sign > 0 ? 'x' : 'X';
    s += std::to_string(letters_[i].generator);
  }
  return s;
}

}  // namespace stallings
