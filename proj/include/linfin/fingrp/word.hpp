#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace linfin::fingrp {

struct Letter {
  std::size_t gen;  // 0-based generator index
  long exp;         // nonzero
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

// Freely reduced product of generator powers; adjacent letters have
// distinct generators.
class Word {
 public:
  Word() = default;
  static Word generator(std::size_t i, long e = 1);
  // From signed letters +-(i+1).
  static Word from_signed(const std::vector<int>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  // Sum of |exp|.
  std::size_t length() const;
  std::size_t max_generator() const;

  void append(std::size_t gen, long exp);
  Word operator*(const Word& o) const;
  Word inverse() const;
  std::vector<int> to_signed() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

 private:
  std::vector<Letter> letters_;
};

// Generator names: a, b, ..., z for up to 26 generators, else g1, g2, ...
std::vector<std::string> generator_names(std::size_t r);
std::string to_string(const Word& w, const std::vector<std::string>& names);
// Accepts "1" or "" for the empty word and products like "a^2*b^-1*a".
// Throws ParseError on malformed input or unknown names.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

// Product of generator powers; `inverses[i]` is the inverse of `gens[i]`.
template <class M>
M evaluate(const Word& w, const std::vector<M>& gens, const std::vector<M>& inverses, M identity) {
  for (const auto& l : w.letters()) {
    const M& g = l.exp > 0 ? gens[l.gen] : inverses[l.gen];
    for (long k = l.exp > 0 ? l.exp : -l.exp; k > 0; --k) identity = identity * g;
  }
  return identity;
}

}  // namespace linfin::fingrp
