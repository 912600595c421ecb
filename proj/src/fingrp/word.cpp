#include "linfin/fingrp/word.hpp"

#include <cctype>
#include <cstdlib>

#include "linfin/core/errors.hpp"

namespace linfin::fingrp {

Word Word::generator(std::size_t i, long e) {
  Word w;
  w.append(i, e);
  return w;
}

Word Word::from_signed(const std::vector<int>& letters) {
  Word w;
  for (int s : letters) {
    if (s == 0) throw DomainError("signed letter 0");
    w.append(static_cast<std::size_t>(std::abs(s)) - 1, s > 0 ? 1 : -1);
  }
  return w;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp > 0 ? l.exp : -l.exp);
  return n;
}

std::size_t Word::max_generator() const {
  std::size_t m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen + 1);
  return m;
}

void Word::append(std::size_t gen, long exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  for (const auto& l : o.letters_) w.append(l.gen, l.exp);
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->gen, -it->exp);
  return w;
}

std::vector<int> Word::to_signed() const {
  std::vector<int> out;
  for (const auto& l : letters_) {
    int s = static_cast<int>(l.gen) + 1;
    for (long k = l.exp > 0 ? l.exp : -l.exp; k > 0; --k) out.push_back(l.exp > 0 ? s : -s);
  }
  return out;
}

std::vector<std::string> generator_names(std::size_t r) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i)
    names.push_back(r <= 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i + 1));
  return names;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w.letters()) {
    if (!s.empty()) s += "*";
    s += names.at(l.gen);
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  Word w;
  skip_ws();
  if (i == text.size()) return w;
  if (text.substr(i) == "1") return w;
  for (;;) {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError(start, "expected a generator name");
    std::string name(text.substr(start, i - start));
    std::size_t gen = names.size();
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) gen = k;
    if (gen == names.size()) throw ParseError(start, "unknown generator '" + name + "'");
    long exp = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      std::size_t num = i;
      if (i < text.size() && text[i] == '-') ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (digits == i) throw ParseError(num, "expected an integer exponent");
      exp = std::stol(std::string(text.substr(num, i - num)));
    }
    w.append(gen, exp);
    skip_ws();
    if (i == text.size()) return w;
    if (text[i] != '*') throw ParseError(i, "expected '*'");
    ++i;
  }
}

}  // namespace linfin::fingrp
