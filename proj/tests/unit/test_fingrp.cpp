#include <random>
#include <set>

#include "doctest.h"
#include "linfin/core/errors.hpp"
#include "linfin/fingrp/image.hpp"
#include "linfin/fingrp/product_replacement.hpp"
#include "support/groups.hpp"
#include "support/oracles.hpp"

using namespace linfin;
using namespace linfin::fingrp;
using gf::FqField;
using gf::FqMatrix;

namespace {

FqMatrix fq(const gf::FqFieldPtr& F, std::size_t n, std::vector<std::int64_t> entries) {
  std::vector<FqField::Elem> e;
  for (auto v : entries) e.push_back(F->from_int(v));
  return FqMatrix::from_entries(F, n, e);
}

FinGroupImage complete(std::vector<FqMatrix> gens, std::size_t cap = 100000) {
  auto r = FinGroupImage::enumerate(std::move(gens), cap);
  REQUIRE(std::holds_alternative<FinGroupImage>(r));
  return std::get<FinGroupImage>(std::move(r));
}

FqMatrix eval(const FinGroupImage& H, const Word& w) {
  return evaluate(w, H.generators(), H.inverses(), FqMatrix::identity(H.field(), H.degree()));
}

FqMatrix random_invertible(const gf::FqFieldPtr& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, F->characteristic() - 1);
  for (;;) {
    std::vector<FqField::Elem> e;
    for (std::size_t i = 0; i < n * n; ++i) e.push_back(F->from_u64(d(rng)));
    auto M = FqMatrix::from_entries(F, n, e);
    if (M.is_invertible()) return M;
  }
}

std::set<std::vector<std::uint64_t>> element_set(const FinGroupImage& H) {
  std::set<std::vector<std::uint64_t>> s;
  for (const auto& e : H.elements()) s.insert(e.data());
  return s;
}

}  // namespace

TEST_CASE("word arithmetic and printing") {
  auto names = generator_names(2);
  Word w = parse_word("a^2*b^-1*b*a", names);
  CHECK(to_string(w, names) == "a^3");
  CHECK((w * w.inverse()).empty());
  CHECK(parse_word("1", names).empty());
  CHECK(parse_word(" ", names).empty());
  CHECK(to_string(Word(), names) == "1");
  Word v = parse_word("a*b^-2*a^-1", names);
  CHECK(to_string(v, names) == "a*b^-2*a^-1");
  CHECK(v.length() == 4);
  CHECK(v.to_signed() == std::vector<int>{1, -2, -2, -1});
  CHECK(Word::from_signed(v.to_signed()) == v);
  CHECK_THROWS_AS(parse_word("a*c", names), ParseError);
  CHECK_THROWS_AS(parse_word("a^", names), ParseError);
  CHECK_THROWS_AS(parse_word("a b", names), ParseError);
  CHECK(generator_names(27)[26] == "g27");
}

TEST_CASE("word round trip on random words") {
  std::mt19937_64 rng(3);
  auto names = generator_names(3);
  for (int t = 0; t < 500; ++t) {
    std::vector<int> s;
    for (int k = rng() % 12; k > 0; --k) s.push_back(static_cast<int>(rng() % 3 + 1) * (rng() % 2 ? 1 : -1));
    Word w = Word::from_signed(s);
    CHECK(parse_word(to_string(w, names), names) == w);
    // adjacent letters differ in generator
    for (std::size_t i = 1; i < w.letters().size(); ++i) CHECK(w.letters()[i].gen != w.letters()[i - 1].gen);
  }
}

TEST_CASE("enumerate examples") {
  auto F5 = FqField::prime_field(5);
  auto rot = fq(F5, 2, {0, -1, 1, 0});
  auto H = complete({rot}, 100);
  CHECK(H.order() == 4);

  auto I = complete({FqMatrix::identity(F5, 2)});
  CHECK(I.order() == 1);
  CHECK(I.word(0).empty());

  auto F7 = FqField::prime_field(7);
  auto u = fq(F7, 2, {1, 1, 0, 1});
  auto r = FinGroupImage::enumerate({u}, 3);
  REQUIRE(std::holds_alternative<CapExceeded>(r));
  CHECK(std::get<CapExceeded>(r).at_least >= 3);
  CHECK(complete({u}).order() == 7);
}

TEST_CASE("cayley_presentation examples") {
  auto F5 = FqField::prime_field(5);
  auto names = generator_names(2);
  auto C4 = complete({fq(F5, 2, {0, -1, 1, 0})});
  const auto& rel = C4.presentation();
  REQUIRE(rel.size() == 1);
  CHECK(to_string(rel[0], names) == "a^4");

  auto T = complete({FqMatrix::identity(F5, 2)});
  REQUIRE(T.presentation().size() == 1);
  CHECK(to_string(T.presentation()[0], names) == "a");

  auto K = complete({fq(F5, 2, {-1, 0, 0, 1}), fq(F5, 2, {1, 0, 0, -1})});
  CHECK(K.order() == 4);
  std::set<std::string> rs;
  for (const auto& r : K.presentation()) {
    rs.insert(to_string(r, names));
    CHECK(eval(K, r).is_identity());
  }
  CHECK(rs.count("a^2"));
  CHECK(rs.count("b^2"));
  std::vector<std::vector<int>> signed_rel;
  for (const auto& r : K.presentation()) signed_rel.push_back(r.to_signed());
  CHECK(oracle::todd_coxeter(2, signed_rel, 1000) == 4);
  CHECK(K.presentation().size() == 4 * 2 - 3);
}

TEST_CASE("witnesses, relators and presented order on random groups") {
  std::mt19937_64 rng(17);
  std::size_t checked = 0;
  for (int t = 0; t < 80; ++t) {
    auto F = FqField::prime_field(std::vector<std::uint64_t>{2, 3, 5}[rng() % 3]);
    std::size_t n = 2 + rng() % 2;
    std::size_t r = 1 + rng() % 2;
    std::vector<FqMatrix> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(random_invertible(F, n, rng));
    auto res = FinGroupImage::enumerate(gens, 200);
    if (!std::holds_alternative<FinGroupImage>(res)) continue;
    const auto& H = std::get<FinGroupImage>(res);
    for (std::size_t i = 0; i < H.order(); ++i) CHECK(eval(H, H.word(i)) == H.element(i));
    std::vector<std::vector<int>> signed_rel;
    for (const auto& w : H.presentation()) {
      CHECK(eval(H, w).is_identity());
      signed_rel.push_back(w.to_signed());
    }
    CHECK(H.presentation().size() == H.order() * r - (H.order() - 1));
    CHECK(oracle::todd_coxeter(r, signed_rel, 20000) == H.order());
    // Element set does not depend on the generator order.
    std::vector<FqMatrix> rev(gens.rbegin(), gens.rend());
    CHECK(element_set(complete(rev)) == element_set(H));
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("subgroup closure") {
  auto F5 = FqField::prime_field(5);
  auto D = complete({fq(F5, 2, {0, -1, 1, 0}), fq(F5, 2, {1, 0, 0, -1})});
  CHECK(D.order() == 8);
  auto rot = *D.index_of(fq(F5, 2, {0, -1, 1, 0}));
  auto S = subgroup_closure(D, {rot});
  CHECK(S.members.size() == 4);
  for (std::size_t i = 0; i < S.members.size(); ++i) {
    FqMatrix g = D.element(rot);
    CHECK(evaluate(S.words[i], std::vector<FqMatrix>{g}, std::vector<FqMatrix>{g.inverse()},
                   FqMatrix::identity(F5, 2)) == D.element(S.members[i]));
  }
}

TEST_CASE("product_replacement examples") {
  auto F7 = FqField::prime_field(7);
  auto g = fq(F7, 2, {2, 0, 0, 3});
  auto C = complete({g});
  for (std::uint64_t seed : {0, 1, 2}) {
    for (const auto& x : product_replacement<FqMatrix>({g}, seed, 10)) CHECK(C.index_of(x));
  }
  auto h = fq(F7, 2, {1, 1, 0, 1});
  CHECK(product_replacement<FqMatrix>({g, h}, 9, 6) == product_replacement<FqMatrix>({g, h}, 9, 6));
  CHECK(product_replacement<FqMatrix>({g, h}, 9, 6) != product_replacement<FqMatrix>({g, h}, 10, 6));

  auto Q = scalar::Field::rationals();
  auto rot = testcorpus::mat(Q, {{"0", "-1"}, {"1", "0"}});
  auto out = product_replacement<scalar::Matrix>({rot}, 1, 5);
  CHECK(out.size() == 5);
  for (const auto& x : out) CHECK(x.pow(4).is_identity());
}
