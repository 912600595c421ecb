#include <random>
#include <set>

#include "doctest.h"
#include "linfin/core/errors.hpp"
#include "linfin/recognize/recognize.hpp"
#include "support/groups.hpp"
#include "support/oracles.hpp"

using namespace linfin;
using namespace linfin::scalar;
using namespace linfin::recognize;
using testcorpus::group;
using testcorpus::mat;
using testcorpus::Rows;

namespace {

FieldPtr klein_field() { return testcorpus::gf_rational_functions(2, {"x"}); }

GroupInput klein() {
  return group(klein_field(), {{{"1", "x"}, {"0", "1"}}, {{"1", "1"}, {"0", "1"}}});
}

const Rows rot90 = {{"0", "-1"}, {"1", "0"}};

oracle::QMat to_qmat(const Rows& rows) {
  oracle::QMat m;
  for (const auto& r : rows)
    for (const auto& x : r) m.push_back(mpq_class(x));
  return m;
}

Rows signed_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Rows r(n, std::vector<std::string>(n, "0"));
  for (std::size_t i = 0; i < n; ++i) r[i][perm[i]] = rng() % 2 ? "1" : "-1";
  return r;
}

void check_subgroup(const Subgroup& S, const IsoCopy& copy, const GroupInput& G) {
  const auto& H = copy.image;
  std::set<std::size_t> in(S.members.begin(), S.members.end());
  CHECK(in.count(0));
  for (std::size_t a : S.members) {
    for (std::size_t b : S.members) CHECK(in.count(*H.index_of(H.element(a) * H.element(b))));
    for (std::size_t g = 0; g < H.rank(); ++g)
      CHECK(in.count(*H.index_of(H.inverses()[g] * H.element(a) * H.generators()[g])));
  }
  for (std::size_t i = 0; i < S.generators.size(); ++i) {
    CHECK(copy.map.apply(S.generators[i]) == H.element(S.generator_indices[i]));
    CHECK(decide::evaluate_word(S.words[i], G) == S.generators[i]);
  }
}

}  // namespace

TEST_CASE("isomorphic_copy retries points in characteristic p") {
  auto G = klein();
  auto c = isomorphic_copy(G);
  CHECK(c.attempts == 3);
  CHECK(c.skip == 2);
  CHECK(c.order() == 4);
  CHECK(c.map.target()->characteristic() == 2);
  CHECK(c.map.target()->degree() == 2);
  CHECK(c.relators_checked == c.image.presentation().size());
  decide::Config few;
  few.max_attempts = 2;
  CHECK_THROWS_AS(isomorphic_copy(G, few), ResourceError);
}

TEST_CASE("isomorphic_copy examples in characteristic 0") {
  auto Q = Field::rationals();
  auto c = isomorphic_copy(group(Q, {rot90}));
  CHECK(c.attempts == 1);
  CHECK(c.order() == 4);
  CHECK(c.map.target()->characteristic() == 3);
  CHECK(isomorphic_copy(group(Q, {{{"1", "0"}, {"0", "1"}}})).order() == 1);
  CHECK_THROWS_AS(isomorphic_copy(group(Q, {{{"1", "1"}, {"0", "1"}}})), std::exception);
  auto j = c.to_json();
  CHECK(j["order"] == 4);
  CHECK(j["generators"][0][0][1] == "2");
  CHECK(j["map"]["kind"] == "Phi1");
}

TEST_CASE("order_of_finite examples") {
  CHECK(order_of_finite(klein()) == 4);
  CHECK(order_of_finite(group(Field::rationals(), {{{"1", "0"}, {"0", "1"}}})) == 1);
  // <zeta5> wr Sym(3): 5^3 * 3!
  auto Z5 = Field::number_field(BaseField::number_field({1, 1, 1, 1, 1}));
  auto W = group(Z5, {{{"a", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}},
                      {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}},
                      {{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}}});
  CHECK(order_of_finite(W) == 750);
  CHECK_THROWS_AS(order_of_finite(group(Field::rationals(), {{{"2", "0"}, {"0", "1"}}})), DomainError);
}

TEST_CASE("membership examples") {
  auto Q = Field::rationals();
  auto G = group(Q, {rot90});
  auto m = membership(mat(Q, {{"-1", "0"}, {"0", "-1"}}), G);
  CHECK(m.member);
  REQUIRE(m.witness);
  CHECK(fingrp::to_string(*m.witness, fingrp::generator_names(1)) == "a^2");
  auto n = membership(mat(Q, {{"1", "0"}, {"0", "-1"}}), G);
  CHECK(!n.member);
  CHECK(n.joint_order == Integer(8));
  auto e = membership(mat(Q, {{"1", "0"}, {"0", "1"}}), G);
  CHECK(e.member);
  CHECK(e.witness->empty());
  CHECK(!membership(mat(Q, {{"1", "1"}, {"0", "1"}}), G).member);
  CHECK(e.to_json(1)["witness"] == "1");

  auto K = klein();
  auto k = membership(mat(klein_field(), {{"1", "x+1"}, {"0", "1"}}), K);
  CHECK(k.member);
  CHECK(decide::evaluate_word(*k.witness, K) == mat(klein_field(), {{"1", "x+1"}, {"0", "1"}}));
  CHECK(!membership(mat(klein_field(), {{"1", "x^2"}, {"0", "1"}}), K).member);
}

TEST_CASE("center and derived examples") {
  auto Qi = testcorpus::gaussian();
  auto Qn = group(Qi, {{{"a", "0"}, {"0", "-a"}}, {{"0", "1"}, {"-1", "0"}}});
  auto c = isomorphic_copy(Qn);
  REQUIRE(c.order() == 8);
  auto Z = center(c, Qn);
  CHECK(Z.order() == 2);
  CHECK(Z.generators.size() == 1);
  CHECK(Z.generators[0] == mat(Qi, {{"-1", "0"}, {"0", "-1"}}));
  auto D = derived(c, Qn);
  CHECK(D.order() == 2);
  check_subgroup(Z, c, Qn);
  check_subgroup(D, c, Qn);

  auto Q = Field::rationals();
  auto D8 = group(Q, {{{"-1", "0"}, {"0", "1"}}, {{"0", "1"}, {"1", "0"}}});
  auto c8 = isomorphic_copy(D8);
  CHECK(c8.order() == 8);
  CHECK(derived(c8, D8).order() == 2);
  CHECK(center(c8, D8).order() == 2);

  auto A = group(Q, {{{"-1", "0"}, {"0", "1"}}, {{"1", "0"}, {"0", "-1"}}});
  auto ca = isomorphic_copy(A);
  auto DA = derived(ca, A);
  CHECK(DA.order() == 1);
  CHECK(DA.generators.empty());
  CHECK(center(ca, A).order() == 4);
}

TEST_CASE("copies, membership and derived subgroups agree with exact closure") {
  auto Q = Field::rationals();
  std::mt19937_64 rng(31);
  std::size_t checked = 0;
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng() % 2;
    std::size_t r = 1 + rng() % 2;
    std::vector<Rows> gens;
    std::vector<oracle::QMat> qgens;
    for (std::size_t i = 0; i < r; ++i) {
      gens.push_back(signed_permutation(n, rng));
      qgens.push_back(to_qmat(gens.back()));
    }
    auto G = group(Q, gens);
    auto truth = oracle::rational_closure(qgens, n, 500, 1);
    REQUIRE(truth.complete);
    auto c = isomorphic_copy(G);
    CHECK(c.order() == truth.order);
    CHECK(derived(c, G).order() == oracle::derived_order(truth.elements, n));
    check_subgroup(center(c, G), c, G);

    std::set<oracle::QMat> members(truth.elements.begin(), truth.elements.end());
    for (int k = 0; k < 3; ++k) {
      Rows x = signed_permutation(n, rng);
      auto m = membership(mat(Q, x), G);
      CHECK(m.member == (members.count(to_qmat(x)) > 0));
      if (m.member) CHECK(decide::evaluate_word(*m.witness, G) == mat(Q, x));
    }
    ++checked;
  }
  CHECK(checked == 40);
}
