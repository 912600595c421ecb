#include <random>

#include "doctest.h"
#include "linfin/core/errors.hpp"
#include "linfin/sw/congruence.hpp"
#include "support/groups.hpp"

using namespace linfin;
using namespace linfin::scalar;
using namespace linfin::sw;
using testcorpus::group;
using testcorpus::mat;

namespace {

gf::FqMatrix fq_diag(const gf::FqFieldPtr& T, std::vector<std::uint64_t> d) {
  auto M = gf::FqMatrix::identity(T, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) M.set(i, i, T->from_u64(d[i]));
  return M;
}

// Word in the generators and their inverses, as a matrix.
Matrix random_word(const GroupInput& G, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, 2 * G.rank() - 1);
  Matrix w = Matrix::identity(G.field, G.n);
  for (std::size_t i = len(rng); i > 0; --i) {
    std::size_t k = letter(rng);
    w = w * (k % 2 ? G.inverses[k / 2] : G.gens[k / 2]);
  }
  return w;
}

std::size_t order_by_powering(const gf::FqMatrix& M, std::size_t limit) {
  gf::FqMatrix P = M;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (P.is_identity()) return k;
    P = P * M;
  }
  return 0;
}

std::size_t order_by_powering(const Matrix& M, std::size_t limit) {
  Matrix P = M;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (P.is_identity()) return k;
    P = P * M;
  }
  return 0;
}

}  // namespace

TEST_CASE("select_prime examples") {
  CHECK(select_prime({2, {6}}, 0) == 5);
  CHECK(select_prime({2, {1, -4}}, 0) == 3);
  CHECK(select_prime({5, {1}}, 0) == 7);
  CHECK(select_prime({2, {6}}, 1) == 7);
  CHECK(select_prime({2, {0}}, 0) == 3);
}

TEST_CASE("select_point examples") {
  auto Qx = testcorpus::rational_functions(BaseField::rationals(), {"x"});
  auto mu = [](const FieldPtr& F, const std::string& s) { return parse_elem(*F, s)[0].num; };
  CHECK(select_point(*Qx, mu(Qx, "x"), 0).values == std::vector<Rational>{1});
  CHECK(select_point(*Qx, mu(Qx, "x-1"), 0).values == std::vector<Rational>{-1});
  CHECK(select_point(*Qx, mu(Qx, "x-1"), 1).values == std::vector<Rational>{2});
  CHECK(select_point(*Qx, mu(Qx, "x-1"), 2).values == std::vector<Rational>{-2});

  auto F2x = testcorpus::gf_rational_functions(2, {"x"});
  Point w = select_point(*F2x, mu(F2x, "x^2+x"), 0);
  CHECK(w.extension == 2);
  CHECK(w.field->modulus() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(w.coords == std::vector<gf::FqField::Elem>{{0, 1}});

  // With nothing to avoid, the points are 0, 1, then the residue of t in GF(4).
  auto one = mu(F2x, "1");
  CHECK(select_point(*F2x, one, 0).coords == std::vector<gf::FqField::Elem>{{0}});
  CHECK(select_point(*F2x, one, 1).coords == std::vector<gf::FqField::Elem>{{1}});
  CHECK(select_point(*F2x, one, 2).coords == std::vector<gf::FqField::Elem>{{0, 1}});
  CHECK(select_point(*F2x, one, 3).coords == std::vector<gf::FqField::Elem>{{1, 1}});
  CHECK(select_point(*F2x, one, 4).extension == 3);
}

TEST_CASE("select_point order in two variables") {
  auto Qxy = testcorpus::rational_functions(BaseField::rationals(), {"x", "y"});
  auto one = parse_elem(*Qxy, "1")[0].num;
  std::vector<std::vector<Rational>> expect = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {1, 2}};
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(select_point(*Qxy, one, i).values == expect[i]);
  // the first tuple at level 2 after the four at level 1: (1, 2)
  auto xy = parse_elem(*Qxy, "x*y-1")[0].num;
  CHECK(select_point(*Qxy, xy, 0).values == std::vector<Rational>{1, -1});
}

TEST_CASE("build_sw examples") {
  auto Q = Field::rationals();
  auto G1 = group(Q, {{{"1/2", "0"}, {"0", "3"}}});
  auto m1 = build_sw(G1, 0);
  CHECK(m1.kind() == MapKind::Phi1);
  CHECK(m1.prime() == 5);
  CHECK(m1.target()->degree() == 1);
  CHECK(m1.kernel_property() == KernelProperty::TorsionFree);
  CHECK(m1.apply(G1.gens[0]) == fq_diag(m1.target(), {3, 3}));

  auto Qi = testcorpus::gaussian();
  auto G2 = group(Qi, {{{"a", "0"}, {"0", "a"}}});
  auto m2 = build_sw(G2, 0);
  CHECK(m2.kind() == MapKind::Phi2);
  CHECK(m2.prime() == 3);
  CHECK(m2.target()->degree() == 2);
  CHECK(m2.target()->modulus() == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(m2.justification() == "p odd and p divides neither mu nor disc(f)");

  auto F5x = testcorpus::gf_rational_functions(5, {"x"});
  auto G3 = group(F5x, {{{"x", "0"}, {"0", "1"}}});
  auto m3 = build_sw(G3, 0);
  CHECK(m3.kind() == MapKind::Phi3);
  REQUIRE(m3.point());
  CHECK(m3.point()->coords == std::vector<gf::FqField::Elem>{{1}});
  CHECK(m3.target()->characteristic() == 5);
  CHECK(m3.target()->degree() == 1);
  CHECK(m3.kernel_property() == KernelProperty::TorsionUnipotent);
}

TEST_CASE("apply_sw examples") {
  // Phi2 at p = 5: t^2 + 1 = (t + 2)(t + 3) and the first factor gives i -> 3.
  auto Qi = testcorpus::gaussian();
  auto G = group(Qi, {{{"a", "0"}, {"0", "a"}}});
  auto m = build_sw(G, 1);
  CHECK(m.prime() == 5);
  CHECK(m.factor() == "t + 2");
  CHECK((3 * 3) % 5 == 4);
  CHECK(m.apply(G.gens[0]) == fq_diag(m.target(), {3, 3}));

  // Substitute x = 1 then reduce modulo 3.
  auto Qx = testcorpus::rational_functions(BaseField::rationals(), {"x"});
  auto H = group(Qx, {{{"x", "0"}, {"0", "1"}}});
  auto c = build_sw(H, 0);
  CHECK(c.kind() == MapKind::Phi3);
  CHECK(c.point()->values == std::vector<Rational>{1});
  CHECK(c.prime() == 3);
  CHECK(c.apply(H.gens[0]).is_identity());
  REQUIRE(c.outer());
  CHECK(c.outer()->kind() == MapKind::Phi1);
}

TEST_CASE("Phi2 falls back to the degree bound when p divides the discriminant") {
  // a^2 = a + 1 has disc 5 and a is a unit, so mu = 1.
  auto F = Field::number_field(BaseField::number_field({-1, -1, 1}));
  auto one = group(F, {{{"a"}}});
  CHECK(gf::discriminant({-1, -1, 1}) == 5);
  CHECK(build_sw(one, 0).prime() == 3);
  auto m = build_sw(one, 1);
  CHECK(m.prime() == 5);
  CHECK(m.justification() == "p > n*k + 1 and p does not divide mu");
  // n*k + 1 = 5 in degree 2 rules 5 out.
  auto two = group(F, {{{"a", "0"}, {"0", "1"}}});
  CHECK(build_sw(two, 1).prime() == 7);
}

TEST_CASE("algebraic function fields in characteristic 0") {
  auto Qx = testcorpus::rational_functions(BaseField::rationals(), {"x"});
  // a^2 = x at x = 1 splits; the first factor t - 1 gives a -> 1.
  auto F = testcorpus::algebraic(Qx, {"-x", "0", "1"});
  auto G = group(F, {{{"a", "0"}, {"0", "1"}}});
  auto m = build_sw(G, 0);
  CHECK(m.kind() == MapKind::Phi4);
  CHECK(m.factor() == "t - 1");
  CHECK(m.outer()->kind() == MapKind::Phi1);
  CHECK(m.apply(G.gens[0]).is_identity());
  // x = -1: a^2 = -1 stays irreducible, so the outer map is Phi2.
  auto m1 = build_sw(G, 1);
  CHECK(m1.point()->values == std::vector<Rational>{-1});
  CHECK(m1.factor() == "t^2 + 1");
  CHECK(m1.outer()->kind() == MapKind::Phi2);
  CHECK(m1.prime() == 3);

  // Over Q(i)(x): reduce the constants first, then substitute.
  auto Qix = testcorpus::rational_functions(BaseField::number_field({1, 0, 1}), {"x"});
  auto E = testcorpus::algebraic(Qix, {"-x-a", "0", "1"}, "b");
  auto H = group(E, {{{"b", "0"}, {"0", "1"}}});
  auto r = build_sw(H, 0);
  CHECK(r.kind() == MapKind::Phi4);
  CHECK(r.prime() > 2 * 2 * 2 + 1);
  CHECK(r.justification() == "p > n*k*e + 1 and p does not divide mu");
}

TEST_CASE("algebraic function fields in characteristic p") {
  auto F5x = testcorpus::gf_rational_functions(5, {"x"});
  auto F = testcorpus::algebraic(F5x, {"-x", "0", "1"});
  auto G = group(F, {{{"a", "0"}, {"0", "1"}}});
  // x = 0 is a root of mu; x = 1 gives a^2 = 1 with first factor t + 1.
  auto m = build_sw(G, 0);
  CHECK(m.kind() == MapKind::Phi4);
  CHECK(m.point()->coords == std::vector<gf::FqField::Elem>{{1}});
  CHECK(m.factor() == "t + 1");
  CHECK(m.apply(G.gens[0]) == fq_diag(m.target(), {4, 1}));
  // x = 2 is a non-square mod 5, so a lands in GF(25).
  auto m1 = build_sw(G, 1);
  CHECK(m1.target()->degree() == 2);
  auto a = m1.apply(G.gens[0]).at(0, 0);
  CHECK(m1.target()->mul(a, a) == m1.target()->from_u64(2));
}

TEST_CASE("homomorphism law on random word pairs") {
  std::mt19937_64 rng(11);
  for (const auto& [name, G] : testcorpus::map_corpus()) {
    CAPTURE(name);
    for (std::size_t skip : {0, 1}) {
      auto m = build_sw(G, skip);
      std::vector<Matrix> pool;
      std::vector<gf::FqMatrix> images;
      for (int i = 0; i < 48; ++i) {
        pool.push_back(random_word(G, rng, 3));
        images.push_back(m.apply(pool.back()));
      }
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::size_t checked = 0;
      for (int t = 0; t < (skip == 0 ? 1000 : 100); ++t) {
        std::size_t u = pick(rng), v = pick(rng);
        if (m.apply(pool[u] * pool[v]) != images[u] * images[v]) {
          FAIL("homomorphism law fails");
        }
        ++checked;
      }
      CHECK(checked >= 100);
    }
  }
}

TEST_CASE("torsion orders are preserved in characteristic 0") {
  auto Qi = testcorpus::gaussian();
  auto Qw = Field::number_field(BaseField::number_field({1, 1, 1}));
  auto Qx = testcorpus::rational_functions(BaseField::rationals(), {"x"});
  std::vector<std::pair<FieldPtr, std::vector<std::string>>> setups = {
      {Field::rationals(), {"1", "-1"}},
      {Qi, {"1", "-1", "a", "-a"}},
      {Qw, {"1", "a", "-a-1", "-1", "-a", "a+1"}},
      {Qx, {"1", "-1"}},
  };
  std::mt19937_64 rng(5);
  std::size_t tested = 0;
  for (const auto& [F, units] : setups) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 3;
      std::vector<std::size_t> perm = {0, 1, 2};
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n, "0"));
      for (std::size_t i = 0; i < n; ++i) rows[i][perm[i]] = units[rng() % units.size()];
      auto G = group(F, {rows});
      std::size_t c = order_by_powering(G.gens[0], 12);
      if (c == 0) continue;
      for (std::size_t skip : {0, 1, 2}) {
        auto m = build_sw(G, skip);
        if (std::gcd<std::uint64_t>(c, m.prime()) != 1) continue;
        CHECK(order_by_powering(m.apply(G.gens[0]), 12) == c);
        CHECK(gf::fq_matrix_order(m.apply(G.gens[0])) == c);
        ++tested;
      }
    }
  }
  CHECK(tested > 100);
}

TEST_CASE("maps are deterministic and distinct across skips") {
  for (const auto& [name, G] : testcorpus::map_corpus()) {
    CAPTURE(name);
    auto a = build_sw(G, 0), b = build_sw(G, 0), c = build_sw(G, 1);
    CHECK(a.certificate() == b.certificate());
    for (const auto& g : G.gens) CHECK(a.apply(g) == b.apply(g));
    bool differ = a.prime() != c.prime() || a.certificate()["point"] != c.certificate()["point"];
    CHECK(differ);
  }
}

TEST_CASE("certificate layout") {
  auto Qi = testcorpus::gaussian();
  auto j = build_sw(group(Qi, {{{"a", "0"}, {"0", "1"}}}), 0).certificate();
  CHECK(j["kind"] == "Phi2");
  CHECK(j["p"] == 3);
  CHECK(j["point"].is_null());
  CHECK(j["factor"] == "t^2 + 1");
  CHECK(j["target"]["p"] == 3);
  CHECK(j["target"]["l"] == 2);
  CHECK(j["kernel_property"] == "torsion-free");
  for (const char* key : {"kind", "p", "point", "factor", "target", "kernel_property", "justification"})
    CHECK(j.contains(key));

  auto Qx = testcorpus::rational_functions(BaseField::rationals(), {"x"});
  auto c = build_sw(group(Qx, {{{"x", "0"}, {"0", "1"}}}), 0).certificate();
  CHECK(c["kind"] == "Phi3");
  CHECK(c["point"] == nlohmann::json::array({"1"}));
  CHECK(c["outer"]["kind"] == "Phi1");
}

TEST_CASE("entries outside the map's ring are rejected") {
  auto Q = Field::rationals();
  auto m = build_sw(group(Q, {{{"1/2", "0"}, {"0", "3"}}}), 0);
  CHECK_THROWS_AS(m.apply(mat(Q, {{"1/5", "0"}, {"0", "5"}})), MathError);
}
