// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <variant>

#include "linfin/core/errors.hpp"
#include "linfin/decide/decide.hpp"
#include "linfin/fingrp/image.hpp"
#include "linfin/recognize/recognize.hpp"
#include "linfin/sw/congruence.hpp"
#include "support/groups.hpp"
#include "support/oracles.hpp"

using namespace linfin;
using scalar::BaseField;
using scalar::Field;
using scalar::FieldPtr;
using scalar::GroupInput;
using scalar::Matrix;
using testcorpus::group;
using testcorpus::mat;
using testcorpus::Rows;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

oracle::QMat to_qmat(const Rows& rows) {
  oracle::QMat m;
  for (const auto& r : rows)
    for (const auto& x : r) m.push_back(mpq_class(x));
  return m;
}

// Invertible integer matrix with entries in [-bound, bound].
Rows random_integer_matrix(std::size_t n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    Rows r(n, std::vector<std::string>(n));
    std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        int v = d(rng);
        r[i][j] = std::to_string(v);
        q[i][j] = v;
      }
    if (oracle::determinant(q) != 0) return r;
  }
}

GroupInput conjugate(const FieldPtr& F, const std::vector<Rows>& gens, const Matrix& P) {
  Matrix Pi = P.inverse();
  std::vector<Matrix> out;
  for (const auto& g : gens) out.push_back(Pi * mat(F, g) * P);
  return GroupInput::make(F, std::move(out));
}

// Standard generators of C wr Sym(k) in GL(k): diag(c, 1, ..., 1), a
// k-cycle and a transposition.
std::vector<Rows> wreath_generators(const std::string& c, std::size_t k) {
  Rows d(k, std::vector<std::string>(k, "0")), cyc = d, tr = d;
  for (std::size_t i = 0; i < k; ++i) {
    d[i][i] = i == 0 ? c : "1";
    cyc[i][(i + 1) % k] = "1";
    tr[i][i] = "1";
  }
  tr[0][0] = tr[1][1] = "0";
  tr[0][1] = tr[1][0] = "1";
  return {d, cyc, tr};
}

Integer factorial_of(unsigned long k) {
  Integer f = 1;
  for (unsigned long i = 2; i <= k; ++i) f *= i;
  return f;
}

Outcome criterion1() {
  std::mt19937_64 rng(101);
  auto t0 = Clock::now();
  auto Z5 = Field::number_field(BaseField::number_field({1, 1, 1, 1, 1}));
  const std::size_t k = 3;
  auto G = conjugate(Z5, wreath_generators("a", k), mat(Z5, random_integer_matrix(k, 3, rng)));
  auto v = decide::is_finite(G);
  Integer order = recognize::order_of_finite(G);
  double s = seconds_since(t0);
  // c^k * k! for the cyclic group of order c = 5
  Integer expected = linfin::pow(5, k) * factorial_of(k);
  bool ok = v.finite() && order == expected && s < 30;
  return {ok, "order " + linfin::to_string(order) + ", expected " + linfin::to_string(expected) + ", " +
                  fmt_seconds(s)};
}

Outcome criterion2() {
  std::mt19937_64 rng(202);
  auto t0 = Clock::now();
  auto Qx = testcorpus::rational_functions(BaseField::rationals(), {"x"});
  const std::size_t k = 3;
  auto gens = wreath_generators("-1", k);
  Rows shear = {{"1", "0", "x"}, {"0", "1", "0"}, {"0", "0", "1"}};
  Matrix P = mat(Qx, random_integer_matrix(k, 3, rng)) * mat(Qx, shear);
  auto G = conjugate(Qx, gens, P);
  auto v = decide::is_finite(G);
  if (!v.finite()) return {false, std::string("not recognized as finite: ") + decide::outcome_name(v.outcome)};
  auto copy = recognize::isomorphic_copy(G);
  auto D = recognize::derived(copy, G);
  double s = seconds_since(t0);

  std::vector<oracle::QMat> q;
  for (const auto& g : gens) q.push_back(to_qmat(g));
  auto closure = oracle::rational_closure(q, k, 100000, 1);
  std::size_t expected = oracle::derived_order(closure.elements, k);
  bool ok = closure.complete && D.order() == expected && s < 60;
  return {ok, "derived order " + std::to_string(D.order()) + ", oracle " + std::to_string(expected) +
                  ", group order " + std::to_string(copy.order()) + ", " + fmt_seconds(s)};
}

Outcome criterion3() {
  auto Q = Field::rationals();
  auto F5x = testcorpus::gf_rational_functions(5, {"x"});
  auto Qx = testcorpus::rational_functions(BaseField::rationals(), {"x"});
  auto E = testcorpus::algebraic(Qx, {"-x", "0", "1"});
  std::vector<std::pair<std::string, GroupInput>> battery = {
      {"unipotent over Q", group(Q, {{{"1", "1"}, {"0", "1"}}})},
      {"diag(2,1) over Q", group(Q, {{{"2", "0"}, {"0", "1"}}})},
      {"diag(x,1) over F5(x)", group(F5x, {{{"x", "0"}, {"0", "1"}}})},
      {"diag(x,1) over Q(x)(sqrt x)", group(E, {{{"x", "0"}, {"0", "1"}}})},
  };
  Outcome out{true, ""};
  for (const auto& [name, G] : battery) {
    auto t0 = Clock::now();
    auto v = decide::is_finite(G);
    double s = seconds_since(t0);
    bool ok = v.infinite() && s < 10;
    out.pass = out.pass && ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += name + ": " + decide::outcome_name(v.outcome) + " " + fmt_seconds(s);
  }
  return out;
}

Outcome criterion4() {
  auto F2x = testcorpus::gf_rational_functions(2, {"x"});
  auto G = group(F2x, {{{"1", "x"}, {"0", "1"}}, {{"1", "1"}, {"0", "1"}}});
  auto v = decide::is_finite(G);
  Integer order = recognize::order_of_finite(G);
  auto copy = recognize::isomorphic_copy(G);
  // Points 0 and 1 each leave a nontrivial kernel generator; the third
  // point lies in GF(4).
  const std::size_t predicted_attempts = 3;
  const auto& T = *copy.map.target();
  bool ok = v.finite() && order == 4 && copy.attempts == predicted_attempts && T.characteristic() == 2 &&
            T.degree() == 2 && copy.order() == 4;
  return {ok, "order " + linfin::to_string(order) + ", copy over GF(" + std::to_string(T.characteristic()) +
                  "^" + std::to_string(T.degree()) + ") after " + std::to_string(copy.attempts) + " attempts"};
}

Outcome criterion5() {
  auto Q = Field::rationals();
  auto F2x = testcorpus::gf_rational_functions(2, {"x"});
  auto nu1_closed = [](unsigned long n0) -> Integer { return linfin::pow(2, n0) * factorial_of(n0); };
  auto nu2_char0 = [](unsigned long n0) -> Integer {
    unsigned long lg = 0;
    while ((1ul << (lg + 1)) <= n0) ++lg;
    return linfin::pow(2, lg + 1) * linfin::pow(3, n0 / 2);
  };
  auto b3 = decide::torsion_bounds(3, *Q);
  auto b5 = decide::torsion_bounds(5, *Q);
  auto b2 = decide::torsion_bounds(2, *Q);
  auto bp = decide::torsion_bounds(3, *F2x);
  auto b8 = decide::torsion_bounds(8, *Q);
  bool ok = b3.nu1 && *b3.nu1 == 48 && *b3.nu1 == nu1_closed(3) && b5.nu1 && *b5.nu1 == 3840 &&
            *b5.nu1 == nu1_closed(5) && b2.nu2 == 12 && b2.nu2 == nu2_char0(2) && bp.nu2 == 7 &&
            bp.nu2 == linfin::pow(2, 3) - 1 && !b8.nu1;
  std::string d = "nu1(3)=" + (b3.nu1 ? linfin::to_string(*b3.nu1) : "none") +
                  " nu1(5)=" + (b5.nu1 ? linfin::to_string(*b5.nu1) : "none") + " nu2(2)=" + linfin::to_string(b2.nu2) +
                  " nu2(q=2,3)=" + linfin::to_string(bp.nu2) + " nu1(8) " + (b8.nu1 ? "given" : "refused");
  return {ok, d};
}

Outcome criterion6() {
  auto Q = Field::rationals();
  std::vector<Rows> pool = {
      {{"0", "1"}, {"1", "0"}},   {{"0", "-1"}, {"1", "0"}}, {{"-1", "0"}, {"0", "1"}},
      {{"1", "0"}, {"0", "-1"}},  {{"0", "1"}, {"-1", "0"}}, {{"-1", "0"}, {"0", "-1"}},
      {{"0", "-1"}, {"1", "-1"}}, {{"1", "-1"}, {"1", "0"}}, {{"-1", "1"}, {"-1", "0"}},
      {{"0", "1"}, {"-1", "-1"}}, {{"-1", "-1"}, {"1", "0"}},
  };
  for (int k : {-2, -1, 1, 2}) {
    pool.push_back({{"1", std::to_string(k)}, {"0", "1"}});
    pool.push_back({{"1", "0"}, {std::to_string(k), "1"}});
    pool.push_back({{"-1", std::to_string(k)}, {"0", "-1"}});
  }
  std::mt19937_64 rng(6);
  std::size_t decided = 0, disagree = 0, oracle_open = 0;
  for (int t = 0; t < 200; ++t) {
    Rows A = pool[rng() % pool.size()], B = pool[rng() % pool.size()];
    auto res = oracle::rational_closure({to_qmat(A), to_qmat(B)}, 2, 2000, 12);
    auto v = decide::is_finite(group(Q, {A, B}), [t] {
      decide::Config c;
      c.seed = static_cast<std::uint64_t>(t);
      return c;
    }());
    if (v.outcome == decide::Outcome::Undecided) continue;
    ++decided;
    if (!res.complete && !res.infinite_element) {
      ++oracle_open;
      continue;
    }
    bool truth = res.complete;
    if (v.finite() != truth) ++disagree;
    if (v.finite() && truth && v.order != Integer(static_cast<unsigned long>(res.order))) ++disagree;
  }
  bool ok = disagree == 0 && decided > 0;
  return {ok, std::to_string(decided) + " decided, " + std::to_string(disagree) + " disagreements, " +
                  std::to_string(oracle_open) + " beyond the oracle"};
}

Matrix random_word(const GroupInput& G, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, 2 * G.rank() - 1);
  Matrix w = Matrix::identity(G.field, G.n);
  for (std::size_t i = len(rng); i > 0; --i) {
    std::size_t k = letter(rng);
    w = w * (k % 2 ? G.inverses[k / 2] : G.gens[k / 2]);
  }
  return w;
}

template <class M>
std::size_t order_up_to(const M& m, const M& id, std::size_t limit) {
  M p = m;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

Outcome criterion7() {
  std::mt19937_64 rng(7);
  std::size_t maps = 0, pairs = 0, failures = 0;
  for (const auto& [name, G] : testcorpus::map_corpus()) {
    auto m = sw::build_sw(G, 0);
    ++maps;
    std::vector<Matrix> words;
    std::vector<gf::FqMatrix> images;
    for (int i = 0; i < 40; ++i) {
      words.push_back(random_word(G, rng, 3));
      images.push_back(m.apply(words.back()));
    }
    for (int t = 0; t < 1000; ++t) {
      std::size_t u = rng() % words.size(), v = rng() % words.size();
      ++pairs;
      if (m.apply(words[u] * words[v]) != images[u] * images[v]) ++failures;
    }
  }
  // Monomial torsion elements of order at most 12.
  std::vector<std::pair<FieldPtr, std::vector<std::string>>> setups = {
      {Field::rationals(), {"1", "-1"}},
      {testcorpus::gaussian(), {"1", "-1", "a", "-a"}},
      {testcorpus::rational_functions(BaseField::rationals(), {"x"}), {"1", "-1"}},
  };
  std::size_t torsion = 0, torsion_fail = 0;
  for (const auto& [F, units] : setups) {
    for (int t = 0; t < 30; ++t) {
      std::size_t n = 2 + rng() % 3;
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      Rows r(n, std::vector<std::string>(n, "0"));
      for (std::size_t i = 0; i < n; ++i) r[i][perm[i]] = units[rng() % units.size()];
      auto G = group(F, {r});
      std::size_t c = order_up_to(G.gens[0], Matrix::identity(F, n), 12);
      if (c == 0) continue;
      for (std::size_t skip : {0, 1}) {
        auto m = sw::build_sw(G, skip);
        auto img = m.apply(G.gens[0]);
        ++torsion;
        if (order_up_to(img, gf::FqMatrix::identity(m.target(), n), 12) != c) ++torsion_fail;
      }
    }
  }
  bool ok = failures == 0 && torsion_fail == 0 && torsion > 0;
  return {ok, std::to_string(maps) + " maps, " + std::to_string(pairs) + " word pairs, " +
                  std::to_string(failures) + " failures; " + std::to_string(torsion) + " torsion elements, " +
                  std::to_string(torsion_fail) + " order changes"};
}

Outcome criterion8() {
  std::vector<fingrp::FinGroupImage> images;
  auto add = [&](std::vector<gf::FqMatrix> gens) {
    auto r = fingrp::FinGroupImage::enumerate(std::move(gens), 200);
    if (auto* H = std::get_if<fingrp::FinGroupImage>(&r)) images.push_back(std::move(*H));
  };
  auto map_images = [&](const GroupInput& G) {
    for (std::size_t skip : {0, 1, 2}) {
      auto m = sw::build_sw(G, skip);
      std::vector<gf::FqMatrix> gens;
      for (const auto& g : G.gens) gens.push_back(m.apply(g));
      add(gens);
    }
  };
  for (const auto& [name, G] : testcorpus::map_corpus()) map_images(G);
  auto Q = Field::rationals();
  map_images(group(Q, {{{"0", "-1"}, {"1", "0"}}}));
  map_images(group(Q, wreath_generators("-1", 3)));
  map_images(group(testcorpus::gaussian(), {{{"a", "0"}, {"0", "-a"}}, {{"0", "1"}, {"-1", "0"}}}));
  map_images(group(testcorpus::gf_rational_functions(2, {"x"}), {{{"1", "x"}, {"0", "1"}}, {{"1", "1"}, {"0", "1"}}}));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    auto F = gf::FqField::prime_field(std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4]);
    std::size_t n = 2 + rng() % 2, r = 1 + rng() % 2;
    std::vector<gf::FqMatrix> gens;
    while (gens.size() < r) {
      std::vector<gf::FqField::Elem> e;
      for (std::size_t i = 0; i < n * n; ++i) e.push_back(F->from_u64(rng() % F->characteristic()));
      auto M = gf::FqMatrix::from_entries(F, n, e);
      if (M.is_invertible()) gens.push_back(M);
    }
    add(gens);
  }
  std::size_t bad_relators = 0, bad_counts = 0;
  for (const auto& H : images) {
    std::vector<std::vector<int>> rel;
    auto id = gf::FqMatrix::identity(H.field(), H.degree());
    for (const auto& w : H.presentation()) {
      gf::FqMatrix v = id;
      for (int l : w.to_signed()) {
        std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
        v = v * (l > 0 ? H.generators()[g] : H.inverses()[g]);
      }
      if (!v.is_identity()) ++bad_relators;
      rel.push_back(w.to_signed());
    }
    if (oracle::todd_coxeter(H.rank(), rel, 50000) != H.order()) ++bad_counts;
  }
  bool ok = !images.empty() && bad_relators == 0 && bad_counts == 0;
  return {ok, std::to_string(images.size()) + " images, " + std::to_string(bad_relators) + " bad relators, " +
                  std::to_string(bad_counts) + " coset count mismatches"};
}

Outcome criterion9() {
  auto Q = Field::rationals();
  Rows rot = {{"0", "-1"}, {"1", "0"}};
  auto G = group(Q, {rot});
  auto t0 = Clock::now();
  auto m = recognize::membership(mat(Q, {{"-1", "0"}, {"0", "-1"}}), G);
  double s1 = seconds_since(t0);
  bool witness_ok = false;
  std::string witness = "none";
  if (m.member && m.witness) {
    witness = fingrp::to_string(*m.witness, fingrp::generator_names(1));
    // Evaluate the witness with plain rational matrices.
    oracle::QMat v = oracle::qmat_identity(2), r = to_qmat(rot), ri = oracle::qmat_inverse(r, 2);
    for (int l : m.witness->to_signed()) v = oracle::qmat_mul(v, l > 0 ? r : ri, 2);
    witness_ok = v == to_qmat({{"-1", "0"}, {"0", "-1"}});
  }
  t0 = Clock::now();
  auto n = recognize::membership(mat(Q, {{"1", "0"}, {"0", "-1"}}), G);
  double s2 = seconds_since(t0);
  bool ok = m.member && witness_ok && !n.member && s1 < 5 && s2 < 5;
  return {ok, "-I: " + std::string(m.member ? "member" : "not member") + " witness " + witness + " " +
                  fmt_seconds(s1) + "; diag(1,-1): " + (n.member ? "member" : "not member") + " " +
                  fmt_seconds(s2)};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"wreath product <zeta5> wr Sym(3), conjugated: finite, order 750", criterion1},
      {"derived subgroup of <-1> wr Sym(3) over Q(x), conjugated", criterion2},
      {"infinite detection battery", criterion3},
      {"characteristic 2 Klein group with nontrivial kernel", criterion4},
      {"torsion bound values", criterion5},
      {"agreement with exact closure on 200 random groups over Q", criterion6},
      {"homomorphism laws and torsion orders", criterion7},
      {"presentation soundness and completeness", criterion8},
      {"membership in <rot90>", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail << ") [" << fmt_seconds(seconds_since(t0)) << "]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
