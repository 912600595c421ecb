#include "linfin/decide/decide.hpp"

#include <algorithm>

#include "linfin/core/errors.hpp"
#include "linfin/fingrp/product_replacement.hpp"

namespace linfin::decide {

using fingrp::FinGroupImage;
using scalar::Field;
using scalar::GroupInput;
using scalar::Matrix;

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Finite:
      return "finite";
    case Outcome::Infinite:
      return "infinite";
    case Outcome::Undecided:
      return "undecided";
  }
  return "?";
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  if (outcome == Outcome::Undecided)
    j["finite"] = "undecided";
  else
    j["finite"] = outcome == Outcome::Finite;
  if (order) j["order"] = linfin::to_string(*order);
  if (!reason.empty()) j["reason"] = reason;
  j["certificate"] = certificate;
  return j;
}

TorsionBounds torsion_bounds(std::size_t n, const Field& F,
                             const std::map<unsigned long, Integer>& nu1_table) {
  TorsionBounds b;
  const unsigned long e = F.ext_degree();
  if (F.characteristic() != 0) {
    b.n0 = n * e;
    b.nu2 = linfin::pow(F.base().fq()->size(), b.n0) - 1;
    return b;
  }
  b.n0 = n * F.base().degree() * e;
  unsigned long lg = 0;
  while ((2ul << lg) <= b.n0) ++lg;
  b.nu2 = linfin::pow(2, lg + 1) * linfin::pow(3, b.n0 / 2);
  if (b.n0 > 10 || b.n0 == 3 || b.n0 == 5) {
    b.nu1 = linfin::pow(2, b.n0) * factorial(b.n0);
  } else if (auto it = nu1_table.find(b.n0); it != nu1_table.end()) {
    b.nu1 = it->second;
  }
  return b;
}

nlohmann::json TorsionBounds::to_json() const {
  return {{"n0", n0},
          {"nu1", nu1 ? nlohmann::json(linfin::to_string(*nu1)) : nlohmann::json(nullptr)},
          {"nu2", linfin::to_string(nu2)}};
}

namespace {

// Some prime above n0 + 1 divides v.
bool has_large_prime(const Integer& v, unsigned long n0) {
  auto f = factor_integer(v);
  if (!f) throw ResourceError("could not factor an image order");
  return !f->empty() && f->rbegin()->first > Integer(n0 + 1);
}

std::vector<gf::FqMatrix> images(const sw::CongruenceMap& m, const std::vector<Matrix>& gens) {
  std::vector<gf::FqMatrix> out;
  for (const auto& g : gens) out.push_back(m.apply(g));
  return out;
}

using Vec = std::vector<Field::Elem>;

// Row-reduced basis of a subspace of F^d.
class Echelon {
 public:
  explicit Echelon(const Field& F) : F_(F) {}

  // Adds v when it is independent of the current rows.
  bool insert(Vec v) {
    for (const auto& [piv, row] : rows_) {
      if (F_.is_zero(v[piv])) continue;
      Field::Elem c = v[piv];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!F_.is_zero(row[i])) v[i] = F_.sub(v[i], F_.mul(c, row[i]));
    }
    std::size_t piv = 0;
    while (piv < v.size() && F_.is_zero(v[piv])) ++piv;
    if (piv == v.size()) return false;
    Field::Elem inv = F_.inv(v[piv]);
    for (auto& x : v)
      if (!F_.is_zero(x)) x = F_.mul(x, inv);
    for (auto& [p, row] : rows_) {
      if (F_.is_zero(row[piv])) continue;
      Field::Elem c = row[piv];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!F_.is_zero(v[i])) row[i] = F_.sub(row[i], F_.mul(c, v[i]));
    }
    rows_.emplace_back(piv, std::move(v));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  const Field& F_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

Matrix minus_identity(const Matrix& m) { return m - Matrix::identity(m.field_ptr(), m.degree()); }

}  // namespace

Matrix evaluate_word(const fingrp::Word& w, const GroupInput& G) {
  for (const auto& l : w.letters())
    if (l.gen >= G.rank()) throw DomainError("word uses generator " + std::to_string(l.gen + 1));
  return fingrp::evaluate(w, G.gens, G.inverses, Matrix::identity(G.field, G.n));
}

bool is_unipotent_matrix(const Matrix& m) {
  Matrix d = minus_identity(m);
  Matrix p = d;
  for (std::size_t k = 1; k < m.degree(); ++k) {
    if (p.is_zero()) return true;
    p = p * d;
  }
  return p.is_zero();
}

bool normal_closure_unipotent(const std::vector<Matrix>& K, const GroupInput& G) {
  const Field& F = *G.field;
  const std::size_t n = G.n;
  Echelon span(F);
  std::vector<Matrix> basis;
  auto add = [&](const Matrix& x) {
    if (x.is_zero()) return;
    if (span.insert(x.entries())) basis.push_back(x);
  };
  for (const auto& k : K) add(minus_identity(k));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Matrix x = basis[i];
    for (std::size_t g = 0; g < G.rank(); ++g) {
      add(G.inverses[g] * x * G.gens[g]);
      add(G.gens[g] * x * G.inverses[g]);
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const Matrix b = basis[j];
      add(x * b);
      if (j != i) add(b * x);
    }
  }
  // W_0 = F^n, W_{i+1} = A W_i.
  std::vector<Vec> W;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n, F.zero());
    v[i] = F.one();
    W.push_back(std::move(v));
  }
  for (std::size_t step = 0; step <= n; ++step) {
    if (W.empty()) return true;
    Echelon next(F);
    std::vector<Vec> nextW;
    for (const auto& a : basis)
      for (const auto& w : W) {
        Vec v(n, F.zero());
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (!F.is_zero(a.at(r, c)) && !F.is_zero(w[c])) v[r] = F.add(v[r], F.mul(a.at(r, c), w[c]));
        if (next.insert(v)) nextW.push_back(std::move(v));
      }
    if (nextW.size() == W.size()) return false;
    W = std::move(nextW);
  }
  return W.empty();
}

std::vector<Matrix> evaluate_relators(const FinGroupImage& image, const GroupInput& G) {
  const std::size_t N = image.order();
  std::vector<Matrix> node(N), node_inv(N);
  node[0] = node_inv[0] = Matrix::identity(G.field, G.n);
  for (std::size_t i = 1; i < N; ++i) {
    const auto& e = image.edge(i);
    std::size_t g = static_cast<std::size_t>(std::abs(e.letter)) - 1;
    const Matrix& step = e.letter > 0 ? G.gens[g] : G.inverses[g];
    const Matrix& back = e.letter > 0 ? G.inverses[g] : G.gens[g];
    node[i] = node[e.parent] * step;
    node_inv[i] = back * node_inv[e.parent];
  }
  std::vector<Matrix> out;
  for (const auto& re : image.relator_edges()) {
    std::size_t y = image.step(re.source, static_cast<int>(re.gen + 1));
    out.push_back(node[re.source] * G.gens[re.gen] * node_inv[y]);
  }
  return out;
}

Verdict is_finite_cyclic(const Matrix& g, const Config& config) {
  Verdict V;
  auto& cert = V.certificate;
  try {
    auto G = GroupInput::make(g.field_ptr(), {g});
    const Field& F = *G.field;
    auto b = torsion_bounds(G.n, F, config.nu1_table);
    cert["bounds"] = b.to_json();
    auto m0 = sw::build_sw(G, config.skip), m1 = sw::build_sw(G, config.skip + 1);
    cert["maps"] = {m0.certificate(), m1.certificate()};
    Integer d0 = gf::fq_matrix_order(m0.apply(g)), d1 = gf::fq_matrix_order(m1.apply(g));
    Integer d = linfin::lcm(d0, d1);
    cert["image_orders"] = {linfin::to_string(d0), linfin::to_string(d1)};
    cert["d"] = linfin::to_string(d);
    if (d > b.nu2) {
      V.outcome = Outcome::Infinite;
      V.reason = "image order exceeds the torsion bound";
      return V;
    }
    if (F.characteristic() == 0) {
      if (has_large_prime(d, b.n0)) {
        V.outcome = Outcome::Infinite;
        V.reason = "a prime above n0 + 1 divides the image order";
        return V;
      }
      if (g.pow(d).is_identity()) {
        V.outcome = Outcome::Finite;
        V.order = d;
      } else {
        V.outcome = Outcome::Infinite;
        V.reason = "g^d is not the identity";
      }
      return V;
    }
    Matrix h = g.pow(d);
    if (!is_unipotent_matrix(h)) {
      V.outcome = Outcome::Infinite;
      V.reason = "g^d is not unipotent";
      return V;
    }
    const Integer p = Integer(static_cast<unsigned long>(F.characteristic()));
    Integer order = d;
    while (!h.is_identity()) {
      h = h.pow(p);
      order *= p;
    }
    V.outcome = Outcome::Finite;
    V.order = order;
  } catch (const ResourceError& e) {
    V.outcome = Outcome::Undecided;
    V.reason = e.what();
  }
  return V;
}

Verdict is_finite(const GroupInput& G, const Config& config) {
  Verdict V;
  auto& cert = V.certificate;
  const Field& F = *G.field;
  const bool char0 = F.characteristic() == 0;
  try {
    auto b = torsion_bounds(G.n, F, config.nu1_table);
    cert["bounds"] = b.to_json();

    if (config.precheck > 0) {
      nlohmann::json transcript = nlohmann::json::array();
      std::vector<Matrix> sample;
      try {
        sample = fingrp::product_replacement(G.gens, config.seed, config.precheck);
      } catch (const ResourceError& e) {
        transcript.push_back({{"aborted", e.what()}});
      }
      Config inner = config;
      inner.precheck = 0;
      for (const auto& x : sample) {
        Verdict c = is_finite_cyclic(x, inner);
        nlohmann::json entry = {{"outcome", outcome_name(c.outcome)}};
        if (c.order) entry["order"] = linfin::to_string(*c.order);
        transcript.push_back(entry);
        if (c.infinite()) {
          cert["precheck"] = transcript;
          V.outcome = Outcome::Infinite;
          V.reason = "random element of infinite order";
          return V;
        }
      }
      cert["precheck"] = transcript;
    }

    auto m0 = sw::build_sw(G, config.skip), m1 = sw::build_sw(G, config.skip + 1);
    cert["maps"] = {m0.certificate(), m1.certificate()};
    std::size_t cap = config.cap;
    bool cap_is_bound = false;
    if (char0 && b.nu1 && *b.nu1 + 1 <= Integer(static_cast<unsigned long>(cap))) {
      cap = static_cast<std::size_t>(Integer(*b.nu1 + 1).get_ui());
      cap_is_bound = true;
    }
    cert["cap"] = cap;

    auto enumerate = [&](const sw::CongruenceMap& m) -> std::optional<FinGroupImage> {
      auto r = FinGroupImage::enumerate(images(m, G.gens), cap);
      if (auto* img = std::get_if<FinGroupImage>(&r)) return std::move(*img);
      return std::nullopt;
    };
    auto H = enumerate(m0);
    if (!H) {
      V.outcome = cap_is_bound ? Outcome::Infinite : Outcome::Undecided;
      V.reason = cap_is_bound ? "image order exceeds nu1" : "enumeration cap exceeded";
      return V;
    }
    const Integer order = Integer(static_cast<unsigned long>(H->order()));
    nlohmann::json orders = {H->order()};
    if (char0) {
      auto H1 = enumerate(m1);
      if (!H1) {
        cert["image_orders"] = orders;
        V.outcome = cap_is_bound ? Outcome::Infinite : Outcome::Undecided;
        V.reason = cap_is_bound ? "image order exceeds nu1" : "enumeration cap exceeded";
        return V;
      }
      orders.push_back(H1->order());
      cert["image_orders"] = orders;
      if (H1->order() != H->order()) {
        V.outcome = Outcome::Infinite;
        V.reason = "two images have different orders";
        return V;
      }
      if (b.nu1 && order > *b.nu1) {
        V.outcome = Outcome::Infinite;
        V.reason = "image order exceeds nu1";
        return V;
      }
      if (has_large_prime(order, b.n0)) {
        V.outcome = Outcome::Infinite;
        V.reason = "a prime above n0 + 1 divides the image order";
        return V;
      }
    } else {
      cert["image_orders"] = orders;
    }

    cert["relator_count"] = H->presentation().size();
    auto K = evaluate_relators(*H, G);
    std::vector<Matrix> nontrivial;
    nlohmann::json kgen = nlohmann::json::array();
    for (const auto& k : K) {
      bool id = k.is_identity();
      kgen.push_back(id);
      if (!id) nontrivial.push_back(k);
    }
    cert["kernel_generators"] = {{"count", K.size()},
                                 {"nontrivial", nontrivial.size()},
                                 {"trivial", kgen}};
    if (nontrivial.empty()) {
      V.outcome = Outcome::Finite;
      V.order = order;
      return V;
    }
    if (char0) {
      V.outcome = Outcome::Infinite;
      V.reason = "a kernel generator is not the identity";
      return V;
    }
    bool unip = normal_closure_unipotent(nontrivial, G);
    cert["kernel_generators"]["normal_closure_unipotent"] = unip;
    V.outcome = unip ? Outcome::Finite : Outcome::Infinite;
    if (!unip) V.reason = "the kernel's normal closure is not unipotent";
  } catch (const ResourceError& e) {
    V.outcome = Outcome::Undecided;
    V.reason = e.what();
  }
  return V;
}

}  // namespace linfin::decide
