#include "linfin/sw/congruence.hpp"

#include <sstream>

#include "linfin/core/errors.hpp"
#include "linfin/gf/fq_poly.hpp"

namespace linfin::sw {

using gf::FqField;
using gf::FqFieldPtr;
using gf::FqPoly;
using scalar::BaseElem;
using scalar::BaseKind;
using scalar::Field;
using scalar::FieldKind;
using scalar::FieldPtr;
using scalar::MPoly;
using scalar::RatFunc;
using Elem = FqField::Elem;

const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::Phi1:
      return "Phi1";
    case MapKind::Phi2:
      return "Phi2";
    case MapKind::Phi3:
      return "Phi3";
    case MapKind::Phi4:
      return "Phi4";
  }
  return "?";
}

const char* kernel_property_name(KernelProperty k) {
  return k == KernelProperty::TorsionFree ? "torsion-free" : "torsion-unipotent";
}

nlohmann::json field_json(const FqField& F) {
  return {{"p", F.characteristic()}, {"l", F.degree()}, {"modulus", F.modulus()}};
}

nlohmann::json matrix_json(const gf::FqMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.degree(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.degree(); ++j) row.push_back(m.field().to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

namespace {

constexpr std::uint64_t kPrimeLimit = std::uint64_t{1} << 62;

std::uint64_t nth_prime(const std::function<bool(std::uint64_t)>& ok, std::size_t skip) {
  Integer p = 2;
  std::size_t seen = 0;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p >= Integer(from_u64(kPrimeLimit))) throw ResourceError("prime search exhausted");
    std::uint64_t pp = to_u64(p);
    if (!ok(pp)) continue;
    if (seen++ == skip) return pp;
  }
}

bool divides(std::uint64_t p, const Integer& v) { return v != 0 && reduce_mod(v, p) == 0; }

std::string poly_string(const FqField& F, const FqPoly& g, const std::string& gen = "w") {
  std::vector<scalar::SignedTerm> terms;
  for (std::size_t i = g.size(); i-- > 0;) {
    if (F.is_zero(g[i])) continue;
    std::string c = F.to_string(g[i], gen);
    bool compound = c.find('+') != std::string::npos;
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    std::string body;
    if (mono.empty())
      body = c;
    else if (F.is_one(g[i]))
      body = mono;
    else
      body = (compound ? "(" + c + ")" : c) + "*" + mono;
    terms.push_back({false, body});
  }
  return scalar::join_terms(terms);
}

// Image of x in T under the embedding K -> T sending the generator of K to theta.
Elem embed(const FqField& K, const FqField& T, const Elem& theta, const Elem& x) {
  Elem r = T.zero();
  Elem pw = T.one();
  for (unsigned i = 0; i < K.degree(); ++i) {
    if (x[i]) r = T.add(r, T.scale(pw, x[i]));
    if (i + 1 < K.degree()) pw = T.mul(pw, theta);
  }
  return r;
}

Elem first_root(const FqField& T, const FqPoly& g) {
  auto rs = gf::roots(T, g);
  if (rs.empty()) throw InternalError("polynomial has no root in the target field");
  return rs.front();
}

Elem embedding_root(const FqField& K, const FqField& T) {
  if (K.degree() == 1) return T.one();
  return first_root(T, gf::from_coefficients(T, K.modulus()));
}

// Degree over F_q of c in GF(q^s).
unsigned degree_over(const FqField& K, const Integer& q, unsigned s, const Elem& c) {
  for (unsigned d = 1; d < s; ++d) {
    if (s % d) continue;
    if (K.pow(c, linfin::pow(q, d)) == c) return d;
  }
  return s;
}

}  // namespace

std::uint64_t select_prime(const PrimeConstraints& c, std::size_t skip) {
  return nth_prime(
      [&](std::uint64_t p) {
        if (Integer(from_u64(p)) <= c.min_exclusive) return false;
        for (const auto& d : c.forbid_divisors)
          if (divides(p, d)) return false;
        return true;
      },
      skip);
}

nlohmann::json Point::to_json() const {
  if (!field) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : values) a.push_back(linfin::to_string(v));
    return a;
  }
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : coords) a.push_back(field->to_string(c, "z"));
  return {{"coordinates", a}, {"field", field_json(*field)}, {"extension", extension},
          {"generator", "z"}};
}

class Reduction {
 public:
  FqFieldPtr T;
  bool char0 = true;
  std::uint64_t p = 0;
  std::vector<Elem> base_powers;
  std::vector<Elem> vars;
  std::vector<Elem> beta_powers;

  Elem coordinate(const Rational& c) const {
    if (char0) {
      auto r = reduce_mod(c, p);
      if (!r) throw MathError("denominator not invertible modulo " + std::to_string(p));
      return T->from_u64(*r);
    }
    return T->from_u64(reduce_mod(c.get_num(), p));
  }

  Elem base(const BaseElem& c) const {
    Elem r = T->zero();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) r = T->add(r, T->mul(coordinate(c[i]), base_powers[i]));
    return r;
  }

  Elem poly(const MPoly& f) const {
    Elem r = T->zero();
    for (const auto& t : f) {
      Elem m = base(t.coef);
      for (std::size_t j = 0; j < t.exp.size(); ++j)
        if (t.exp[j]) m = T->mul(m, T->pow(vars[j], t.exp[j]));
      r = T->add(r, m);
    }
    return r;
  }

  Elem ratfunc(const RatFunc& x) const {
    Elem d = poly(x.den);
    if (T->is_zero(d)) throw MathError("denominator vanishes under the map");
    return T->div(poly(x.num), d);
  }

  Elem elem(const Field::Elem& x) const {
    Elem r = T->zero();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].num.empty()) r = T->add(r, T->mul(ratfunc(x[i]), beta_powers[i]));
    return r;
  }

  void set_base(const scalar::BaseField& P, const Elem& gen_image) {
    base_powers.assign(1, T->one());
    for (unsigned i = 1; i < P.degree(); ++i) base_powers.push_back(T->mul(base_powers.back(), gen_image));
  }

  void set_beta(unsigned e, const Elem& beta) {
    beta_powers.assign(1, T->one());
    for (unsigned i = 1; i < e; ++i) beta_powers.push_back(T->mul(beta_powers.back(), beta));
  }
};

class Substitution {
 public:
  FieldPtr source;
  FieldPtr target;
  std::vector<Rational> point;
  Field::Elem beta_image;

  BaseElem poly(const MPoly& f) const {
    const auto& P = source->base();
    BaseElem r = P.zero();
    for (const auto& t : f) {
      Rational m = 1;
      for (std::size_t j = 0; j < t.exp.size(); ++j)
        if (t.exp[j]) {
          Rational pw;
          mpz_pow_ui(pw.get_num_mpz_t(), point[j].get_num_mpz_t(), t.exp[j]);
          mpz_pow_ui(pw.get_den_mpz_t(), point[j].get_den_mpz_t(), t.exp[j]);
          pw.canonicalize();
          m *= pw;
        }
      r = P.add(r, P.mul(t.coef, P.from_rational(m)));
    }
    return r;
  }

  BaseElem ratfunc(const RatFunc& x) const {
    const auto& P = source->base();
    BaseElem d = poly(x.den);
    if (P.is_zero(d)) throw MathError("denominator vanishes at the substitution point");
    return P.div(poly(x.num), d);
  }

  Field::Elem apply(const Field::Elem& x) const {
    if (source->ext_degree() == 1) return target->from_base(ratfunc(x[0]));
    Field::Elem r = target->zero();
    Field::Elem pw = target->one();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i].num.empty()) {
        BaseElem c = ratfunc(x[i]);
        r = target->add(r, target->mul(target->from_rational(c[0]), pw));
      }
      if (i + 1 < x.size()) pw = target->mul(pw, beta_image);
    }
    return r;
  }

  scalar::Matrix apply(const scalar::Matrix& M) const {
    std::vector<Field::Elem> out;
    out.reserve(M.entries().size());
    for (const auto& x : M.entries()) out.push_back(apply(x));
    return scalar::Matrix::from_entries(target, M.degree(), std::move(out));
  }
};

Elem CongruenceMap::apply(const Field::Elem& x) const {
  if (substitution_) return outer_->apply(substitution_->apply(x));
  return reduction_->elem(x);
}

gf::FqMatrix CongruenceMap::apply(const scalar::Matrix& m) const {
  if (substitution_) return outer_->apply(substitution_->apply(m));
  std::vector<Elem> out;
  out.reserve(m.entries().size());
  for (const auto& x : m.entries()) out.push_back(reduction_->elem(x));
  return gf::FqMatrix::from_entries(target_, m.degree(), out);
}

nlohmann::json CongruenceMap::certificate() const {
  nlohmann::json j;
  j["kind"] = map_kind_name(kind_);
  j["p"] = p_;
  j["point"] = point_ ? point_->to_json() : nlohmann::json(nullptr);
  j["factor"] = factor_.empty() ? nlohmann::json(nullptr) : nlohmann::json(factor_);
  j["target"] = field_json(*target_);
  j["kernel_property"] = kernel_property_name(kernel_);
  j["justification"] = justification_;
  if (outer_) j["outer"] = outer_->certificate();
  return j;
}

// Enumeration of substitution points.
Point select_point(const Field& F, const MPoly& mu, std::size_t skip, std::size_t budget) {
  const std::size_t m = F.nvars();
  if (m == 0) throw DomainError("substitution points need a function field");
  std::size_t seen = 0, tried = 0;
  auto spend = [&] {
    if (++tried > budget) throw ResourceError("substitution point budget exhausted");
  };

  if (F.characteristic() == 0) {
    const auto& P = F.base();
    auto value = [](std::size_t i) {
      Integer v = static_cast<unsigned long>(i / 2 + 1);
      return Rational(i % 2 ? Integer(-v) : v);
    };
    for (std::size_t h = 1;; ++h) {
      std::vector<std::size_t> idx(m, 0);
      const std::size_t top = 2 * h;
      for (;;) {
        bool on_shell = false;
        for (auto i : idx) on_shell |= i + 2 >= top;
        if (on_shell) {
          spend();
          Point pt;
          for (auto i : idx) pt.values.push_back(value(i));
          BaseElem r = P.zero();
          for (const auto& t : mu) {
            Rational mono = 1;
            for (std::size_t j = 0; j < m; ++j)
              for (unsigned k = 0; k < t.exp[j]; ++k) mono *= pt.values[j];
            r = P.add(r, P.mul(t.coef, P.from_rational(mono)));
          }
          if (!P.is_zero(r) && seen++ == skip) return pt;
        }
        std::size_t j = m;
        while (j > 0 && idx[j - 1] + 1 == top) idx[--j] = 0;
        if (j == 0) break;
        ++idx[j - 1];
      }
    }
  }

  const FqFieldPtr& Fq = F.base().fq();
  const std::uint64_t p = Fq->characteristic();
  const unsigned l = Fq->degree();
  const Integer q = Fq->size();
  for (unsigned s = 1;; ++s) {
    Point pt;
    pt.extension = s;
    pt.field = s == 1 ? Fq : FqField::make(p, gf::first_irreducible(p, l * s));
    const FqField& K = *pt.field;
    pt.base_image = l == 1 ? K.one() : (s == 1 ? K.generator() : embedding_root(*Fq, K));
    Reduction ev;
    ev.T = pt.field;
    ev.char0 = false;
    ev.p = p;
    ev.set_base(F.base(), pt.base_image);
    const Integer Q = K.size();
    std::vector<Integer> idx(m, 0);
    for (;;) {
      spend();
      std::vector<Elem> coords;
      Integer L = 1;
      for (const auto& i : idx) {
        coords.push_back(K.decode(i));
        if (s > 1) L = linfin::lcm(L, degree_over(K, q, s, coords.back()));
      }
      if (L == s) {
        ev.vars = coords;
        if (!K.is_zero(ev.poly(mu)) && seen++ == skip) {
          pt.coords = std::move(coords);
          return pt;
        }
      }
      std::size_t j = m;
      while (j > 0 && idx[j - 1] + 1 == Q) idx[--j] = 0;
      if (j == 0) break;
      ++idx[j - 1];
    }
  }
}

struct MapBuilder {
  const scalar::GroupInput& G;
  const Field& F;
  std::size_t skip;

  static CongruenceMap phi1(const scalar::GroupInput& G, std::size_t skip) {
    CongruenceMap M;
    M.kind_ = MapKind::Phi1;
    M.n_ = G.n;
    M.p_ = select_prime({2, {G.mu.integer_part}}, skip);
    M.target_ = FqField::prime_field(M.p_);
    M.justification_ = "p > 2 and p does not divide mu";
    auto R = std::make_shared<Reduction>();
    R->T = M.target_;
    R->p = M.p_;
    R->set_base(G.field->base(), {});
    R->set_beta(1, {});
    M.reduction_ = R;
    return M;
  }

  static CongruenceMap phi2(const scalar::GroupInput& G, std::size_t skip) {
    const auto& P = G.field->base();
    const auto& f = P.integral_minpoly();
    const Integer disc = gf::discriminant(f);
    const Integer bound = Integer(static_cast<unsigned long>(G.n * P.degree() + 1));
    const Integer& mu = G.mu.integer_part;
    CongruenceMap M;
    M.kind_ = MapKind::Phi2;
    M.n_ = G.n;
    M.p_ = nth_prime(
        [&](std::uint64_t p) {
          if (divides(p, mu)) return false;
          return !divides(p, disc) || Integer(from_u64(p)) > bound;
        },
        skip);
    M.justification_ = divides(M.p_, disc)
                           ? "p > n*k + 1 and p does not divide mu"
                           : "p odd and p divides neither mu nor disc(f)";
    auto Fp = FqField::prime_field(M.p_);
    std::vector<std::uint64_t> fc;
    for (const auto& c : f) fc.push_back(reduce_mod(c, M.p_));
    FqPoly g = gf::factor(*Fp, gf::from_coefficients(*Fp, fc)).front().factor;
    M.factor_ = poly_string(*Fp, g);
    Elem alpha;
    if (gf::degree(g) == 1) {
      M.target_ = Fp;
      alpha = Fp->neg(g[0]);
    } else {
      std::vector<std::uint64_t> mod;
      for (const auto& c : g) mod.push_back(c[0]);
      M.target_ = FqField::make(M.p_, mod);
      alpha = M.target_->generator();
    }
    auto R = std::make_shared<Reduction>();
    R->T = M.target_;
    R->p = M.p_;
    R->set_base(P, alpha);
    R->set_beta(1, {});
    M.reduction_ = R;
    return M;
  }

  static CongruenceMap over_constants(const scalar::GroupInput& G, std::size_t skip) {
    return G.field->kind() == FieldKind::Rationals ? phi1(G, skip) : phi2(G, skip);
  }

  // Characteristic 0: substitute, rebuild the group over the constants and
  // reduce it with Phi1 or Phi2.
  CongruenceMap composed() const {
    const bool algebraic = F.kind() == FieldKind::AlgebraicFunctionField;
    Point pt = select_point(F, G.mu.poly_part, skip);
    auto sub = std::make_shared<Substitution>();
    sub->source = G.field;
    sub->point = pt.values;
    std::string factor;
    if (!algebraic) {
      sub->target = F.kind() == FieldKind::RationalFunctionField && F.base().kind() == BaseKind::Rationals
                        ? Field::rationals(F.limits())
                        : Field::number_field(F.base_ptr(), F.limits());
    } else {
      scalar::QPoly fbar;
      for (const auto& c : F.integral_minpoly()) fbar.push_back(sub->poly(c)[0]);
      scalar::QPoly h = scalar::factor_rational(fbar).front().factor;
      factor = scalar::qpoly_to_string(h);
      if (scalar::degree(h) == 1) {
        sub->target = Field::rationals(F.limits());
        sub->beta_image = sub->target->from_rational(-h[0]);
      } else {
        sub->target =
            Field::number_field(scalar::BaseField::number_field(h, F.generator_name()), F.limits());
        sub->beta_image = sub->target->from_base(sub->target->base().generator());
      }
    }
    std::vector<scalar::Matrix> gens;
    for (const auto& g : G.gens) gens.push_back(sub->apply(g));
    auto H = scalar::GroupInput::make(sub->target, std::move(gens));
    auto outer = std::make_shared<CongruenceMap>(over_constants(H, 0));
    CongruenceMap M;
    M.kind_ = algebraic ? MapKind::Phi4 : MapKind::Phi3;
    M.n_ = G.n;
    M.p_ = outer->p_;
    M.point_ = std::move(pt);
    M.factor_ = factor;
    M.target_ = outer->target_;
    M.kernel_ = KernelProperty::TorsionFree;
    M.justification_ = "substitution at a non-root of mu, then " + outer->justification_;
    M.substitution_ = sub;
    M.outer_ = outer;
    return M;
  }

  // Characteristic 0 over a number field with an algebraic extension on
  // top: reduce modulo a prime of the number field, then substitute.
  CongruenceMap reduced_first() const {
    const auto& P = F.base();
    Point pt = select_point(F, G.mu.poly_part, skip);
    const unsigned e = F.ext_degree();
    const Integer bound = Integer(static_cast<unsigned long>(G.n * P.degree() * e + 1));
    for (std::size_t i = 0;; ++i) {
      if (i >= 4096) throw ResourceError("no admissible prime found for the reduction");
      std::uint64_t p = nth_prime(
          [&](std::uint64_t p) {
            return Integer(from_u64(p)) > bound && !divides(p, G.mu.integer_part);
          },
          i);
      try {
        return reduce_at(pt, p);
      } catch (const MathError&) {
        continue;
      }
    }
  }

  CongruenceMap reduce_at(const Point& pt, std::uint64_t p) const {
    const auto& P = F.base();
    auto Fp = FqField::prime_field(p);
    std::vector<std::uint64_t> fc;
    for (const auto& c : P.integral_minpoly()) fc.push_back(reduce_mod(c, p));
    FqPoly g0 = gf::factor(*Fp, gf::from_coefficients(*Fp, fc)).front().factor;
    FqFieldPtr T0;
    Elem r0;
    if (gf::degree(g0) == 1) {
      T0 = Fp;
      r0 = Fp->neg(g0[0]);
    } else {
      std::vector<std::uint64_t> mod;
      for (const auto& c : g0) mod.push_back(c[0]);
      T0 = FqField::make(p, mod);
      r0 = T0->generator();
    }
    Reduction ev;
    ev.T = T0;
    ev.p = p;
    ev.set_base(P, r0);
    for (const auto& v : pt.values) ev.vars.push_back(ev.coordinate(v));
    FqPoly fbar;
    for (const auto& c : F.integral_minpoly()) fbar.push_back(ev.poly(c));
    gf::trim(*T0, fbar);
    FqPoly g = gf::factor(*T0, fbar).front().factor;
    auto R = std::make_shared<Reduction>(finish_tower(ev, g));
    CongruenceMap M;
    M.kind_ = MapKind::Phi4;
    M.n_ = G.n;
    M.p_ = p;
    M.point_ = pt;
    M.factor_ = poly_string(*T0, g);
    M.target_ = R->T;
    M.kernel_ = KernelProperty::TorsionFree;
    M.justification_ = "p > n*k*e + 1 and p does not divide mu";
    M.reduction_ = R;
    for (const auto& m : G.gens) (void)M.apply(m);
    for (const auto& m : G.inverses) (void)M.apply(m);
    return M;
  }

  // Extends the evaluation `ev` over K by a root of the monic irreducible g.
  Reduction finish_tower(const Reduction& ev, const FqPoly& g) const {
    const FqField& K = *ev.T;
    Reduction R;
    R.char0 = ev.char0;
    R.p = ev.p;
    const unsigned e = F.ext_degree();
    if (gf::degree(g) == 1) {
      R = ev;
      R.set_beta(e, K.neg(g[0]));
      return R;
    }
    unsigned total = K.degree() * static_cast<unsigned>(gf::degree(g));
    R.T = FqField::make(ev.p, gf::first_irreducible(ev.p, total));
    const FqField& T = *R.T;
    Elem theta = embedding_root(K, T);
    auto up = [&](const Elem& x) { return embed(K, T, theta, x); };
    for (const auto& b : ev.base_powers) R.base_powers.push_back(up(b));
    for (const auto& v : ev.vars) R.vars.push_back(up(v));
    FqPoly gt;
    for (const auto& c : g) gt.push_back(up(c));
    R.set_beta(e, first_root(T, gt));
    return R;
  }

  CongruenceMap char_p() const {
    Point pt = select_point(F, G.mu.poly_part, skip);
    Reduction ev;
    ev.T = pt.field;
    ev.char0 = false;
    ev.p = F.characteristic();
    ev.set_base(F.base(), pt.base_image);
    ev.vars = pt.coords;
    CongruenceMap M;
    M.n_ = G.n;
    M.p_ = ev.p;
    M.kernel_ = KernelProperty::TorsionUnipotent;
    M.justification_ = "characteristic p: torsion elements of the kernel are unipotent";
    if (F.kind() == FieldKind::RationalFunctionField) {
      M.kind_ = MapKind::Phi3;
      ev.set_beta(1, {});
      M.reduction_ = std::make_shared<Reduction>(ev);
    } else {
      M.kind_ = MapKind::Phi4;
      FqPoly fbar;
      for (const auto& c : F.integral_minpoly()) fbar.push_back(ev.poly(c));
      gf::trim(*ev.T, fbar);
      FqPoly g = gf::factor(*ev.T, fbar).front().factor;
      M.factor_ = poly_string(*ev.T, g, "z");
      M.reduction_ = std::make_shared<Reduction>(finish_tower(ev, g));
    }
    M.target_ = M.reduction_->T;
    M.point_ = std::move(pt);
    return M;
  }

  CongruenceMap build() const {
    switch (F.kind()) {
      case FieldKind::Rationals:
      case FieldKind::NumberField:
        return over_constants(G, skip);
      case FieldKind::RationalFunctionField:
      case FieldKind::AlgebraicFunctionField:
        break;
    }
    if (F.characteristic() != 0) return char_p();
    if (F.kind() == FieldKind::AlgebraicFunctionField && F.base().kind() == BaseKind::NumberField)
      return reduced_first();
    return composed();
  }
};

CongruenceMap build_sw(const scalar::GroupInput& G, std::size_t skip) {
  return MapBuilder{G, *G.field, skip}.build();
}

}  // namespace linfin::sw
