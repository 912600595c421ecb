#pragma once

// Fields and small groups shared by the unit and acceptance tests.

#include <string>
#include <vector>

#include "linfin/scalar/group_input.hpp"
#include "linfin/scalar/parse.hpp"

namespace testcorpus {

using linfin::Rational;
using linfin::scalar::BaseField;
using linfin::scalar::Field;
using linfin::scalar::FieldPtr;
using linfin::scalar::GroupInput;
using linfin::scalar::Matrix;

using Rows = std::vector<std::vector<std::string>>;

inline FieldPtr gaussian() { return Field::number_field(BaseField::number_field({1, 0, 1})); }

inline FieldPtr rational_functions(linfin::scalar::BaseFieldPtr base, std::vector<std::string> vars) {
  return Field::rational_function_field(std::move(base), std::move(vars));
}

inline FieldPtr gf_rational_functions(std::uint64_t p, std::vector<std::string> vars) {
  return rational_functions(BaseField::finite_field(linfin::gf::FqField::prime_field(p)), std::move(vars));
}

inline FieldPtr algebraic(const FieldPtr& rf, const std::vector<std::string>& coeffs,
                          std::string name = "a") {
  std::vector<Field::Elem> c;
  for (const auto& s : coeffs) c.push_back(linfin::scalar::parse_elem(*rf, s));
  return Field::algebraic_function_field(rf, c, std::move(name));
}

inline Matrix mat(const FieldPtr& F, const Rows& rows) { return Matrix::parse(F, rows); }

inline GroupInput group(const FieldPtr& F, const std::vector<Rows>& gens) {
  std::vector<Matrix> m;
  for (const auto& g : gens) m.push_back(mat(F, g));
  return GroupInput::make(F, std::move(m));
}

struct NamedGroup {
  std::string name;
  GroupInput G;
};

// One or more groups per field family, not necessarily finite.
inline std::vector<NamedGroup> map_corpus() {
  auto Qx = rational_functions(BaseField::rationals(), {"x"});
  auto Qix = rational_functions(BaseField::number_field({1, 0, 1}), {"x"});
  auto F2x = gf_rational_functions(2, {"x"});
  auto F5x = gf_rational_functions(5, {"x"});
  auto F9x = rational_functions(
      BaseField::finite_field(linfin::gf::FqField::make(3, {1, 0, 1})), {"x"});
  std::vector<NamedGroup> out;
  out.push_back({"rationals", group(Field::rationals(), {{{"1/2", "0"}, {"0", "3"}},
                                                         {{"0", "-1"}, {"1", "0"}},
                                                         {{"1", "1"}, {"0", "1"}}})});
  out.push_back({"gaussian", group(gaussian(), {{{"a", "1/3"}, {"0", "1"}}, {{"0", "1"}, {"-1", "0"}}})});
  out.push_back({"scaled number field",
                 group(Field::number_field(BaseField::number_field({1, Rational(-1, 2), 1})),
                       {{{"a", "0"}, {"0", "1"}}, {{"1", "1/5"}, {"0", "1"}}})});
  out.push_back({"Q(x)", group(Qx, {{{"x", "0"}, {"0", "1"}}, {{"1", "1/(x+1)"}, {"0", "1"}}})});
  out.push_back({"Q(x,y)", group(rational_functions(BaseField::rationals(), {"x", "y"}),
                                 {{{"x", "y"}, {"0", "1"}}, {{"0", "1"}, {"1", "0"}}})});
  out.push_back({"Q(i)(x)", group(Qix, {{{"x", "a"}, {"0", "1"}}, {{"0", "1"}, {"-1", "0"}}})});
  out.push_back({"F5(x)", group(F5x, {{{"x", "0"}, {"0", "1"}}, {{"1", "x"}, {"0", "1"}}})});
  out.push_back({"F9(x)", group(F9x, {{{"w", "x"}, {"0", "1"}}, {{"1", "0"}, {"x", "1"}}})});
  out.push_back({"F3(x,y)", group(gf_rational_functions(3, {"x", "y"}),
                                  {{{"x", "0"}, {"0", "y"}}, {{"1", "1"}, {"0", "1"}}})});
  out.push_back({"Q(x)(sqrt x)", group(algebraic(Qx, {"-x", "0", "1"}),
                                       {{{"a", "0"}, {"0", "1"}}, {{"1", "a"}, {"0", "1"}}})});
  out.push_back({"Q(x)(a) scaled", group(algebraic(Qx, {"1/x", "1", "x"}),
                                         {{{"a", "0"}, {"0", "1"}}, {{"0", "1"}, {"1", "0"}}})});
  out.push_back({"Q(i)(x)(b)", group(algebraic(Qix, {"-x-a", "0", "1"}, "b"),
                                     {{{"b", "0"}, {"0", "1"}}, {{"1", "b"}, {"0", "1"}}})});
  out.push_back({"F2(x)(a)", group(algebraic(F2x, {"1", "x", "1"}),
                                   {{{"a", "0"}, {"0", "1"}}, {{"1", "x"}, {"0", "1"}}})});
  out.push_back({"F5(x)(sqrt x)", group(algebraic(F5x, {"-x", "0", "1"}),
                                        {{{"a", "1"}, {"0", "1"}}, {{"0", "1"}, {"1", "0"}}})});
  return out;
}

}  // namespace testcorpus
