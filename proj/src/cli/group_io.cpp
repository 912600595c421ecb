#include "linfin/cli/group_io.hpp"

#include <fstream>
#include <sstream>

#include "linfin/core/errors.hpp"
#include "linfin/gf/fq_poly.hpp"
#include "linfin/scalar/parse.hpp"

namespace linfin::cli {

using nlohmann::json;
using scalar::BaseField;
using scalar::BaseFieldPtr;
using scalar::Field;
using scalar::FieldPtr;
using scalar::Matrix;

namespace {

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string optional_name(const json& j, const std::string& fallback) {
  if (!j.contains("name")) return fallback;
  if (!j.at("name").is_string()) throw DomainError("field: \"name\" must be a string");
  return j.at("name").get<std::string>();
}

Rational parse_rational(const json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  if (!v.is_string()) throw DomainError("expected an integer or a rational string, got " + v.dump());
  Rational r;
  const std::string s = v.get<std::string>();
  if (s.empty() || r.set_str(s, 10) != 0) throw DomainError("malformed rational \"" + s + "\"");
  if (r.get_den() == 0) throw MathError("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::uint64_t parse_u64(const json& v, const char* what) {
  if (!v.is_number_unsigned()) throw DomainError(std::string("field: \"") + what + "\" must be a positive integer");
  return v.get<std::uint64_t>();
}

BaseFieldPtr parse_base(const json& j) {
  const std::string kind = member(j, "kind", "field").get<std::string>();
  if (kind == "rationals") return BaseField::rationals();
  if (kind == "number_field") {
    scalar::QPoly f;
    for (const auto& c : member(j, "min_poly", "number_field")) f.push_back(parse_rational(c));
    return BaseField::number_field(f, optional_name(j, "a"));
  }
  if (kind == "finite_field") {
    std::uint64_t p = parse_u64(member(j, "p", "finite_field"), "p");
    std::uint64_t l = j.contains("l") ? parse_u64(j.at("l"), "l") : 1;
    std::vector<std::uint64_t> modulus;
    if (j.contains("modulus")) {
      for (const auto& c : j.at("modulus")) modulus.push_back(parse_u64(c, "modulus"));
      if (modulus.size() != l + 1) throw DomainError("finite_field: modulus degree differs from l");
    } else if (l > 1) {
      modulus = gf::first_irreducible(p, static_cast<unsigned>(l));
    }
    auto fq = modulus.empty() ? gf::FqField::prime_field(p) : gf::FqField::make(p, modulus);
    return BaseField::finite_field(fq, optional_name(j, "w"));
  }
  throw DomainError("field: \"" + kind + "\" is not a coefficient field");
}

std::string entry_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw DomainError("matrix entries must be strings or integers, got " + v.dump());
}

Matrix parse_matrix(const json& rows, const FieldPtr& field, std::size_t n, const std::string& where) {
  if (!rows.is_array() || rows.size() != n) throw DomainError(where + ": expected " + std::to_string(n) + " rows");
  std::vector<Field::Elem> e;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw DomainError(where + ": row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      try {
        e.push_back(scalar::parse_elem(*field, entry_text(row[k])));
      } catch (const ParseError& err) {
        std::string msg = err.what();
        msg = msg.substr(msg.find(": ") + 2);
        throw ParseError(err.offset(), where + " entry (" + std::to_string(i + 1) + "," +
                                           std::to_string(k + 1) + "): " + msg);
      }
    }
  }
  return Matrix::from_entries(field, n, std::move(e));
}

}  // namespace

FieldPtr parse_field(const json& j, scalar::Limits limits) {
  const std::string kind = member(j, "kind", "field").get<std::string>();
  if (kind == "rationals") return Field::rationals(limits);
  if (kind == "number_field") return Field::number_field(parse_base(j), limits);
  if (kind == "rational_function") {
    std::vector<std::string> vars;
    for (const auto& v : member(j, "vars", "rational_function")) vars.push_back(v.get<std::string>());
    return Field::rational_function_field(parse_base(member(j, "base", "rational_function")), vars, limits);
  }
  if (kind == "algebraic_function") {
    const auto& base = member(j, "base", "algebraic_function");
    if (!base.is_object() || base.value("kind", "") != "rational_function")
      throw DomainError("algebraic_function: base must be a rational_function field");
    FieldPtr rf = parse_field(base, limits);
    std::vector<Field::Elem> coeffs;
    for (const auto& c : member(j, "min_poly", "algebraic_function"))
      coeffs.push_back(scalar::parse_elem(*rf, entry_text(c)));
    return Field::algebraic_function_field(rf, coeffs, optional_name(j, "a"));
  }
  if (kind == "finite_field") throw DomainError("finite_field is only allowed as a base field");
  throw DomainError("field: unknown kind \"" + kind + "\"");
}

scalar::GroupInput GroupFile::group() const { return scalar::GroupInput::make(field, generators); }

GroupFile parse_group(const json& j, scalar::Limits limits) {
  GroupFile g;
  g.field = parse_field(member(j, "field", "group"), limits);
  g.degree = parse_u64(member(j, "degree", "group"), "degree");
  if (g.degree == 0) throw DomainError("group: degree must be positive");
  const auto& gens = member(j, "generators", "group");
  if (!gens.is_array() || gens.empty()) throw DomainError("group: at least one generator is required");
  for (std::size_t i = 0; i < gens.size(); ++i)
    g.generators.push_back(parse_matrix(gens[i], g.field, g.degree, "generator " + std::to_string(i + 1)));
  if (j.contains("label")) g.label = j.at("label").get<std::string>();
  return g;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, path + ": malformed JSON");
  }
}

GroupFile read_group_file(const std::string& path, scalar::Limits limits) {
  try {
    return parse_group(read_json_file(path), limits);
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

Matrix parse_element(const json& j, const FieldPtr& field, std::size_t n) {
  return parse_matrix(j.is_object() ? member(j, "element", "element file") : j, field, n, "element");
}

Matrix read_element_file(const std::string& path, const FieldPtr& field, std::size_t n) {
  try {
    return parse_element(read_json_file(path), field, n);
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace linfin::cli
