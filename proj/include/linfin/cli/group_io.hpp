#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "linfin/scalar/group_input.hpp"

namespace linfin::cli {

// Field descriptors:
//   {"kind": "rationals"}
//   {"kind": "number_field", "min_poly": [c0, ..., ck], "name"?: "a"}
//   {"kind": "rational_function", "base": <field>, "vars": ["x", ...]}
//   {"kind": "algebraic_function", "base": <rational_function>,
//    "min_poly": ["expr", ...], "name"?: "a"}
//   {"kind": "finite_field", "p": p, "l": l, "modulus"?: [m0, ..., ml],
//    "name"?: "w"}   (only as the base of a rational function field)
// Rational coefficients are integers or strings such as "-3/4".
scalar::FieldPtr parse_field(const nlohmann::json& j, scalar::Limits limits = {});

struct GroupFile {
  scalar::FieldPtr field;
  std::size_t degree = 0;
  std::vector<scalar::Matrix> generators;
  std::string label;

  scalar::GroupInput group() const;
};

// {"field": <field>, "degree": n, "generators": [[[entry, ...], ...], ...],
//  "label"?: "..."}; entries are scalar expressions or integers.
GroupFile parse_group(const nlohmann::json& j, scalar::Limits limits = {});
GroupFile read_group_file(const std::string& path, scalar::Limits limits = {});

// Rows of entries, either bare or under the key "element".
scalar::Matrix parse_element(const nlohmann::json& j, const scalar::FieldPtr& field, std::size_t n);
scalar::Matrix read_element_file(const std::string& path, const scalar::FieldPtr& field,
                                 std::size_t n);

// Throws ParseError with the byte offset of malformed JSON.
nlohmann::json read_json_file(const std::string& path);

}  // namespace linfin::cli
