#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "linfin/fingrp/image.hpp"
#include "linfin/scalar/group_input.hpp"
#include "linfin/sw/congruence.hpp"

namespace linfin::decide {

struct TorsionBounds {
  unsigned long n0 = 0;
  std::optional<Integer> nu1;  // bound on finite subgroup orders
  Integer nu2;                 // bound on torsion element orders

  nlohmann::json to_json() const;
};

// `nu1_table` supplies values for degrees where the closed form is not a
// valid bound.
TorsionBounds torsion_bounds(std::size_t n, const scalar::Field& field,
                             const std::map<unsigned long, Integer>& nu1_table = {});

struct Config {
  std::uint64_t seed = 0;
  std::size_t cap = 200000;
  std::size_t skip = 0;
  std::size_t precheck = 10;
  std::size_t max_attempts = 64;
  std::map<unsigned long, Integer> nu1_table;
};

enum class Outcome { Finite, Infinite, Undecided };
const char* outcome_name(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::Undecided;
  std::optional<Integer> order;
  std::string reason;
  nlohmann::json certificate = nlohmann::json::object();

  bool finite() const { return outcome == Outcome::Finite; }
  bool infinite() const { return outcome == Outcome::Infinite; }
  nlohmann::json to_json() const;
};

scalar::Matrix evaluate_word(const fingrp::Word& w, const scalar::GroupInput& G);
bool is_unipotent_matrix(const scalar::Matrix& m);
// Whether the normal closure of K in G consists of unipotent matrices.
bool normal_closure_unipotent(const std::vector<scalar::Matrix>& K, const scalar::GroupInput& G);

// Relator values over the input field. Tree-node matrices are computed
// once and shared by all relators.
std::vector<scalar::Matrix> evaluate_relators(const fingrp::FinGroupImage& image,
                                              const scalar::GroupInput& G);

Verdict is_finite(const scalar::GroupInput& G, const Config& config = {});
Verdict is_finite_cyclic(const scalar::Matrix& g, const Config& config = {});

}  // namespace linfin::decide
