#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "linfin/core/errors.hpp"

namespace linfin::fingrp {

struct ProductReplacementParams {
  std::size_t min_slots = 4;
  std::size_t burn_in = 50;
};

// Accumulator variant of product replacement. M needs operator* and
// inverse(). Each slot carries its inverse so that inverting costs a
// product instead of an elimination.
template <class M>
std::vector<M> product_replacement(const std::vector<M>& gens, std::uint64_t seed, std::size_t count,
                                   ProductReplacementParams params = {}) {
  if (gens.empty()) throw DomainError("product replacement needs a generator");
  std::vector<std::pair<M, M>> slots;
  const std::size_t r = std::max(gens.size(), params.min_slots);
  std::vector<M> inverses;
  for (const auto& g : gens) inverses.push_back(g.inverse());
  for (std::size_t i = 0; i < r; ++i) slots.emplace_back(gens[i % gens.size()], inverses[i % gens.size()]);
  std::pair<M, M> acc{gens[0] * inverses[0], gens[0] * inverses[0]};

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> slot(0, r - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  auto mix = [&] {
    std::size_t i = slot(rng), j = slot(rng);
    while (j == i) j = slot(rng);
    std::pair<M, M> x = slots[j];
    if (coin(rng)) std::swap(x.first, x.second);
    auto& s = slots[i];
    if (coin(rng)) {
      s = {x.first * s.first, s.second * x.second};
    } else {
      s = {s.first * x.first, x.second * s.second};
    }
    acc = {acc.first * s.first, s.second * acc.second};
  };
  for (std::size_t k = 0; k < params.burn_in; ++k) mix();
  std::vector<M> out;
  for (std::size_t k = 0; k < count; ++k) {
    mix();
    out.push_back(acc.first);
  }
  return out;
}

}  // namespace linfin::fingrp
