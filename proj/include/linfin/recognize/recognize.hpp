#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "json.hpp"
#include "linfin/decide/decide.hpp"
#include "linfin/fingrp/image.hpp"
#include "linfin/scalar/group_input.hpp"
#include "linfin/sw/congruence.hpp"

namespace linfin::recognize {

// A finite-field image of G under a congruence map whose relators all
// evaluate to the identity over the input field, so the map is injective
// on G.
struct IsoCopy {
  sw::CongruenceMap map;
  fingrp::FinGroupImage image;
  std::size_t skip = 0;
  std::size_t attempts = 0;
  std::size_t relators_checked = 0;

  std::size_t order() const { return image.order(); }
  // Word in G's generators for element i of the image.
  fingrp::Word witness(std::size_t i) const { return image.word(i); }
  nlohmann::json to_json() const;
};

// Tries skip = config.skip, config.skip + 1, ... until the relators are
// trivial. In characteristic 0 the first map must already work. Throws
// ResourceError when config.max_attempts maps were tried, and DomainError
// in characteristic 0 when a relator is nontrivial (G is infinite).
IsoCopy isomorphic_copy(const scalar::GroupInput& G, const decide::Config& config = {});

// Throws DomainError for an infinite group and ResourceError when
// finiteness cannot be decided.
Integer order_of_finite(const scalar::GroupInput& G, const decide::Config& config = {});

struct Membership {
  bool member = false;
  std::optional<fingrp::Word> witness;
  Integer group_order;
  // Order of <G, x>, unset when that group is infinite.
  std::optional<Integer> joint_order;

  nlohmann::json to_json(std::size_t rank) const;
};

Membership membership(const scalar::Matrix& x, const scalar::GroupInput& G,
                      const decide::Config& config = {});

// A subgroup of G computed in the copy. Generators are lifted to the input
// field through their witness words and re-checked against the map.
struct Subgroup {
  std::vector<std::size_t> members;  // indices into the copy's image
  std::vector<std::size_t> generator_indices;
  std::vector<fingrp::Word> words;
  std::vector<scalar::Matrix> generators;

  std::size_t order() const { return members.size(); }
  nlohmann::json to_json(std::size_t rank) const;
};

Subgroup center(const IsoCopy& copy, const scalar::GroupInput& G);
// Normal closure of the generator commutators.
Subgroup derived(const IsoCopy& copy, const scalar::GroupInput& G);

// Members of the smallest normal subgroup of the image containing `seeds`.
// `gens` receives a generating subset of the seeds plus any conjugates
// needed to close it.
std::vector<std::size_t> normal_closure(const fingrp::FinGroupImage& image,
                                        const std::vector<std::size_t>& seeds,
                                        std::vector<std::size_t>* gens = nullptr);

}  // namespace linfin::recognize
