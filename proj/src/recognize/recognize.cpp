#include "linfin/recognize/recognize.hpp"

#include <algorithm>
#include <unordered_set>

#include "linfin/core/errors.hpp"

namespace linfin::recognize {

using fingrp::FinGroupImage;
using fingrp::Word;
using scalar::GroupInput;
using scalar::Matrix;

namespace {

std::vector<gf::FqMatrix> images(const sw::CongruenceMap& m, const std::vector<Matrix>& gens) {
  std::vector<gf::FqMatrix> out;
  for (const auto& g : gens) out.push_back(m.apply(g));
  return out;
}

std::vector<std::size_t> generator_indices(const FinGroupImage& H) {
  std::vector<std::size_t> out;
  for (const auto& g : H.generators()) out.push_back(*H.index_of(g));
  return out;
}

decide::Verdict require_finite(const GroupInput& G, const decide::Config& config) {
  auto v = decide::is_finite(G, config);
  if (v.infinite()) throw DomainError("the group is infinite");
  if (!v.finite()) throw ResourceError("finiteness undecided: " + v.reason);
  return v;
}

Subgroup lift(const IsoCopy& copy, const GroupInput& G, std::vector<std::size_t> members,
              std::vector<std::size_t> gens) {
  Subgroup S;
  std::sort(members.begin(), members.end());
  S.members = std::move(members);
  S.generator_indices = std::move(gens);
  for (std::size_t i : S.generator_indices) {
    Word w = copy.witness(i);
    Matrix m = decide::evaluate_word(w, G);
    if (copy.map.apply(m) != copy.image.element(i))
      throw InternalError("lifted element does not map back to its image");
    S.words.push_back(std::move(w));
    S.generators.push_back(std::move(m));
  }
  return S;
}

}  // namespace

nlohmann::json IsoCopy::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : image.generators()) gens.push_back(sw::matrix_json(g));
  return {{"map", map.certificate()},
          {"generators", gens},
          {"order", image.order()},
          {"skip", skip},
          {"attempts", attempts},
          {"relators_checked", relators_checked}};
}

IsoCopy isomorphic_copy(const GroupInput& G, const decide::Config& config) {
  const bool char0 = G.field->characteristic() == 0;
  const std::size_t tries = char0 ? 1 : std::max<std::size_t>(config.max_attempts, 1);
  for (std::size_t a = 0; a < tries; ++a) {
    const std::size_t skip = config.skip + a;
    auto m = sw::build_sw(G, skip);
    auto r = FinGroupImage::enumerate(images(m, G.gens), config.cap);
    auto* H = std::get_if<FinGroupImage>(&r);
    if (!H) {
      if (char0) throw ResourceError("enumeration cap exceeded");
      continue;
    }
    auto K = decide::evaluate_relators(*H, G);
    bool trivial = std::all_of(K.begin(), K.end(), [](const Matrix& k) { return k.is_identity(); });
    if (trivial) return IsoCopy{std::move(m), std::move(*H), skip, a + 1, K.size()};
    if (char0) throw DomainError("a relator is nontrivial over the input field");
  }
  throw ResourceError("no isomorphic copy after " + std::to_string(tries) + " attempts");
}

Integer order_of_finite(const GroupInput& G, const decide::Config& config) {
  auto v = require_finite(G, config);
  if (v.order) return *v.order;
  return Integer(static_cast<unsigned long>(isomorphic_copy(G, config).order()));
}

nlohmann::json Membership::to_json(std::size_t rank) const {
  nlohmann::json j = {{"member", member}, {"group_order", linfin::to_string(group_order)}};
  j["joint_order"] = joint_order ? nlohmann::json(linfin::to_string(*joint_order)) : nlohmann::json(nullptr);
  if (witness) j["witness"] = fingrp::to_string(*witness, fingrp::generator_names(rank));
  return j;
}

Membership membership(const Matrix& x, const GroupInput& G, const decide::Config& config) {
  if (!x.field().same_as(*G.field) || x.degree() != G.n)
    throw DomainError("element does not match the group's field and degree");
  Membership M;
  M.group_order = order_of_finite(G, config);
  std::vector<Matrix> gens = G.gens;
  gens.push_back(x);
  auto Gx = GroupInput::make(G.field, std::move(gens));
  auto v = decide::is_finite(Gx, config);
  if (v.infinite()) return M;
  if (!v.finite()) throw ResourceError("finiteness undecided: " + v.reason);
  IsoCopy copy = isomorphic_copy(Gx, config);
  M.joint_order = Integer(static_cast<unsigned long>(copy.order()));
  if (*M.joint_order != M.group_order) return M;

  auto all = generator_indices(copy.image);
  all.pop_back();
  auto S = fingrp::subgroup_closure(copy.image, all);
  std::size_t target = *copy.image.index_of(copy.map.apply(x));
  auto it = std::find(S.members.begin(), S.members.end(), target);
  if (it == S.members.end()) throw InternalError("equal orders but the element is not reached");
  // Positions in `all` are G's generator indices.
  Word w = S.words[static_cast<std::size_t>(it - S.members.begin())];
  if (decide::evaluate_word(w, G) != x) throw InternalError("membership witness does not evaluate to x");
  M.member = true;
  M.witness = std::move(w);
  return M;
}

std::vector<std::size_t> normal_closure(const FinGroupImage& H, const std::vector<std::size_t>& seeds,
                                        std::vector<std::size_t>* gens_out) {
  std::vector<std::size_t> gens;
  for (std::size_t s : seeds)
    if (s != 0) gens.push_back(s);
  const auto conj = generator_indices(H);
  for (;;) {
    auto S = fingrp::subgroup_closure(H, gens);
    std::unordered_set<std::size_t> in(S.members.begin(), S.members.end());
    // Add the first missing seed or conjugate and close again.
    std::optional<std::size_t> missing;
    for (std::size_t s : seeds)
      if (!in.count(s)) {
        missing = s;
        break;
      }
    for (std::size_t i = 0; !missing && i < S.members.size(); ++i) {
      for (std::size_t g = 0; g < conj.size(); ++g) {
        const auto& e = H.element(S.members[i]);
        std::size_t c = *H.index_of(H.inverses()[g] * e * H.generators()[g]);
        if (!in.count(c)) {
          missing = c;
          break;
        }
      }
    }
    if (!missing) {
      if (gens_out) *gens_out = gens;
      return S.members;
    }
    gens.push_back(*missing);
  }
}

Subgroup center(const IsoCopy& copy, const GroupInput& G) {
  const auto& H = copy.image;
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < H.order(); ++i) {
    const auto& e = H.element(i);
    bool central = std::all_of(H.generators().begin(), H.generators().end(),
                               [&](const gf::FqMatrix& g) { return e * g == g * e; });
    if (central) members.push_back(i);
  }
  // Greedy generating set: add members not yet in the closure.
  std::vector<std::size_t> gens;
  std::unordered_set<std::size_t> reached = {0};
  for (std::size_t i : members) {
    if (reached.count(i)) continue;
    gens.push_back(i);
    auto S = fingrp::subgroup_closure(H, gens);
    reached.insert(S.members.begin(), S.members.end());
  }
  return lift(copy, G, std::move(members), std::move(gens));
}

Subgroup derived(const IsoCopy& copy, const GroupInput& G) {
  const auto& H = copy.image;
  std::vector<std::size_t> comm;
  for (std::size_t i = 0; i < H.rank(); ++i)
    for (std::size_t j = i + 1; j < H.rank(); ++j) {
      const auto& a = H.generators()[i];
      const auto& b = H.generators()[j];
      comm.push_back(*H.index_of(H.inverses()[i] * H.inverses()[j] * a * b));
    }
  std::vector<std::size_t> gens;
  auto members = normal_closure(H, comm, &gens);
  return lift(copy, G, std::move(members), std::move(gens));
}

nlohmann::json Subgroup::to_json(std::size_t rank) const {
  auto names = fingrp::generator_names(rank);
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t i = 0; i < generators.size(); ++i)
    gens.push_back({{"word", fingrp::to_string(words[i], names)}, {"matrix", generators[i].to_strings()}});
  return {{"order", order()}, {"generators", gens}};
}

}  // namespace linfin::recognize
