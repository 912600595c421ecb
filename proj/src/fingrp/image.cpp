#include "linfin/fingrp/image.hpp"

#include "linfin/core/errors.hpp"

namespace linfin::fingrp {

std::variant<FinGroupImage, CapExceeded> FinGroupImage::enumerate(std::vector<gf::FqMatrix> gens,
                                                                  std::size_t cap) {
  if (gens.empty()) throw DomainError("enumeration needs at least one generator");
  if (cap == 0) throw DomainError("enumeration cap must be positive");
  FinGroupImage H;
  H.field_ = gens[0].field_ptr();
  H.n_ = gens[0].degree();
  for (const auto& g : gens) H.inverses_.push_back(g.inverse());
  H.gens_ = std::move(gens);

  auto id = gf::FqMatrix::identity(H.field_, H.n_);
  H.index_.emplace(id, 0);
  H.elements_.push_back(std::move(id));
  H.tree_.push_back({0, 0});
  for (std::size_t i = 0; i < H.elements_.size(); ++i) {
    for (std::size_t g = 0; g < H.gens_.size(); ++g) {
      for (int sign : {1, -1}) {
        gf::FqMatrix y = H.elements_[i] * (sign > 0 ? H.gens_[g] : H.inverses_[g]);
        if (H.index_.count(y)) continue;
        if (H.elements_.size() == cap) return CapExceeded{cap + 1};
        H.index_.emplace(y, H.elements_.size());
        H.elements_.push_back(std::move(y));
        H.tree_.push_back({i, sign * static_cast<int>(g + 1)});
      }
    }
  }
  return H;
}

std::optional<std::size_t> FinGroupImage::index_of(const gf::FqMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinGroupImage::step(std::size_t i, int letter) const {
  std::size_t g = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
  auto j = index_of(elements_[i] * (letter > 0 ? gens_[g] : inverses_[g]));
  if (!j) throw InternalError("enumerated group is not closed");
  return *j;
}

Word FinGroupImage::word(std::size_t i) const {
  std::vector<int> rev;
  while (i != 0) {
    rev.push_back(tree_[i].letter);
    i = tree_[i].parent;
  }
  return Word::from_signed(std::vector<int>(rev.rbegin(), rev.rend()));
}

const std::vector<Word>& FinGroupImage::presentation() const {
  if (relators_) return *relators_;
  auto rel = std::make_shared<std::vector<Word>>();
  auto edges = std::make_shared<std::vector<RelatorEdge>>();
  std::vector<Word> words(elements_.size());
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    const auto& e = tree_[i];
    words[i] = words[e.parent] * Word::generator(static_cast<std::size_t>(std::abs(e.letter)) - 1,
                                                 e.letter > 0 ? 1 : -1);
  }
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      std::size_t y = step(x, static_cast<int>(g + 1));
      if (y != 0 && tree_[y].parent == x && tree_[y].letter == static_cast<int>(g + 1)) continue;
      Word r = words[x] * Word::generator(g) * words[y].inverse();
      if (r.empty()) continue;
      rel->push_back(std::move(r));
      edges->push_back({x, g});
    }
  }
  relators_ = rel;
  relator_edges_ = edges;
  return *relators_;
}

const std::vector<FinGroupImage::RelatorEdge>& FinGroupImage::relator_edges() const {
  presentation();
  return *relator_edges_;
}

SubgroupClosure subgroup_closure(const FinGroupImage& image, const std::vector<std::size_t>& gens) {
  SubgroupClosure S;
  std::unordered_map<std::size_t, std::size_t> seen;
  S.members.push_back(0);
  S.words.emplace_back();
  seen.emplace(0, 0);
  for (std::size_t i = 0; i < S.members.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto j = image.index_of(image.element(S.members[i]) * image.element(gens[g]));
      if (!j) throw InternalError("enumerated group is not closed");
      if (seen.count(*j)) continue;
      seen.emplace(*j, S.members.size());
      S.members.push_back(*j);
      S.words.push_back(S.words[i] * Word::generator(g));
    }
  }
  return S;
}

}  // namespace linfin::fingrp
