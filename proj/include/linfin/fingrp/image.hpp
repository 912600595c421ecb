#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "linfin/fingrp/word.hpp"
#include "linfin/gf/fq_matrix.hpp"

namespace linfin::fingrp {

// More than the cap: the group has at least `at_least` elements.
struct CapExceeded {
  std::size_t at_least;
};

// Breadth-first enumeration of a matrix group over GF(q). Letters are
// tried in the order g1, g1^-1, g2, g2^-1, ...; each element keeps the
// tree edge it was discovered by, so witness words are shortest.
class FinGroupImage {
 public:
  struct TreeEdge {
    std::size_t parent;  // == index for the identity
    int letter;          // +-(generator + 1); 0 for the identity
  };

  static std::variant<FinGroupImage, CapExceeded> enumerate(std::vector<gf::FqMatrix> gens,
                                                           std::size_t cap);

  std::size_t rank() const { return gens_.size(); }
  std::size_t degree() const { return n_; }
  const gf::FqFieldPtr& field() const { return field_; }
  const std::vector<gf::FqMatrix>& generators() const { return gens_; }
  const std::vector<gf::FqMatrix>& inverses() const { return inverses_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<gf::FqMatrix>& elements() const { return elements_; }
  const gf::FqMatrix& element(std::size_t i) const { return elements_[i]; }
  const TreeEdge& edge(std::size_t i) const { return tree_[i]; }
  std::optional<std::size_t> index_of(const gf::FqMatrix& m) const;
  // Index of element(i) * g^(+-1) for a signed letter.
  std::size_t step(std::size_t i, int letter) const;

  Word word(std::size_t i) const;

  // One relator per non-tree edge along a positive generator:
  // w(x) * g * w(x g)^-1, freely reduced, empty ones dropped.
  const std::vector<Word>& presentation() const;
  // The edge (x, generator) each relator comes from, in the same order.
  struct RelatorEdge {
    std::size_t source;
    std::size_t gen;
  };
  const std::vector<RelatorEdge>& relator_edges() const;

 private:
  FinGroupImage() = default;

  gf::FqFieldPtr field_;
  std::size_t n_ = 0;
  std::vector<gf::FqMatrix> gens_;
  std::vector<gf::FqMatrix> inverses_;
  std::vector<gf::FqMatrix> elements_;
  std::vector<TreeEdge> tree_;
  std::unordered_map<gf::FqMatrix, std::size_t, gf::FqMatrixHash> index_;
  mutable std::shared_ptr<std::vector<Word>> relators_;
  mutable std::shared_ptr<std::vector<RelatorEdge>> relator_edges_;
};

// Subgroup of an enumerated group generated by some of its elements,
// closed by breadth-first search inside the group. Returns element
// indices into `image`; `words[i]` expresses members[i] in `gens`.
struct SubgroupClosure {
  std::vector<std::size_t> members;
  std::vector<Word> words;
};
SubgroupClosure subgroup_closure(const FinGroupImage& image, const std::vector<std::size_t>& gens);

}  // namespace linfin::fingrp
