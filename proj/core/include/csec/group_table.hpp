#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "csec/perm_group.hpp"

namespace csec {

using ElementIndex = std::uint32_t;

/// A set of element indices of a GroupTable, stored as a bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  void insert(ElementIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(ElementIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  std::size_t size() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  std::vector<ElementIndex> indices() const;

  /// Compares the sorted index lists lexicographically.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

bool lex_less(const ElementSet& a, const ElementSet& b);

/// All elements of a desk-scale group, indexed in lexicographic order of
/// their image arrays (so the identity is index 0). Products use a full
/// Cayley table when the group is small enough, otherwise they are computed
/// on demand.
class GroupTable {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 20000;
  static constexpr std::size_t kDefaultCayleyLimit = 6000;

  GroupTable(const GroupTable&) = delete;
  GroupTable& operator=(const GroupTable&) = delete;

  /// Throws CapExceeded when |G| > max_order.
  explicit GroupTable(PermGroup g, std::uint64_t max_order = kDefaultMaxOrder,
                      std::size_t cayley_limit = kDefaultCayleyLimit);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }
  ElementIndex index_of(const Permutation& p) const;
  bool has_cayley_table() const noexcept { return !cayley_.empty(); }

  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  /// g^-1 a g
  ElementIndex conj(ElementIndex a, ElementIndex g) const { return mul(mul(inverse_[g], a), g); }
  std::uint64_t element_order(ElementIndex a) const { return orders_[a]; }
  const std::vector<ElementIndex>& generator_indices() const noexcept { return gen_idx_; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet whole() const;
  ElementSet trivial() const;

  /// Subgroup generated by the given elements.
  ElementSet closure(std::span<const ElementIndex> gens) const;
  /// <H, x> for a subgroup H with generators `h_gens`, by adding right cosets.
  ElementSet extend(const ElementSet& h, std::span<const ElementIndex> h_gens, ElementIndex x) const;
  ElementSet conjugate(const ElementSet& h, ElementIndex g) const;
  ElementSet cyclic(ElementIndex x) const;

  /// Deterministic small generating set: repeatedly adds the least element
  /// not yet generated.
  std::vector<ElementIndex> generating_set(const ElementSet& h) const;

  ElementSet from_subgroup(const Subgroup& h) const;
  ElementSet from_group(const PermGroup& h) const;
  Subgroup to_subgroup(const ElementSet& h) const;

  /// Element conjugacy classes as index lists, sorted by least member.
  const std::vector<std::vector<ElementIndex>>& conjugacy_classes() const;

 private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex> lookup_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementIndex> gen_idx_;
  std::vector<std::uint16_t> cayley_;
  void compute_classes() const;
  mutable std::vector<std::vector<ElementIndex>> classes_;
  mutable std::once_flag classes_once_;
};

}  // namespace csec
