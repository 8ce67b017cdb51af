#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "csec/group_table.hpp"
#include "csec/perm_group.hpp"

namespace csec {

struct LatticeOptions {
  /// Largest |G| for which the full subgroup lattice is enumerated.
  std::uint64_t order_cap = 5000;
  /// Largest |G| for which an element table is built at all (random
  /// maximal-subgroup search runs between order_cap and this).
  std::uint64_t table_cap = GroupTable::kDefaultMaxOrder;
  /// Seed and effort for the random maximal-subgroup search.
  std::uint64_t seed = 0;
  std::size_t random_attempts = 400;
  EngineLimits limits;
};

struct SubgroupClass {
  Subgroup representative;
  std::uint64_t class_size = 0;
  Order normalizer_order;
  /// False when the enumeration that produced this class is not known to be
  /// exhaustive.
  bool verified_complete = true;
};

/// Per-group analysis cache: element table, subgroup classes, maximal
/// classes and normal subgroups are computed on first use and kept.
/// Safe to query from several threads.
class GroupContext {
 public:
  struct ClassData {
    ElementSet representative;  // lexicographically least conjugate
    std::vector<ElementIndex> generators;
    std::uint64_t order = 0;
    std::uint64_t class_size = 0;
  };

  explicit GroupContext(PermGroup g, LatticeOptions options = {});
  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const PermGroup& group() const noexcept { return group_; }
  const LatticeOptions& options() const noexcept { return options_; }
  std::uint64_t order() const noexcept { return order_; }

  /// Throws CapExceeded when |G| > table_cap.
  const GroupTable& table() const;
  /// True when the full lattice fits under order_cap.
  bool lattice_available() const noexcept { return order_ <= options_.order_cap; }

  /// Conjugacy classes of subgroups sorted by order, then representative.
  /// Throws CapExceeded when the lattice is unavailable.
  const std::vector<ClassData>& subgroup_classes() const;

  /// Maximal subgroup classes sorted by descending order, then representative.
  /// Each one is certified by the closure test. Falls back to a seeded random
  /// search (complete() == false) above order_cap.
  const std::vector<ClassData>& maximal_classes() const;
  bool maximal_classes_complete() const;

  /// All normal subgroups, sorted by order then lexicographically. Built
  /// from element conjugacy classes, independently of subgroup_classes().
  const std::vector<ElementSet>& normal_subgroups() const;
  std::vector<ElementSet> minimal_normal_subgroups() const;

  ElementSet set_of(const Subgroup& h) const { return table().from_subgroup(h); }
  Subgroup subgroup(const ElementSet& h) const { return table().to_subgroup(h); }
  ElementSet normalizer(const ElementSet& h) const;
  /// Distinct conjugates of h; the first entry is the least one.
  std::vector<ElementSet> conjugates(const ElementSet& h) const;
  bool are_conjugate(const ElementSet& a, const ElementSet& b) const;
  bool is_normal(const ElementSet& h) const;
  /// <M, x> == G for one x from every double coset MxM outside M.
  bool is_maximal(const ElementSet& m) const;

  SubgroupClass to_class(const ClassData& c, bool complete) const;

 private:
  void enumerate_subgroups() const;
  void find_maximal() const;
  void find_normal() const;
  ClassData make_class(const ElementSet& h) const;

  PermGroup group_;
  LatticeOptions options_;
  std::uint64_t order_;
  mutable std::once_flag table_once_, classes_once_, maximal_once_, normal_once_;
  mutable std::unique_ptr<GroupTable> table_;
  mutable std::vector<ClassData> classes_;
  mutable std::vector<ClassData> maximal_;
  mutable bool maximal_complete_ = false;
  mutable std::vector<ElementSet> normal_;
};

std::vector<SubgroupClass> all_subgroups(const PermGroup& g, std::uint64_t order_cap = 5000);
/// Total number of subgroups (sum of class sizes).
std::uint64_t subgroup_count(const std::vector<SubgroupClass>& classes);

std::vector<SubgroupClass> maximal_subgroups(const PermGroup& g, const LatticeOptions& options = {});
std::vector<SubgroupClass> maximal_subgroups(const GroupContext& ctx);

std::vector<SubgroupClass> subgroups_of_index(const PermGroup& g, std::uint64_t index, std::uint64_t order_cap = 5000);
std::vector<SubgroupClass> subgroups_of_index(const GroupContext& ctx, std::uint64_t index);

/// Certifies maximality of M in G directly (closure test over double cosets).
bool is_maximal(const PermGroup& g, const Subgroup& m);

std::vector<Subgroup> normal_subgroups(const PermGroup& g);
std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g);

/// Conjugacy classes of Klein four subgroups, from pairs of commuting involutions.
std::vector<SubgroupClass> klein_four_classes(const GroupContext& ctx);
std::vector<SubgroupClass> klein_four_classes(const PermGroup& g);

/// How classes of subgroups of K (K <= G) merge under G-conjugation.
struct FusionReport {
  std::size_t inner_classes = 0;
  std::size_t outer_classes = 0;
  /// outer_class_of[i] is the G-class index of the i-th K-class.
  std::vector<std::size_t> outer_class_of;
};

FusionReport fusion_analysis(const GroupContext& g, const std::vector<SubgroupClass>& inner);

}  // namespace csec
