#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csec/iso.hpp"
#include "csec/lattice.hpp"
#include "csec/perm_group.hpp"

namespace csec {

struct FactorDescriptor {
  std::uint64_t order = 1;
  bool is_abelian = true;
  bool is_prime_order = false;
  /// For a nonabelian chief factor T^k: the id of T and k.
  std::optional<GroupId> simple_factor_id;
  std::uint64_t simple_factor_count = 0;
};

struct ChiefSeries {
  /// G = terms[0] > terms[1] > ... > terms.back() = 1, all normal in G.
  std::vector<Subgroup> terms;
  /// factors[i] describes terms[i] / terms[i+1].
  std::vector<FactorDescriptor> factors;
};

struct SeriesOptions {
  /// Without a seed the least candidate (by order, then element list) is
  /// taken at each step; with one the choice is random.
  std::optional<std::uint64_t> random_seed;
  /// Identify the simple factors of nonabelian chief factors.
  bool identify_factors = true;
};

/// Built bottom-up from the normal subgroup lattice: each step moves to a
/// normal subgroup covering the current one, so every factor is a minimal
/// normal subgroup of the corresponding quotient.
ChiefSeries chief_series(const GroupContext& ctx, const SeriesOptions& options = {});
ChiefSeries chief_series(const PermGroup& g, const SeriesOptions& options = {});

/// Every chief factor has prime order.
bool is_supersolvable(const GroupContext& ctx);
bool is_supersolvable(const PermGroup& g);

std::vector<Subgroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);
std::vector<Subgroup> lower_central_series(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);

/// Composition factors as a sorted multiset of ids: an abelian chief factor
/// of order p^k contributes k copies of Z_p, a nonabelian one T^k
/// contributes k copies of T.
std::vector<GroupId> composition_factors(const GroupContext& ctx, const SeriesOptions& options = {});
std::vector<GroupId> composition_factors(const PermGroup& g, const SeriesOptions& options = {});

bool is_simple(const PermGroup& g);

}  // namespace csec
