#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csec/perm_group.hpp"

namespace csec {

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
/// Dihedral group of the given order (2m). Order 4 is the Klein four group.
PermGroup dihedral_group(std::size_t order);
/// (Z_p)^k as k disjoint p-cycles.
PermGroup elementary_abelian_group(std::uint32_t p, std::size_t k);
/// Regular representation of the quaternion group of order 8.
PermGroup quaternion_group();
/// x -> x+1, x -> 2x on Z_7: the Frobenius group 7:3.
PermGroup frobenius21_group();
/// x -> ax+b on Z_p, a != 0: order p(p-1).
PermGroup affine_line_group(std::uint32_t p);
/// Acts on the disjoint union of the factors' point sets.
PermGroup direct_product(const std::vector<PermGroup>& factors);
/// PSL(2,q) and PGL(2,q) on the q+1 projective points.
PermGroup psl2_group(std::uint32_t q);
PermGroup pgl2_group(std::uint32_t q);
/// SL(n,q) acting faithfully on the nonzero vectors.
PermGroup special_linear_group(std::size_t n, std::uint32_t q);
/// Lower triangular determinant-1 matrices, on vectors or on projective points.
PermGroup triangular_group(std::size_t n, std::uint32_t q, bool projective);

/// A group description as accepted on the command line: either explicit
/// generators in 1-indexed cycle notation or a named constructor.
struct GroupSpec {
  enum class Kind { Perm, Named };
  Kind kind = Kind::Named;

  std::size_t degree = 0;
  /// generators[g] is a list of cycles, points 1-indexed
  std::vector<std::vector<std::vector<std::int64_t>>> generators;

  std::string name;
  std::vector<std::int64_t> params;
  std::vector<GroupSpec> factors;  // DirectProduct only

  static GroupSpec named(std::string name, std::vector<std::int64_t> params = {});
  static GroupSpec product(std::vector<GroupSpec> factors);

  /// Short human-readable label, e.g. "PGL2(7)" or "Sym(4) x Cyclic(2)".
  std::string label() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct BuildLimits {
  std::size_t max_degree = 5000;
};

/// Names accepted by build_group.
const std::vector<std::string>& named_group_names();

/// Throws InvalidArgument (malformed cycles, out-of-range points, unknown
/// names, bad parameters) or CapExceeded (degree above the cap).
PermGroup build_group(const GroupSpec& spec, const BuildLimits& limits = {});

/// Deterministic list of named groups used by the theorem scan, restricted to
/// orders <= max_order and listed in a fixed order.
std::vector<GroupSpec> scan_battery(std::uint64_t max_order = 500);

}  // namespace csec
