#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csec/perm_group.hpp"

namespace csec {

/// An isomorphism type from the fixed catalog.
struct GroupId {
  enum class Kind {
    Cyclic,             // params {n}                 "Z12"
    ElementaryAbelian,  // params {p, k}              "E2^3"
    Dihedral,           // params {order}             "D8"
    Alternating,        // params {n}                 "A5"
    Symmetric,          // params {n}                 "S4"
    PSL2,               // params {q}                 "L2(7)"
    DirectProduct,      // factors                    "Z2 x Z4"
    Named,              // tag            "Q8", "F20", "F21", "F42"
    UnknownSimple,      // params {order}             "simple(m)"
    Composite,          // params {order}             "group(m)"
  };

  Kind kind = Kind::Cyclic;
  std::vector<std::uint64_t> params{1};
  std::string tag;
  std::vector<GroupId> factors;

  static GroupId cyclic(std::uint64_t n) { return {Kind::Cyclic, {n}, {}, {}}; }
  static GroupId elementary_abelian(std::uint64_t p, std::uint64_t k) { return {Kind::ElementaryAbelian, {p, k}, {}, {}}; }
  static GroupId dihedral(std::uint64_t order) { return {Kind::Dihedral, {order}, {}, {}}; }
  static GroupId alternating(std::uint64_t n) { return {Kind::Alternating, {n}, {}, {}}; }
  static GroupId symmetric(std::uint64_t n) { return {Kind::Symmetric, {n}, {}, {}}; }
  static GroupId psl2(std::uint64_t q) { return {Kind::PSL2, {q}, {}, {}}; }
  static GroupId named(std::string tag) { return {Kind::Named, {}, std::move(tag), {}}; }
  static GroupId product(std::vector<GroupId> factors) { return {Kind::DirectProduct, {}, {}, std::move(factors)}; }
  static GroupId unknown_simple(std::uint64_t order) { return {Kind::UnknownSimple, {order}, {}, {}}; }
  static GroupId composite(std::uint64_t order) { return {Kind::Composite, {order}, {}, {}}; }

  /// False for UnknownSimple and Composite (and products containing them).
  bool identified() const;
  std::string to_string() const;
  /// Inverse of to_string. Throws InvalidArgument.
  static GroupId parse(const std::string& text);
  /// A concrete group of this type; nullopt for unidentified kinds.
  std::optional<PermGroup> reference() const;

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

/// q such that the group is isomorphic to L2(q): A5 gives {4, 5}, A6 gives
/// {9}, L2(q) gives {q}; empty otherwise.
std::vector<std::uint64_t> psl2_parameters(const GroupId& id);

/// Isomorphism invariants.
struct Fingerprint {
  std::uint64_t order = 0;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // order -> count
  std::vector<std::uint64_t> class_sizes;                 // sorted
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::vector<std::uint64_t> abelian_invariants;  // of G/G', prime powers, sorted

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

constexpr std::uint64_t kIsoOrderCap = 20000;

/// Throws CapExceeded above kIsoOrderCap.
Fingerprint fingerprint(const PermGroup& g);

/// Fingerprints first, then a backtracking search for an isomorphism from a
/// small generating sequence of G. Throws CapExceeded above kIsoOrderCap.
bool is_isomorphic(const PermGroup& g, const PermGroup& h);

/// Images of G's generators under an isomorphism G -> H, if one exists.
std::optional<std::vector<Permutation>> find_isomorphism(const PermGroup& g, const PermGroup& h);

/// Catalog identification. Abelian groups are named from their invariants;
/// nonabelian ones are compared against reference groups of matching order
/// in the preference order dihedral, alternating, symmetric, L2(q), named.
GroupId identify(const PermGroup& g);

/// Invariant factors d1 | d2 | ... of an abelian group given by its prime-power
/// invariants.
std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& prime_powers);

}  // namespace csec
