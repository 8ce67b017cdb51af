#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "csec/perm.hpp"

namespace csec {

/// Exact group orders. Factorials overflow fixed-width integers quickly.
using Order = boost::multiprecision::cpp_int;

/// Converts an exact order to 64 bits, throwing CapExceeded if it does not fit.
std::uint64_t to_u64(const Order& n);

/// Tunable limits shared by the permutation-group operations.
struct EngineLimits {
  /// Largest index accepted by coset actions (and so by quotient groups).
  std::size_t coset_degree_cap = 5000;
  /// Normalizers and centralizers scan every element of G up to this order and
  /// use the stabilizer-chain backtrack above it.
  std::uint64_t element_scan_limit = 10000;
};

/// A finitely generated permutation group together with a base and strong
/// generating set computed by deterministic Schreier-Sims.
///
/// Values are immutable and cheap to copy (the chain is shared).
class PermGroup {
 public:
  /// The trivial group of degree 0.
  PermGroup();

  /// Builds the stabilizer chain eagerly. `base_prefix` forces the first base
  /// points; further points are picked greedily by largest orbit.
  /// Throws DegreeMismatch if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::span<const Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const std::vector<Permutation>& strong_generators() const noexcept;
  const std::vector<Point>& base() const noexcept;
  const Order& order() const noexcept;

  /// Number of levels in the stabilizer chain (== base().size()).
  std::size_t chain_length() const noexcept;
  /// Orbit of base()[level] under the pointwise stabilizer of the earlier base points.
  const std::vector<Point>& basic_orbit(std::size_t level) const;
  /// True if `point` lies in basic_orbit(level).
  bool in_basic_orbit(std::size_t level, Point point) const;
  /// An element u of the level's stabilizer with base()[level]^u == point.
  const Permutation& transversal(std::size_t level, Point point) const;

  /// Membership by sifting through the chain. Throws DegreeMismatch.
  bool contains(const Permutation& p) const;

  bool is_trivial() const noexcept { return order() == 1; }
  bool is_abelian() const;

  /// Uniformly random element (product of random transversal entries).
  Permutation random_element(std::mt19937_64& rng) const;

  /// Calls `f` once per group element, in chain order.
  void for_each_element(const std::function<void(const Permutation&)>& f) const;
  std::vector<Permutation> elements() const;

  /// Orbit of a point under the generators, in discovery order.
  std::vector<Point> orbit(Point p) const;

  Permutation identity() const { return Permutation(degree()); }

 private:
  struct Chain;
  std::shared_ptr<const Chain> chain_;
};

/// A subgroup of a fixed ambient group. Holds its own stabilizer chain.
class Subgroup {
 public:
  /// Throws NotContained if a generator is not in `ambient`.
  Subgroup(PermGroup ambient, std::vector<Permutation> generators);

  static Subgroup whole(const PermGroup& ambient);
  static Subgroup trivial(const PermGroup& ambient);

  const PermGroup& ambient() const noexcept { return ambient_; }
  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& generators() const noexcept { return group_.generators(); }
  const Order& order() const noexcept { return group_.order(); }
  bool contains(const Permutation& p) const { return group_.contains(p); }

  /// Same set of elements (ambients may differ).
  friend bool same_elements(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(PermGroup ambient, PermGroup group);
  friend Subgroup adopt_subgroup(PermGroup ambient, PermGroup group);
  PermGroup ambient_;
  PermGroup group_;
};

/// Wraps a group already known to lie inside `ambient` without re-checking.
Subgroup adopt_subgroup(PermGroup ambient, PermGroup group);

bool same_elements(const Subgroup& a, const Subgroup& b);

/// Every element of `inner` lies in `outer`.
bool is_subset(const PermGroup& inner, const PermGroup& outer);

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens);
bool contains(const PermGroup& g, const Permutation& p);

/// <H, g>
Subgroup closure(const Subgroup& h, const Permutation& g);

Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g);
bool is_normal(const PermGroup& g, const Subgroup& h);

/// Smallest normal subgroup of G containing S.
Subgroup normal_closure(const PermGroup& g, const Subgroup& s);
Subgroup normal_closure(const PermGroup& g, std::span<const Permutation> elements);

Subgroup normalizer(const PermGroup& g, const Subgroup& h, const EngineLimits& limits = {});
Subgroup centralizer(const PermGroup& g, const Subgroup& h, const EngineLimits& limits = {});

/// Chain-based backtrack search for the normalizer or centralizer, exposed so
/// it can be checked against the element scan on small groups.
Subgroup normalizer_backtrack(const PermGroup& g, const Subgroup& h);
Subgroup centralizer_backtrack(const PermGroup& g, const Subgroup& h);

Subgroup center(const PermGroup& g, const EngineLimits& limits = {});
Subgroup derived_subgroup(const PermGroup& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  std::uint64_t size = 0;
};

/// Element conjugacy classes sorted by representative. Requires |G| to fit
/// the element scan.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);

/// Right-coset action of G on the cosets of H.
struct CosetAction {
  PermGroup image;
  std::vector<Permutation> generator_images;  // parallel to G.generators()
  std::vector<Permutation> coset_representatives;
  PermGroup subgroup;

  /// Image of an arbitrary element of G.
  Permutation image_of(const Permutation& g) const;
  std::size_t coset_of(const Permutation& g) const;

 private:
  friend CosetAction coset_action(const PermGroup&, const Subgroup&, const EngineLimits&);
  struct Index;
  std::shared_ptr<const Index> index_;
};

/// Throws CapExceeded if |G:H| exceeds limits.coset_degree_cap.
CosetAction coset_action(const PermGroup& g, const Subgroup& h, const EngineLimits& limits = {});

/// Faithful permutation representation of G/N. Throws NotNormal.
PermGroup quotient_group(const PermGroup& g, const Subgroup& n, const EngineLimits& limits = {});

}  // namespace csec
