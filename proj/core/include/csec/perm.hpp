#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace csec {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. Point i is sent to images()[i].
///
/// Products are read left to right: (a * b) first applies a, then b, so
/// (a * b)[i] == b[a[i]]. Conjugation follows the same convention,
/// h^g = g^-1 * h * g.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from 0-indexed disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 std::span<const std::vector<Point>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Element order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Number of points moved.
  std::size_t support_size() const noexcept;

  /// 1-indexed cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation identity(std::size_t degree);

/// g^-1 * h * g
Permutation conjugate(const Permutation& h, const Permutation& g);

/// a^-1 * b^-1 * a * b
Permutation commutator(const Permutation& a, const Permutation& b);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace csec

template <>
struct std::hash<csec::Permutation> : csec::PermutationHash {};
