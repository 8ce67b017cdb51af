#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace csec {

/// GF(p^f) with a fixed irreducible modulus. Elements are the integers
/// 0..q-1; the base-p digits of an element are its polynomial coefficients,
/// least significant digit = constant term.
///
/// Moduli are pinned so encodings are reproducible: GF(4) x^2+x+1,
/// GF(8) x^3+x+1, GF(9) x^2+1, GF(16) x^4+x+1. Other extension fields use the
/// monic irreducible polynomial whose lower coefficients, read as a base-p
/// number, are least.
class FiniteField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  /// Throws InvalidArgument unless p is prime, f >= 1 and p^f <= 2^16.
  static FiniteField make(std::uint32_t p, std::uint32_t f);
  /// Field of order q (a prime power).
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t size() const noexcept;
  /// Monic modulus, coefficients from the constant term up.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  /// Least element (by encoding) of multiplicative order q-1.
  Element primitive_element() const noexcept;

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Throws InvalidArgument for zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  std::uint64_t multiplicative_order(Element a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.tables_ == b.tables_ || (a.size() == b.size() && a.modulus() == b.modulus());
  }

 private:
  struct Tables;
  explicit FiniteField(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n);

/// Returns (p, f) with q = p^f, or throws InvalidArgument.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

/// Polynomial over GF(p) given by coefficients (constant term first) is irreducible.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace csec
