#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csec/field.hpp"

namespace csec {

/// Square matrix over a finite field, row-major.
class Matrix {
 public:
  using Element = FiniteField::Element;

  Matrix(FiniteField field, std::size_t n);  // zero matrix
  Matrix(FiniteField field, std::size_t n, std::vector<Element> entries);

  static Matrix identity(FiniteField field, std::size_t n);
  /// E + a * E_{row,col} (0-indexed, row != col).
  static Matrix elementary(FiniteField field, std::size_t n, std::size_t row, std::size_t col, Element a);
  static Matrix diagonal(FiniteField field, std::vector<Element> diag);

  std::size_t dim() const noexcept { return n_; }
  const FiniteField& field() const noexcept { return field_; }
  Element operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  Element det() const;
  bool is_invertible() const { return det() != 0; }
  /// Throws InvalidArgument if singular.
  Matrix inverse() const;
  bool is_lower_triangular() const;

  /// Row vector times matrix.
  std::vector<Element> apply(const std::vector<Element>& v) const;

  std::string to_string() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_ && a.field_ == b.field_;
  }

 private:
  FiniteField field_;
  std::size_t n_;
  std::vector<Element> entries_;
};

}  // namespace csec
