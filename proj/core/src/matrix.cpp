#include "csec/matrix.hpp"

#include <sstream>

#include "csec/error.hpp"

namespace csec {

Matrix::Matrix(FiniteField field, std::size_t n) : field_(std::move(field)), n_(n), entries_(n * n, 0) {}

Matrix::Matrix(FiniteField field, std::size_t n, std::vector<Element> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw InvalidArgument("matrix entry count does not match dimension");
  for (auto e : entries_)
    if (e >= field_.size()) throw InvalidArgument("matrix entry outside the field");
}

Matrix Matrix::identity(FiniteField field, std::size_t n) {
  Matrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::elementary(FiniteField field, std::size_t n, std::size_t row, std::size_t col, Element a) {
  if (row == col || row >= n || col >= n) throw InvalidArgument("elementary matrix needs distinct in-range indices");
  Matrix m = identity(std::move(field), n);
  m(row, col) = a;
  return m;
}

Matrix Matrix::diagonal(FiniteField field, std::vector<Element> diag) {
  const std::size_t n = diag.size();
  Matrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix dimension mismatch");
  const auto& F = a.field_;
  Matrix r(F, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      auto x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < a.n_; ++j) r(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix dimension mismatch");
  Matrix r(a.field_, a.n_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.field_.add(a.entries_[i], b.entries_[i]);
  return r;
}

Matrix::Element Matrix::det() const {
  const auto& F = field_;
  Matrix m = *this;
  Element d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && m(pivot, c) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(pivot, j), m(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(c, c));
    Element inv = F.inv(m(c, c));
    for (std::size_t r = c + 1; r < n_; ++r) {
      Element factor = F.mul(m(r, c), inv);
      if (!factor) continue;
      for (std::size_t j = c; j < n_; ++j) m(r, j) = F.sub(m(r, j), F.mul(factor, m(c, j)));
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  const auto& F = field_;
  Matrix m = *this;
  Matrix r = identity(F, n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && m(pivot, c) == 0) ++pivot;
    if (pivot == n_) throw InvalidArgument("matrix is singular");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(m(pivot, j), m(c, j));
      std::swap(r(pivot, j), r(c, j));
    }
    Element inv = F.inv(m(c, c));
    for (std::size_t j = 0; j < n_; ++j) {
      m(c, j) = F.mul(m(c, j), inv);
      r(c, j) = F.mul(r(c, j), inv);
    }
    for (std::size_t row = 0; row < n_; ++row) {
      if (row == c || m(row, c) == 0) continue;
      Element factor = m(row, c);
      for (std::size_t j = 0; j < n_; ++j) {
        m(row, j) = F.sub(m(row, j), F.mul(factor, m(c, j)));
        r(row, j) = F.sub(r(row, j), F.mul(factor, r(c, j)));
      }
    }
  }
  return r;
}

bool Matrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

std::vector<Matrix::Element> Matrix::apply(const std::vector<Element>& v) const {
  std::vector<Element> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!v[i]) continue;
    for (std::size_t j = 0; j < n_; ++j) out[j] = field_.add(out[j], field_.mul(v[i], (*this)(i, j)));
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << ']';
  return os.str();
}

}  // namespace csec
