#include "csec/matrix_groups.hpp"

#include <numeric>
#include <random>

#include "csec/error.hpp"

namespace csec {

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// GF(p)-basis 1, x, ..., x^(f-1) of GF(p^f) as encoded elements
std::vector<FiniteField::Element> prime_field_basis(const FiniteField& F) {
  std::vector<FiniteField::Element> basis;
  FiniteField::Element place = 1;
  for (std::uint32_t i = 0; i < F.degree(); ++i, place *= F.characteristic()) basis.push_back(place);
  return basis;
}

}  // namespace

std::uint64_t projective_point_count(std::size_t n, std::uint32_t q) {
  return (ipow(q, n) - 1) / (q - 1);
}

PointSet::PointSet(FiniteField field, std::size_t n, LinearAction action, std::size_t max_points)
    : field_(std::move(field)), n_(n), action_(action) {
  if (n < 1) throw InvalidArgument("dimension must be positive");
  const std::uint32_t q = field_.size();
  // guard the code space before allocating it
  std::uint64_t codes = 1;
  for (std::size_t i = 0; i < n; ++i) {
    codes *= q;
    if (codes > (std::uint64_t{1} << 24)) throw CapExceeded("vector space too large for a point action");
  }
  std::uint64_t count = action == LinearAction::Vectors ? codes - 1 : projective_point_count(n, q);
  if (count > max_points)
    throw CapExceeded("matrix action on " + std::to_string(count) + " points exceeds cap " +
                      std::to_string(max_points));
  index_by_code_.assign(codes, -1);
  for (std::uint64_t code = 1; code < codes; ++code) {
    std::vector<Element> v(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= q) v[i] = static_cast<Element>(c % q);
    if (action == LinearAction::ProjectivePoints) {
      std::size_t lead = 0;
      while (v[lead] == 0) ++lead;
      if (v[lead] != 1) continue;
    }
    index_by_code_[code] = static_cast<std::int32_t>(points_.size());
    points_.push_back(std::move(v));
  }
}

std::size_t PointSet::index_of(const std::vector<Element>& v) const {
  std::vector<Element> w = v;
  if (action_ == LinearAction::ProjectivePoints) {
    std::size_t lead = 0;
    while (lead < n_ && w[lead] == 0) ++lead;
    if (lead == n_) throw InvalidArgument("zero vector is not a projective point");
    Element s = field_.inv(w[lead]);
    for (auto& x : w) x = field_.mul(x, s);
  }
  std::uint64_t code = 0;
  for (std::size_t i = n_; i-- > 0;) code = code * field_.size() + w[i];
  std::int32_t idx = code < index_by_code_.size() ? index_by_code_[code] : -1;
  if (idx < 0) throw InvalidArgument("vector is not a point of this action");
  return static_cast<std::size_t>(idx);
}

Permutation PointSet::permutation(const Matrix& m) const {
  if (m.dim() != n_) throw InvalidArgument("matrix dimension does not match the point set");
  if (!m.is_invertible()) throw InvalidArgument("singular matrix " + m.to_string() + " does not act on points");
  std::vector<Point> images(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) images[i] = static_cast<Point>(index_of(m.apply(points_[i])));
  return Permutation(std::move(images));
}

PermGroup matrix_perm_group(const PointSet& points, const std::vector<Matrix>& gens) {
  std::vector<Permutation> perms;
  for (const auto& m : gens) perms.push_back(points.permutation(m));
  return PermGroup(points.size(), std::move(perms));
}

PermGroup projective_perm_group(std::size_t n, const FiniteField& field, const std::vector<Matrix>& gens) {
  return matrix_perm_group(PointSet(field, n, LinearAction::ProjectivePoints), gens);
}

std::vector<Matrix> sl_generators(std::size_t n, const FiniteField& field) {
  if (n < 2) throw InvalidArgument("SL(n,q) generators need n >= 2");
  std::vector<Matrix> gens;
  for (auto c : prime_field_basis(field))
    for (std::size_t i = 0; i + 1 < n; ++i) {
      gens.push_back(Matrix::elementary(field, n, i + 1, i, c));
      gens.push_back(Matrix::elementary(field, n, i, i + 1, c));
    }
  return gens;
}

std::vector<Matrix> gl_generators(std::size_t n, const FiniteField& field) {
  auto gens = sl_generators(n, field);
  std::vector<FiniteField::Element> d(n, 1);
  d[0] = field.primitive_element();
  gens.push_back(Matrix::diagonal(field, d));
  return gens;
}

std::vector<Matrix> unitriangular_generators(std::size_t n, const FiniteField& field) {
  std::vector<Matrix> gens;
  for (auto c : prime_field_basis(field))
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) gens.push_back(Matrix::elementary(field, n, i, j, c));
  return gens;
}

std::vector<Matrix> lower_triangular_generators(std::size_t n, const FiniteField& field) {
  auto gens = unitriangular_generators(n, field);
  const auto w = field.primitive_element();
  if (field.size() > 2)
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<FiniteField::Element> d(n, 1);
      d[i] = w;
      d[n - 1] = field.inv(w);
      gens.push_back(Matrix::diagonal(field, d));
    }
  return gens;
}

std::vector<Matrix> corner_generators(std::size_t n, const FiniteField& field) {
  std::vector<Matrix> gens;
  for (auto c : prime_field_basis(field)) gens.push_back(Matrix::elementary(field, n, n - 1, 0, c));
  return gens;
}

Order special_linear_order(std::size_t n, std::uint32_t q) {
  Order r = 1;
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) r *= q;
  for (std::size_t i = 2; i <= n; ++i) r *= Order(ipow(q, i) - 1);
  return r;
}

TriangularNormalizer lower_triangular_normalizer(std::size_t n, const FiniteField& field, LinearAction action,
                                                 std::size_t max_points) {
  if (n < 2) throw InvalidArgument("triangular normalizer needs n >= 2");
  PointSet points(field, n, action, max_points);
  auto images = [&](const std::vector<Matrix>& ms) {
    std::vector<Permutation> out;
    for (const auto& m : ms) out.push_back(points.permutation(m));
    return out;
  };
  PermGroup sl = matrix_perm_group(points, sl_generators(n, field));
  const std::uint32_t q = field.size();
  Order closed = 1;
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) closed *= q;
  for (std::size_t i = 0; i + 1 < n; ++i) closed *= (q - 1);
  if (action == LinearAction::ProjectivePoints) closed /= std::gcd(static_cast<std::uint32_t>(n), q - 1);
  return TriangularNormalizer{
      n,
      field,
      action,
      sl,
      Subgroup(sl, images(lower_triangular_generators(n, field))),
      Subgroup(sl, images(unitriangular_generators(n, field))),
      Subgroup(sl, images(corner_generators(n, field))),
      closed,
  };
}

bool corner_conjugation_identity(std::size_t n, const FiniteField& field, std::size_t trials, std::uint64_t seed,
                                 bool unit_last_diagonal) {
  if (n < 2) throw InvalidArgument("conjugation identity needs n >= 2");
  std::mt19937_64 rng(seed);
  const std::uint32_t q = field.size();
  std::uniform_int_distribution<std::uint32_t> any(0, q - 1), nonzero(1, q - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    Matrix d(field, n);
    FiniteField::Element prod = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) d(i, j) = any(rng);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      d(i, i) = nonzero(rng);
      prod = field.mul(prod, d(i, i));
    }
    d(n - 1, n - 1) = field.inv(prod);
    if (unit_last_diagonal && d(n - 1, n - 1) != 1) {
      // move the correction onto a_{n-1,n-1} (or a_11 when n == 2)
      std::size_t k = n > 2 ? n - 2 : 0;
      d(k, k) = field.mul(d(k, k), d(n - 1, n - 1));
      d(n - 1, n - 1) = 1;
    }
    if (d.det() != 1) return false;
    const auto a = any(rng);
    Matrix lhs = d.inverse() * Matrix::elementary(field, n, n - 1, 0, a) * d;
    auto coefficient = field.mul(field.mul(a, field.inv(d(n - 1, n - 1))), d(0, 0));
    if (unit_last_diagonal) coefficient = field.mul(a, d(0, 0));
    if (lhs != Matrix::elementary(field, n, n - 1, 0, coefficient)) return false;
  }
  return true;
}

CornerCertificate certify_corner_minimal_normal(const TriangularNormalizer& t) {
  const PermGroup& b = t.normalizer.group();
  Subgroup corner(b, t.corner.generators());
  CornerCertificate cert;
  cert.corner_order = corner.order();
  cert.normalizer_order = b.order();
  cert.normal = is_normal(b, corner);
  cert.minimal = cert.normal && corner.order() > 1;
  corner.group().for_each_element([&](const Permutation& x) {
    if (x.is_identity()) return;
    ++cert.elements_checked;
    std::vector<Permutation> seed{x};
    if (normal_closure(b, std::span<const Permutation>(seed)).order() != corner.order()) cert.minimal = false;
  });
  return cert;
}

}  // namespace csec
