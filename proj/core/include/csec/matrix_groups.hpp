#pragma once

#include <cstdint>
#include <vector>

#include "csec/field.hpp"
#include "csec/matrix.hpp"
#include "csec/perm_group.hpp"

namespace csec {

/// Which permutation representation a matrix group is turned into.
enum class LinearAction {
  Vectors,           // nonzero row vectors: faithful for GL(n,q)
  ProjectivePoints,  // 1-spaces: kernel is the scalars, so SL -> PSL, GL -> PGL
};

/// Points acted on by matrices (v -> vM). Vectors are enumerated by their
/// base-q code sum v_i q^i; projective points are the normalized vectors
/// (first nonzero coordinate 1) in code order.
class PointSet {
 public:
  using Element = FiniteField::Element;

  /// Throws CapExceeded if the point count would exceed `max_points`.
  PointSet(FiniteField field, std::size_t n, LinearAction action, std::size_t max_points = 1u << 16);

  const FiniteField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  LinearAction action() const noexcept { return action_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Element>& point(std::size_t i) const { return points_[i]; }
  std::size_t index_of(const std::vector<Element>& v) const;

  /// Throws InvalidArgument for a singular matrix.
  Permutation permutation(const Matrix& m) const;

 private:
  FiniteField field_;
  std::size_t n_;
  LinearAction action_;
  std::vector<std::vector<Element>> points_;
  std::vector<std::int32_t> index_by_code_;
};

/// Number of projective points, (q^n - 1)/(q - 1).
std::uint64_t projective_point_count(std::size_t n, std::uint32_t q);

PermGroup matrix_perm_group(const PointSet& points, const std::vector<Matrix>& gens);
PermGroup projective_perm_group(std::size_t n, const FiniteField& field, const std::vector<Matrix>& gens);

/// Transvections E + c E_{i,i+1} and E + c E_{i+1,i}, c running over the
/// GF(p)-basis 1, x, ..., x^(f-1).
std::vector<Matrix> sl_generators(std::size_t n, const FiniteField& field);
/// sl_generators plus diag(w, 1, ..., 1) for a primitive w.
std::vector<Matrix> gl_generators(std::size_t n, const FiniteField& field);
/// Lower triangular matrices with determinant 1.
std::vector<Matrix> lower_triangular_generators(std::size_t n, const FiniteField& field);
/// Lower unitriangular matrices (a Sylow p-subgroup of SL(n,q)).
std::vector<Matrix> unitriangular_generators(std::size_t n, const FiniteField& field);
/// The corner subgroup {E + a E_{n,1}}.
std::vector<Matrix> corner_generators(std::size_t n, const FiniteField& field);

/// |SL(n,q)|
Order special_linear_order(std::size_t n, std::uint32_t q);

/// The normalizer of the unitriangular Sylow subgroup inside SL(n,q), realized
/// as the image of the lower triangular determinant-1 matrices.
struct TriangularNormalizer {
  std::size_t n = 0;
  FiniteField field;
  LinearAction action;
  PermGroup special_linear;  // image of SL(n,q): SL itself or PSL
  Subgroup normalizer;       // image of lower triangular det-1 matrices
  Subgroup sylow;            // image of the lower unitriangular group
  Subgroup corner;           // image of {E + a E_{n,1}}
  Order closed_form;         // q^(n(n-1)/2) (q-1)^(n-1) / |scalars in SL| for PSL
};

/// Throws CapExceeded if the representation needs more than `max_points` points.
TriangularNormalizer lower_triangular_normalizer(std::size_t n, const FiniteField& field, LinearAction action,
                                                 std::size_t max_points = 4096);

/// Checks D^-1 (E + a E_{n,1}) D == E + a a_nn^-1 a_11 E_{n,1} on `trials`
/// random lower triangular determinant-1 D and random a. With
/// `unit_last_diagonal` the samples have a_nn = 1 and the right side is
/// E + a a_11 E_{n,1} (needs n > 2 or a field where that is forced).
bool corner_conjugation_identity(std::size_t n, const FiniteField& field, std::size_t trials,
                                 std::uint64_t seed = 0, bool unit_last_diagonal = false);

struct CornerCertificate {
  Order corner_order;
  Order normalizer_order;
  bool normal = false;
  /// Every nontrivial element of the corner has normal closure equal to the
  /// whole corner, so no smaller nontrivial normal subgroup sits inside it.
  bool minimal = false;
  std::size_t elements_checked = 0;
};

CornerCertificate certify_corner_minimal_normal(const TriangularNormalizer& t);

}  // namespace csec
