#include "csec/named.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "csec/error.hpp"
#include "csec/field.hpp"
#include "csec/matrix_groups.hpp"

namespace csec {

namespace {

Permutation cycle_perm(std::size_t degree, std::vector<Point> cycle) {
  std::vector<std::vector<Point>> cycles{std::move(cycle)};
  return Permutation::from_cycles(degree, cycles);
}

std::vector<Point> iota_points(Point from, std::size_t count) {
  std::vector<Point> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = from + static_cast<Point>(i);
  return v;
}

}  // namespace

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(cycle_perm(n, iota_points(0, n)));
    if (n > 2) gens.push_back(cycle_perm(n, {0, 1}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("alternating group needs n >= 1");
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(cycle_perm(n, {0, 1, i}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group needs n >= 1");
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(cycle_perm(n, iota_points(0, n)));
  return PermGroup(n, std::move(gens));
}

PermGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2) throw InvalidArgument("dihedral group order must be even and at least 2");
  const std::size_t m = order / 2;
  if (m == 1) return cyclic_group(2);
  if (m == 2) {
    std::vector<std::vector<Point>> a{{0, 1}, {2, 3}}, b{{0, 2}, {1, 3}};
    return PermGroup(4, {Permutation::from_cycles(4, a), Permutation::from_cycles(4, b)});
  }
  std::vector<Point> reflect(m);
  for (std::size_t i = 0; i < m; ++i) reflect[i] = static_cast<Point>((m - i) % m);
  return PermGroup(m, {cycle_perm(m, iota_points(0, m)), Permutation(std::move(reflect))});
}

PermGroup elementary_abelian_group(std::uint32_t p, std::size_t k) {
  if (!is_prime(p)) throw InvalidArgument("elementary abelian group needs a prime, got " + std::to_string(p));
  if (k == 0) return PermGroup::trivial(1);
  const std::size_t degree = p * k;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(cycle_perm(degree, iota_points(static_cast<Point>(i * p), p)));
  return PermGroup(degree, std::move(gens));
}

PermGroup quaternion_group() {
  // elements s*u with s in {+1,-1}, u in {1,i,j,k}; index = 4*(s<0) + u
  static const std::array<std::array<int, 4>, 4> unit_product = {{
      {0, 1, 2, 3},  // 1*u
      {1, 4, 3, 6},  // i*1=i, i*i=-1, i*j=k, i*k=-j
      {2, 7, 4, 1},  // j*1=j, j*i=-k, j*j=-1, j*k=i
      {3, 2, 5, 4},  // k*1=k, k*i=j, k*j=-i, k*k=-1
  }};
  auto mul = [&](int a, int b) {
    int r = unit_product[a % 4][b % 4];
    if ((a >= 4) != (b >= 4)) r = (r + 4) % 8;
    return r;
  };
  std::vector<Permutation> gens;
  for (int g : {1, 2}) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) images[x] = static_cast<Point>(mul(x, g));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(8, std::move(gens));
}

PermGroup frobenius21_group() {
  std::vector<Point> shift(7), scale(7);
  for (Point x = 0; x < 7; ++x) {
    shift[x] = (x + 1) % 7;
    scale[x] = (2 * x) % 7;
  }
  return PermGroup(7, {Permutation(std::move(shift)), Permutation(std::move(scale))});
}

PermGroup affine_line_group(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("affine line group needs a prime, got " + std::to_string(p));
  std::uint32_t root = 1;
  for (std::uint32_t a = 1; a < p; ++a) {
    std::uint32_t x = a, k = 1;
    while (x != 1) x = x * a % p, ++k;
    if (k == p - 1) {
      root = a;
      break;
    }
  }
  std::vector<Point> shift(p), scale(p);
  for (Point x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    scale[x] = static_cast<Point>(std::uint64_t(root) * x % p);
  }
  return PermGroup(p, {Permutation(std::move(shift)), Permutation(std::move(scale))});
}

PermGroup direct_product(const std::vector<PermGroup>& factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& s : f.generators()) {
      std::vector<Point> images(degree);
      for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < f.degree(); ++i) images[offset + i] = static_cast<Point>(offset + s[static_cast<Point>(i)]);
      gens.emplace_back(std::move(images));
    }
    offset += f.degree();
  }
  return PermGroup(std::max<std::size_t>(degree, 1), degree ? std::move(gens) : std::vector<Permutation>{});
}

PermGroup psl2_group(std::uint32_t q) {
  auto F = FiniteField::of_order(q);
  return projective_perm_group(2, F, sl_generators(2, F));
}

PermGroup pgl2_group(std::uint32_t q) {
  auto F = FiniteField::of_order(q);
  return projective_perm_group(2, F, gl_generators(2, F));
}

PermGroup special_linear_group(std::size_t n, std::uint32_t q) {
  auto F = FiniteField::of_order(q);
  return matrix_perm_group(PointSet(F, n, LinearAction::Vectors), sl_generators(n, F));
}

PermGroup triangular_group(std::size_t n, std::uint32_t q, bool projective) {
  auto F = FiniteField::of_order(q);
  PointSet points(F, n, projective ? LinearAction::ProjectivePoints : LinearAction::Vectors);
  return matrix_perm_group(points, lower_triangular_generators(n, F));
}

GroupSpec GroupSpec::named(std::string name, std::vector<std::int64_t> params) {
  GroupSpec s;
  s.kind = Kind::Named;
  s.name = std::move(name);
  s.params = std::move(params);
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::Named;
  s.name = "DirectProduct";
  s.factors = std::move(factors);
  return s;
}

std::string GroupSpec::label() const {
  std::ostringstream os;
  if (kind == Kind::Perm) {
    os << "perm(degree " << degree << ", " << generators.size() << " generators)";
    return os.str();
  }
  if (name == "DirectProduct") {
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " x " : "") << factors[i].label();
    return os.str();
  }
  os << name;
  if (params.empty()) return os.str();
  os << '(';
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ')';
  return os.str();
}

const std::vector<std::string>& named_group_names() {
  static const std::vector<std::string> names = {
      "Sym", "Alt", "Cyclic", "Dihedral", "ElemAbelian", "PSL2", "PGL2", "SL", "DirectProduct",
      "Quaternion", "Frobenius21", "TriangularSL", "TriangularPSL"};
  return names;
}

namespace {

std::uint32_t param(const GroupSpec& spec, std::size_t i, std::int64_t lo, std::int64_t hi) {
  if (i >= spec.params.size())
    throw InvalidArgument(spec.name + " needs at least " + std::to_string(i + 1) + " parameter(s)");
  auto v = spec.params[i];
  if (v > hi)
    throw CapExceeded(spec.name + " parameter " + std::to_string(v) + " exceeds the cap " + std::to_string(hi));
  if (v < lo)
    throw InvalidArgument(spec.name + " parameter " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  return static_cast<std::uint32_t>(v);
}

void expect_params(const GroupSpec& spec, std::size_t n) {
  if (spec.params.size() != n)
    throw InvalidArgument(spec.name + " takes " + std::to_string(n) + " parameter(s), got " +
                          std::to_string(spec.params.size()));
}

std::uint32_t field_order(const GroupSpec& spec, std::size_t i) {
  auto q = param(spec, i, 2, 1 << 16);
  prime_power(q);
  return q;
}

PermGroup build_named(const GroupSpec& spec, const BuildLimits& limits) {
  const auto cap = static_cast<std::int64_t>(limits.max_degree);
  const auto& n = spec.name;
  if (n == "DirectProduct") {
    if (!spec.params.empty()) throw InvalidArgument("DirectProduct takes factors, not params");
    if (spec.factors.empty()) throw InvalidArgument("DirectProduct needs at least one factor");
    std::vector<PermGroup> parts;
    for (const auto& f : spec.factors) parts.push_back(build_group(f, limits));
    return direct_product(parts);
  }
  if (!spec.factors.empty()) throw InvalidArgument(n + " does not take factors");
  if (n == "Sym") return expect_params(spec, 1), symmetric_group(param(spec, 0, 1, cap));
  if (n == "Alt") return expect_params(spec, 1), alternating_group(param(spec, 0, 1, cap));
  if (n == "Cyclic") return expect_params(spec, 1), cyclic_group(param(spec, 0, 1, cap));
  if (n == "Dihedral") return expect_params(spec, 1), dihedral_group(param(spec, 0, 2, 2 * cap));
  if (n == "ElemAbelian") {
    expect_params(spec, 2);
    return elementary_abelian_group(param(spec, 0, 2, cap), param(spec, 1, 0, 64));
  }
  if (n == "PSL2") return expect_params(spec, 1), psl2_group(field_order(spec, 0));
  if (n == "PGL2") return expect_params(spec, 1), pgl2_group(field_order(spec, 0));
  if (n == "SL") {
    expect_params(spec, 2);
    return special_linear_group(param(spec, 0, 2, 16), field_order(spec, 1));
  }
  if (n == "TriangularSL" || n == "TriangularPSL") {
    expect_params(spec, 2);
    return triangular_group(param(spec, 0, 2, 16), field_order(spec, 1), n == "TriangularPSL");
  }
  if (n == "Quaternion") return expect_params(spec, 0), quaternion_group();
  if (n == "Frobenius21") return expect_params(spec, 0), frobenius21_group();
  throw InvalidArgument("unknown group name '" + n + "'");
}

}  // namespace

PermGroup build_group(const GroupSpec& spec, const BuildLimits& limits) {
  PermGroup g;
  if (spec.kind == GroupSpec::Kind::Perm) {
    if (spec.degree < 1) throw InvalidArgument("perm group degree must be at least 1");
    if (spec.degree > limits.max_degree)
      throw CapExceeded("degree " + std::to_string(spec.degree) + " exceeds cap " + std::to_string(limits.max_degree));
    std::vector<Permutation> gens;
    for (std::size_t gi = 0; gi < spec.generators.size(); ++gi) {
      std::vector<std::vector<Point>> cycles;
      for (const auto& c : spec.generators[gi]) {
        std::vector<Point> cycle;
        for (auto x : c) {
          if (x < 1 || static_cast<std::uint64_t>(x) > spec.degree)
            throw InvalidArgument("generator " + std::to_string(gi + 1) + ": point " + std::to_string(x) +
                                  " outside 1.." + std::to_string(spec.degree));
          cycle.push_back(static_cast<Point>(x - 1));
        }
        if (cycle.empty()) throw InvalidArgument("generator " + std::to_string(gi + 1) + ": empty cycle");
        cycles.push_back(std::move(cycle));
      }
      try {
        gens.push_back(Permutation::from_cycles(spec.degree, cycles));
      } catch (const InvalidArgument& e) {
        throw InvalidArgument("generator " + std::to_string(gi + 1) + ": " + e.what());
      }
    }
    g = PermGroup(spec.degree, std::move(gens));
  } else {
    g = build_named(spec, limits);
  }
  if (g.degree() > limits.max_degree)
    throw CapExceeded(spec.label() + " needs degree " + std::to_string(g.degree()) + ", above cap " +
                      std::to_string(limits.max_degree));
  return g;
}

std::vector<GroupSpec> scan_battery(std::uint64_t max_order) {
  using S = GroupSpec;
  std::vector<S> all;
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 30}) all.push_back(S::named("Cyclic", {n}));
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}})
    all.push_back(S::named("ElemAbelian", {p, k}));
  for (int m : {6, 8, 10, 12, 14, 16, 18, 20, 24, 30}) all.push_back(S::named("Dihedral", {m}));
  all.push_back(S::named("Quaternion"));
  all.push_back(S::named("Frobenius21"));
  for (int n = 2; n <= 6; ++n) all.push_back(S::named("Sym", {n}));
  for (int n = 3; n <= 6; ++n) all.push_back(S::named("Alt", {n}));
  const std::vector<std::pair<S, S>> pairs = {
      {S::named("Cyclic", {4}), S::named("Cyclic", {2})},  {S::named("Sym", {3}), S::named("Cyclic", {2})},
      {S::named("Sym", {3}), S::named("Cyclic", {3})},     {S::named("Sym", {3}), S::named("Sym", {3})},
      {S::named("Dihedral", {8}), S::named("Cyclic", {2})}, {S::named("Quaternion"), S::named("Cyclic", {3})},
      {S::named("Alt", {4}), S::named("Cyclic", {2})},     {S::named("Alt", {4}), S::named("Cyclic", {3})},
      {S::named("Frobenius21"), S::named("Cyclic", {2})},  {S::named("Sym", {4}), S::named("Cyclic", {2})},
      {S::named("Sym", {4}), S::named("Sym", {3})},         {S::named("Alt", {5}), S::named("Cyclic", {2})},
  };
  for (const auto& [a, b] : pairs) all.push_back(S::product({a, b}));
  for (int q : {2, 3, 4, 5, 7, 8, 9}) all.push_back(S::named("PSL2", {q}));
  for (int q : {2, 3, 4, 5, 7}) all.push_back(S::named("PGL2", {q}));
  for (int q : {2, 3, 4, 5, 7, 8, 9}) all.push_back(S::named("SL", {2, q}));
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 4}})
    all.push_back(S::named("TriangularSL", {n, q}));
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 9}, {3, 4}}) all.push_back(S::named("TriangularPSL", {n, q}));

  std::vector<S> out;
  for (auto& s : all)
    if (build_group(s).order() <= max_order) out.push_back(std::move(s));
  return out;
}

}  // namespace csec
