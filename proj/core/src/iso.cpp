#include "csec/iso.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <regex>
#include <shared_mutex>
#include <sstream>

#include "csec/error.hpp"
#include "csec/field.hpp"
#include "csec/group_table.hpp"
#include "csec/named.hpp"

namespace csec {

bool GroupId::identified() const {
  switch (kind) {
    case Kind::UnknownSimple:
    case Kind::Composite:
      return false;
    case Kind::DirectProduct:
      return std::all_of(factors.begin(), factors.end(), [](const GroupId& f) { return f.identified(); });
    default:
      return true;
  }
}

std::string GroupId::to_string() const {
  auto p = [&](std::size_t i) { return std::to_string(params.at(i)); };
  switch (kind) {
    case Kind::Cyclic:
      return "Z" + p(0);
    case Kind::ElementaryAbelian:
      return "E" + p(0) + "^" + p(1);
    case Kind::Dihedral:
      return "D" + p(0);
    case Kind::Alternating:
      return "A" + p(0);
    case Kind::Symmetric:
      return "S" + p(0);
    case Kind::PSL2:
      return "L2(" + p(0) + ")";
    case Kind::Named:
      return tag;
    case Kind::UnknownSimple:
      return "simple(" + p(0) + ")";
    case Kind::Composite:
      return "group(" + p(0) + ")";
    case Kind::DirectProduct: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factors[i].to_string();
      return s;
    }
  }
  return {};
}

GroupId GroupId::parse(const std::string& text) {
  if (text.find(" x ") != std::string::npos) {
    std::vector<GroupId> parts;
    std::size_t start = 0;
    while (true) {
      auto pos = text.find(" x ", start);
      parts.push_back(parse(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
      if (pos == std::string::npos) break;
      start = pos + 3;
    }
    return product(std::move(parts));
  }
  static const std::regex simple_re(R"(([ZDAS])(\d+))"), ea_re(R"(E(\d+)\^(\d+))"), l2_re(R"(L2\((\d+)\))"),
      unknown_re(R"(simple\((\d+)\))"), composite_re(R"(group\((\d+)\))");
  std::smatch m;
  auto num = [&](int i) { return std::stoull(m[i].str()); };
  if (std::regex_match(text, m, simple_re)) {
    switch (m[1].str()[0]) {
      case 'Z': return cyclic(num(2));
      case 'D': return dihedral(num(2));
      case 'A': return alternating(num(2));
      default: return symmetric(num(2));
    }
  }
  if (std::regex_match(text, m, ea_re)) return elementary_abelian(num(1), num(2));
  if (std::regex_match(text, m, l2_re)) return psl2(num(1));
  if (std::regex_match(text, m, unknown_re)) return unknown_simple(num(1));
  if (std::regex_match(text, m, composite_re)) return composite(num(1));
  if (text == "Q8" || text == "F20" || text == "F21" || text == "F42") return named(text);
  throw InvalidArgument("unrecognized group id '" + text + "'");
}

std::optional<PermGroup> GroupId::reference() const {
  switch (kind) {
    case Kind::Cyclic:
      return cyclic_group(params.at(0));
    case Kind::ElementaryAbelian:
      return elementary_abelian_group(static_cast<std::uint32_t>(params.at(0)), params.at(1));
    case Kind::Dihedral:
      return dihedral_group(params.at(0));
    case Kind::Alternating:
      return alternating_group(params.at(0));
    case Kind::Symmetric:
      return symmetric_group(params.at(0));
    case Kind::PSL2:
      return psl2_group(static_cast<std::uint32_t>(params.at(0)));
    case Kind::Named:
      if (tag == "Q8") return quaternion_group();
      if (tag == "F21") return frobenius21_group();
      if (tag == "F20") return affine_line_group(5);
      if (tag == "F42") return affine_line_group(7);
      return std::nullopt;
    case Kind::DirectProduct: {
      std::vector<PermGroup> parts;
      for (const auto& f : factors) {
        auto r = f.reference();
        if (!r) return std::nullopt;
        parts.push_back(std::move(*r));
      }
      return direct_product(parts);
    }
    default:
      return std::nullopt;
  }
}

std::vector<std::uint64_t> psl2_parameters(const GroupId& id) {
  if (id.kind == GroupId::Kind::PSL2) return {id.params.at(0)};
  if (id.kind == GroupId::Kind::Alternating && id.params.at(0) == 5) return {4, 5};
  if (id.kind == GroupId::Kind::Alternating && id.params.at(0) == 6) return {9};
  return {};
}

std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& prime_powers) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (auto q : prime_powers) {
    if (q < 2) continue;
    std::uint64_t p = 2;
    while (q % p) ++p;
    by_prime[p].push_back(q);
  }
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  std::vector<std::uint64_t> out(len, 1);
  for (auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) out[len - 1 - i] *= v[i];
  return out;
}

namespace {

// prime-power invariants of an abelian group from its element-order counts
std::vector<std::uint64_t> abelian_invariants(const std::map<std::uint64_t, std::uint64_t>& orders, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    std::uint32_t e = 0;
    while (rest % p == 0) rest /= p, ++e;
    // logs[k] = log_p #{x : x^(p^k) = 1}
    std::vector<std::uint32_t> logs{0};
    std::uint64_t pk = 1;
    while (logs.back() < e) {
      pk *= p;
      std::uint64_t count = 0;
      for (auto [o, c] : orders)
        if (pk % o == 0) count += c;
      std::uint32_t l = 0;
      while (count > 1) count /= p, ++l;
      logs.push_back(l);
    }
    logs.push_back(e);
    std::uint64_t power = 1;
    for (std::size_t k = 1; k + 1 < logs.size(); ++k) {
      power *= p;
      auto at_least_k = logs[k] - logs[k - 1];
      auto at_least_next = logs[k + 1] - logs[k];
      for (auto i = at_least_next; i < at_least_k; ++i) out.push_back(power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::uint64_t, std::uint64_t> order_counts(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  g.for_each_element([&](const Permutation& x) { ++counts[x.order()]; });
  return counts;
}

struct Prepared {
  std::unique_ptr<GroupTable> table;
  Fingerprint fp;
  std::vector<std::uint64_t> class_size_of;
  std::vector<ElementIndex> class_reps;
  std::vector<ElementIndex> gens;
  bool abelian = false;
};

// Greedy generating sequence: start from an element of largest order, then
// add the element (from a fixed pseudo-random scan) that enlarges the
// generated subgroup most, stopping early once the whole group is reached.
std::vector<ElementIndex> choose_generators(const GroupTable& t) {
  const std::size_t n = t.size();
  std::vector<ElementIndex> gens;
  if (n == 1) return gens;
  ElementIndex first = 0;
  for (ElementIndex x = 1; x < n; ++x)
    if (t.element_order(x) > t.element_order(first)) first = x;
  gens.push_back(first);
  ElementSet cur = t.cyclic(first);
  std::vector<ElementIndex> scan(n);
  std::iota(scan.begin(), scan.end(), 0);
  std::shuffle(scan.begin(), scan.end(), std::mt19937_64(0x5eed));
  const std::size_t budget = n <= 2000 ? n : 300;
  while (cur.size() != n) {
    ElementIndex best = 0;
    ElementSet best_set;
    std::size_t tried = 0;
    for (ElementIndex x : scan) {
      if (cur.contains(x)) continue;
      ElementSet k = t.extend(cur, gens, x);
      if (best_set.universe() == 0 || k.size() > best_set.size()) {
        best = x;
        best_set = std::move(k);
        if (best_set.size() == n) break;
      }
      if (++tried >= budget) break;
    }
    gens.push_back(best);
    cur = std::move(best_set);
  }
  return gens;
}

std::shared_ptr<Prepared> prepare(const PermGroup& g) {
  if (g.order() > kIsoOrderCap)
    throw CapExceeded("isomorphism test on a group of order " + g.order().str() + " exceeds cap " +
                      std::to_string(kIsoOrderCap));
  auto p = std::make_shared<Prepared>();
  p->table = std::make_unique<GroupTable>(g, kIsoOrderCap);
  const auto& t = *p->table;
  auto& fp = p->fp;
  fp.order = t.size();
  for (ElementIndex x = 0; x < t.size(); ++x) ++fp.element_orders[t.element_order(x)];
  p->class_size_of.assign(t.size(), 0);
  for (const auto& cls : t.conjugacy_classes()) {
    fp.class_sizes.push_back(cls.size());
    p->class_reps.push_back(cls.front());
    if (cls.size() == 1) ++fp.center_order;
    for (auto x : cls) p->class_size_of[x] = cls.size();
  }
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  p->abelian = fp.center_order == fp.order;
  if (p->abelian) {
    fp.derived_order = 1;
    fp.abelian_invariants = abelian_invariants(fp.element_orders, fp.order);
  } else {
    Subgroup d = derived_subgroup(g);
    fp.derived_order = to_u64(d.order());
    PermGroup q = quotient_group(g, d, EngineLimits{kIsoOrderCap, kIsoOrderCap});
    fp.abelian_invariants = abelian_invariants(order_counts(q), fp.order / fp.derived_order);
  }
  p->gens = choose_generators(t);
  return p;
}

// Extends the generator assignment to <gens[0..k]> and checks it is a
// well-defined injective homomorphism there.
bool consistent(const Prepared& a, const Prepared& b, const std::vector<ElementIndex>& images) {
  const auto& ta = *a.table;
  const auto& tb = *b.table;
  std::vector<std::int64_t> phi(ta.size(), -1);
  std::vector<char> used(tb.size(), 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<ElementIndex> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const ElementIndex x = queue[k];
    for (std::size_t s = 0; s < images.size(); ++s) {
      const ElementIndex y = ta.mul(x, a.gens[s]);
      const ElementIndex im = tb.mul(static_cast<ElementIndex>(phi[x]), images[s]);
      if (phi[y] >= 0) {
        if (phi[y] != im) return false;
        continue;
      }
      if (used[im]) return false;
      phi[y] = im;
      used[im] = 1;
      queue.push_back(y);
    }
  }
  return true;
}

bool search(const Prepared& a, const Prepared& b, std::vector<ElementIndex>& images) {
  const std::size_t k = images.size();
  if (k == a.gens.size()) return true;
  const ElementIndex g = a.gens[k];
  const auto& ta = *a.table;
  const auto& tb = *b.table;
  auto matches = [&](ElementIndex y) {
    return tb.element_order(y) == ta.element_order(g) && b.class_size_of[y] == a.class_size_of[g];
  };
  auto attempt = [&](ElementIndex y) {
    if (!matches(y)) return false;
    images.push_back(y);
    if (consistent(a, b, images) && search(a, b, images)) return true;
    images.pop_back();
    return false;
  };
  // the first image only matters up to inner automorphisms of the target
  if (k == 0) {
    for (ElementIndex y : b.class_reps)
      if (attempt(y)) return true;
    return false;
  }
  for (ElementIndex y = 0; y < tb.size(); ++y)
    if (attempt(y)) return true;
  return false;
}

std::optional<std::vector<ElementIndex>> iso_images(const Prepared& a, const Prepared& b) {
  if (!(a.fp == b.fp)) return std::nullopt;
  std::vector<ElementIndex> images;
  if (search(a, b, images)) return images;
  return std::nullopt;
}

class ReferenceCache {
 public:
  std::shared_ptr<const Prepared> get(const GroupId& id) {
    const std::string key = id.to_string();
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto ref = id.reference();
    std::shared_ptr<const Prepared> p = ref ? prepare(*ref) : nullptr;
    cache_.emplace(key, p);
    return p;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const Prepared>> cache_;
};

ReferenceCache& reference_cache() {
  static ReferenceCache cache;
  return cache;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }

}  // namespace

Fingerprint fingerprint(const PermGroup& g) { return prepare(g)->fp; }

bool is_isomorphic(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return false;
  auto a = prepare(g), b = prepare(h);
  if (!(a->fp == b->fp)) return false;
  // abelian groups are determined by their invariants
  if (a->abelian) return true;
  return iso_images(*a, *b).has_value();
}

std::optional<std::vector<Permutation>> find_isomorphism(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  auto a = prepare(g), b = prepare(h);
  auto images = iso_images(*a, *b);
  if (!images) return std::nullopt;
  // express G's own generators through the chosen generating sequence
  const auto& ta = *a->table;
  const auto& tb = *b->table;
  std::vector<std::int64_t> phi(ta.size(), -1);
  phi[0] = 0;
  std::vector<ElementIndex> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t s = 0; s < images->size(); ++s) {
      ElementIndex y = ta.mul(queue[k], a->gens[s]);
      if (phi[y] >= 0) continue;
      phi[y] = tb.mul(static_cast<ElementIndex>(phi[queue[k]]), (*images)[s]);
      queue.push_back(y);
    }
  std::vector<Permutation> out;
  for (const auto& s : g.generators()) out.push_back(tb.element(static_cast<ElementIndex>(phi[ta.index_of(s)])));
  return out;
}

GroupId identify(const PermGroup& g) {
  auto a = prepare(g);
  const std::uint64_t n = a->fp.order;
  if (n == 1) return GroupId::cyclic(1);
  if (a->abelian) {
    const auto& inv = a->fp.abelian_invariants;
    auto factors = invariant_factors(inv);
    if (factors.size() == 1) return GroupId::cyclic(n);
    if (std::all_of(inv.begin(), inv.end(), [&](auto q) { return q == inv.front() && is_prime(q); }))
      return GroupId::elementary_abelian(inv.front(), inv.size());
    std::vector<GroupId> parts;
    for (auto d : factors) parts.push_back(GroupId::cyclic(d));
    return GroupId::product(std::move(parts));
  }
  std::vector<GroupId> candidates;
  if (n % 2 == 0 && n >= 6) candidates.push_back(GroupId::dihedral(n));
  for (std::uint64_t m = 4; m <= 7; ++m)
    if (factorial(m) / 2 == n) candidates.push_back(GroupId::alternating(m));
  for (std::uint64_t m = 3; m <= 7; ++m)
    if (factorial(m) == n) candidates.push_back(GroupId::symmetric(m));
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13})
    if (psl2_order(q) == n) candidates.push_back(GroupId::psl2(q));
  if (n == 8) candidates.push_back(GroupId::named("Q8"));
  if (n == 20 || n == 21 || n == 42) candidates.push_back(GroupId::named("F" + std::to_string(n)));
  for (const auto& id : candidates) {
    auto ref = reference_cache().get(id);
    if (ref && ref->fp == a->fp && iso_images(*a, *ref)) return id;
  }
  const auto& t = *a->table;
  bool simple = true;
  for (const auto& cls : t.conjugacy_classes()) {
    if (cls.front() == 0) continue;
    if (t.closure(cls).size() != n) {
      simple = false;
      break;
    }
  }
  return simple ? GroupId::unknown_simple(n) : GroupId::composite(n);
}

}  // namespace csec
