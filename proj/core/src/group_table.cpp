#include "csec/group_table.hpp"

#include <algorithm>
#include <bit>

#include "csec/error.hpp"

namespace csec {

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  return r;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  ElementSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
  return r;
}

std::vector<ElementIndex> ElementSet::indices() const {
  std::vector<ElementIndex> out;
  for_each([&](ElementIndex i) { out.push_back(i); });
  return out;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  // Compare sorted lists: scan for the first index where membership differs.
  // The set containing that index has the smaller element at that position,
  // unless the other list has already ended.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (!diff) continue;
    int bit = __builtin_ctzll(diff);
    bool in_a = (a.words_[w] >> bit) & 1;
    // the set with the extra index is smaller, unless the other set has no
    // further elements (then it is a proper prefix and therefore smaller)
    const ElementSet& other = in_a ? b : a;
    std::uint64_t rest_mask = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    bool other_has_more = (other.words_[w] & rest_mask) != 0;
    for (std::size_t v = w + 1; v < other.words_.size() && !other_has_more; ++v)
      other_has_more = other.words_[v] != 0;
    return other_has_more ? in_a : !in_a;
  }
  return false;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

GroupTable::GroupTable(PermGroup g, std::uint64_t max_order, std::size_t cayley_limit)
    : group_(std::move(g)) {
  if (group_.order() > max_order)
    throw CapExceeded("group of order " + group_.order().str() + " exceeds element table cap " +
                      std::to_string(max_order));
  elements_ = group_.elements();
  std::sort(elements_.begin(), elements_.end());
  const std::size_t n = elements_.size();
  lookup_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) lookup_.emplace(elements_[i], static_cast<ElementIndex>(i));
  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }
  for (const auto& s : group_.generators())
    if (!s.is_identity()) gen_idx_.push_back(index_of(s));

  if (n <= cayley_limit && n <= 65535 && n > 0) {
    // Right multiplication by generators, then mul(x, y) along a BFS tree of
    // y over the generators: x*(y'*s) = (x*y')*s.
    std::vector<std::vector<ElementIndex>> right(gen_idx_.size(), std::vector<ElementIndex>(n));
    for (std::size_t s = 0; s < gen_idx_.size(); ++s)
      for (std::size_t x = 0; x < n; ++x)
        right[s][x] = index_of(elements_[x] * elements_[gen_idx_[s]]);
    std::vector<std::int64_t> parent(n, -1), via(n, -1);
    std::vector<ElementIndex> bfs{0};
    parent[0] = 0;
    for (std::size_t k = 0; k < bfs.size(); ++k)
      for (std::size_t s = 0; s < gen_idx_.size(); ++s) {
        ElementIndex y = right[s][bfs[k]];
        if (parent[y] >= 0) continue;
        parent[y] = bfs[k];
        via[y] = static_cast<std::int64_t>(s);
        bfs.push_back(y);
      }
    cayley_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      std::uint16_t* row = &cayley_[x * n];
      row[0] = static_cast<std::uint16_t>(x);
      for (std::size_t k = 1; k < bfs.size(); ++k) {
        ElementIndex y = bfs[k];
        row[y] = static_cast<std::uint16_t>(right[static_cast<std::size_t>(via[y])][row[parent[y]]]);
      }
    }
  }
}

ElementIndex GroupTable::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) throw NotContained("element " + p.to_cycle_string() + " is not in the table");
  return it->second;
}

ElementIndex GroupTable::mul(ElementIndex a, ElementIndex b) const {
  if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_of(elements_[a] * elements_[b]);
}

ElementSet GroupTable::whole() const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i) s.insert(static_cast<ElementIndex>(i));
  return s;
}

ElementSet GroupTable::trivial() const {
  ElementSet s(size());
  s.insert(0);
  return s;
}

ElementSet GroupTable::closure(std::span<const ElementIndex> gens) const {
  ElementSet h = trivial();
  std::vector<ElementIndex> used;
  for (ElementIndex x : gens) {
    if (h.contains(x)) continue;
    h = extend(h, used, x);
    used.push_back(x);
  }
  return h;
}

ElementSet GroupTable::extend(const ElementSet& h, std::span<const ElementIndex> h_gens,
                              ElementIndex x) const {
  if (h.contains(x)) return h;
  const std::vector<ElementIndex> hlist = h.indices();
  ElementSet out = h;
  std::vector<ElementIndex> gens(h_gens.begin(), h_gens.end());
  gens.push_back(x);
  // right cosets H*r; the union is closed once every rep times every
  // generator lands in it
  std::vector<ElementIndex> reps{0};
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (ElementIndex s : gens) {
      ElementIndex y = mul(reps[k], s);
      if (out.contains(y)) continue;
      for (ElementIndex e : hlist) out.insert(mul(e, y));
      reps.push_back(y);
    }
  }
  return out;
}

ElementSet GroupTable::conjugate(const ElementSet& h, ElementIndex g) const {
  ElementSet out(size());
  ElementIndex gi = inverse_[g];
  h.for_each([&](ElementIndex a) { out.insert(mul(mul(gi, a), g)); });
  return out;
}

ElementSet GroupTable::cyclic(ElementIndex x) const {
  ElementSet out = trivial();
  for (ElementIndex y = x; y != 0; y = mul(y, x)) out.insert(y);
  return out;
}

std::vector<ElementIndex> GroupTable::generating_set(const ElementSet& h) const {
  std::vector<ElementIndex> gens;
  ElementSet current = trivial();
  h.for_each([&](ElementIndex x) {
    if (current.contains(x)) return;
    current = extend(current, gens, x);
    gens.push_back(x);
  });
  return gens;
}

ElementSet GroupTable::from_group(const PermGroup& h) const {
  std::vector<ElementIndex> gens;
  for (const auto& s : h.generators()) gens.push_back(index_of(s));
  return closure(gens);
}

ElementSet GroupTable::from_subgroup(const Subgroup& h) const { return from_group(h.group()); }

Subgroup GroupTable::to_subgroup(const ElementSet& h) const {
  std::vector<Permutation> gens;
  for (ElementIndex i : generating_set(h)) gens.push_back(elements_[i]);
  return adopt_subgroup(group_, PermGroup(group_.degree(), std::move(gens)));
}

const std::vector<std::vector<ElementIndex>>& GroupTable::conjugacy_classes() const {
  std::call_once(classes_once_, [this] { compute_classes(); });
  return classes_;
}

void GroupTable::compute_classes() const {
  std::vector<bool> seen(size(), false);
  for (ElementIndex x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::vector<ElementIndex> cls{x};
    seen[x] = true;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (ElementIndex g : gen_idx_) {
        ElementIndex y = conj(cls[k], g);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

}  // namespace csec
