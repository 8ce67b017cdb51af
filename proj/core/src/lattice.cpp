#include "csec/lattice.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "csec/error.hpp"

namespace csec {

namespace {

bool class_less(const GroupContext::ClassData& a, const GroupContext::ClassData& b) {
  if (a.order != b.order) return a.order < b.order;
  return lex_less(a.representative, b.representative);
}

bool set_less(const ElementSet& a, const ElementSet& b) {
  auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

}  // namespace

GroupContext::GroupContext(PermGroup g, LatticeOptions options)
    : group_(std::move(g)), options_(options), order_(0) {
  order_ = group_.order() > options_.table_cap ? options_.table_cap + 1 : to_u64(group_.order());
}

const GroupTable& GroupContext::table() const {
  std::call_once(table_once_, [this] {
    if (group_.order() <= options_.table_cap) table_ = std::make_unique<GroupTable>(group_, options_.table_cap);
  });
  if (!table_)
    throw CapExceeded("group of order " + group_.order().str() + " exceeds element table cap " +
                      std::to_string(options_.table_cap));
  return *table_;
}

std::vector<ElementSet> GroupContext::conjugates(const ElementSet& h) const {
  const auto& T = table();
  std::unordered_set<ElementSet, ElementSetHash> seen{h};
  std::vector<ElementSet> out{h};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (ElementIndex g : T.generator_indices()) {
      ElementSet c = T.conjugate(out[k], g);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  auto least = std::min_element(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  std::iter_swap(out.begin(), least);
  return out;
}

bool GroupContext::are_conjugate(const ElementSet& a, const ElementSet& b) const {
  if (a.size() != b.size()) return false;
  for (const auto& c : conjugates(a))
    if (c == b) return true;
  return false;
}

bool GroupContext::is_normal(const ElementSet& h) const {
  const auto& T = table();
  for (ElementIndex g : T.generator_indices())
    if (T.conjugate(h, g) != h) return false;
  return true;
}

ElementSet GroupContext::normalizer(const ElementSet& h) const {
  const auto& T = table();
  const auto hgens = T.generating_set(h);
  ElementSet out = T.empty_set();
  for (ElementIndex g = 0; g < T.size(); ++g) {
    bool ok = true;
    for (ElementIndex s : hgens)
      if (!h.contains(T.conj(s, g))) {
        ok = false;
        break;
      }
    if (ok) out.insert(g);
  }
  return out;
}

bool GroupContext::is_maximal(const ElementSet& m) const {
  const auto& T = table();
  const std::size_t n = T.size();
  if (m.size() == n) return false;
  const auto mgens = T.generating_set(m);
  const auto mlist = m.indices();
  ElementSet covered = m;
  for (ElementIndex x = 0; x < n; ++x) {
    if (covered.contains(x)) continue;
    if (T.extend(m, mgens, x).size() != n) return false;
    for (ElementIndex a : mlist) {
      ElementIndex y = T.mul(a, x);
      if (covered.contains(y)) continue;
      for (ElementIndex b : mlist) covered.insert(T.mul(y, b));
    }
  }
  return true;
}

GroupContext::ClassData GroupContext::make_class(const ElementSet& h) const {
  auto conj = conjugates(h);
  ClassData d;
  d.representative = conj.front();
  d.generators = table().generating_set(d.representative);
  d.order = d.representative.size();
  d.class_size = conj.size();
  return d;
}

void GroupContext::enumerate_subgroups() const {
  if (!lattice_available())
    throw CapExceeded("subgroup lattice of a group of order " + group_.order().str() + " exceeds order cap " +
                      std::to_string(options_.order_cap));
  const auto& T = table();
  const std::size_t n = T.size();

  // cyclic subgroups, one generator each
  std::vector<std::uint32_t> cyclic_of(n);
  std::vector<ElementIndex> cyclic_gen;
  {
    std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> ids;
    for (ElementIndex x = 0; x < n; ++x) {
      auto [it, fresh] = ids.emplace(T.cyclic(x), static_cast<std::uint32_t>(cyclic_gen.size()));
      if (fresh) cyclic_gen.push_back(x);
      cyclic_of[x] = it->second;
    }
  }

  // every subgroup found so far (all conjugates) -> class id
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> seen;
  std::vector<ClassData> found;
  auto add_class = [&](const ElementSet& h) {
    if (seen.count(h)) return;
    auto conj = conjugates(h);
    const auto id = static_cast<std::uint32_t>(found.size());
    ClassData d;
    d.representative = conj.front();
    d.generators = T.generating_set(d.representative);
    d.order = d.representative.size();
    d.class_size = conj.size();
    for (auto& c : conj) seen.emplace(std::move(c), id);
    found.push_back(std::move(d));
  };

  add_class(T.trivial());
  // Each subgroup K is <H', x> for a maximal subgroup H' of K, and H' is
  // conjugate to some class representative, so extending representatives by
  // one cyclic subgroup per N(H)-orbit reaches every class.
  for (std::size_t k = 0; k < found.size(); ++k) {
    const ElementSet h = found[k].representative;
    const auto hgens = found[k].generators;
    if (h.size() == n) continue;
    const auto ngens = T.generating_set(normalizer(h));
    std::vector<char> visited(cyclic_gen.size(), 0);
    for (std::size_t c = 0; c < cyclic_gen.size(); ++c) {
      if (visited[c]) continue;
      std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(c)};
      visited[c] = 1;
      for (std::size_t o = 0; o < orbit.size(); ++o)
        for (ElementIndex g : ngens) {
          auto d = cyclic_of[T.conj(cyclic_gen[orbit[o]], g)];
          if (!visited[d]) {
            visited[d] = 1;
            orbit.push_back(d);
          }
        }
      const ElementIndex x = cyclic_gen[c];
      if (h.contains(x)) continue;
      add_class(T.extend(h, hgens, x));
    }
  }
  std::sort(found.begin(), found.end(), class_less);
  classes_ = std::move(found);
}

const std::vector<GroupContext::ClassData>& GroupContext::subgroup_classes() const {
  std::call_once(classes_once_, [this] { enumerate_subgroups(); });
  return classes_;
}

void GroupContext::find_maximal() const {
  std::vector<ClassData> out;
  if (lattice_available()) {
    for (const auto& c : subgroup_classes())
      if (c.order < order_ && is_maximal(c.representative)) out.push_back(c);
    maximal_complete_ = true;
  } else {
    const auto& T = table();
    const std::size_t n = T.size();
    std::mt19937_64 rng(options_.seed);
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(n - 1));
    std::unordered_set<ElementSet, ElementSetHash> known;
    for (std::size_t attempt = 0; attempt < options_.random_attempts && n > 1; ++attempt) {
      ElementIndex x = pick(rng);
      ElementSet h = T.cyclic(x);
      if (h.size() == n) continue;
      std::vector<ElementIndex> gens{x};
      for (int misses = 0; misses < 32;) {
        ElementIndex y = pick(rng);
        if (h.contains(y)) {
          ++misses;
          continue;
        }
        ElementSet k = T.extend(h, gens, y);
        if (k.size() == n) {
          ++misses;
          continue;
        }
        h = std::move(k);
        gens.push_back(y);
        misses = 0;
      }
      if (known.count(h) || !is_maximal(h)) continue;
      auto conj = conjugates(h);
      for (const auto& c : conj) known.insert(c);
      out.push_back(make_class(h));
    }
    maximal_complete_ = false;
  }
  std::sort(out.begin(), out.end(), [](const ClassData& a, const ClassData& b) {
    if (a.order != b.order) return a.order > b.order;
    return lex_less(a.representative, b.representative);
  });
  maximal_ = std::move(out);
}

const std::vector<GroupContext::ClassData>& GroupContext::maximal_classes() const {
  std::call_once(maximal_once_, [this] { find_maximal(); });
  return maximal_;
}

bool GroupContext::maximal_classes_complete() const {
  maximal_classes();
  return maximal_complete_;
}

void GroupContext::find_normal() const {
  const auto& T = table();
  // normal closures of single classes; every normal subgroup is a join of these
  std::vector<ElementSet> atoms;
  std::vector<std::vector<ElementIndex>> atom_gens;
  {
    std::unordered_set<ElementSet, ElementSetHash> dedup;
    for (const auto& cls : T.conjugacy_classes()) {
      if (cls.front() == 0) continue;
      ElementSet c = T.closure(cls);
      if (dedup.insert(c).second) {
        atom_gens.push_back(T.generating_set(c));
        atoms.push_back(std::move(c));
      }
    }
  }
  std::unordered_set<ElementSet, ElementSetHash> seen{T.trivial()};
  std::vector<ElementSet> out{T.trivial()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (atoms[a].is_subset_of(out[k])) continue;
      ElementSet j = out[k];
      std::vector<ElementIndex> jgens = T.generating_set(j);
      for (ElementIndex g : atom_gens[a]) {
        if (j.contains(g)) continue;
        j = T.extend(j, jgens, g);
        jgens.push_back(g);
      }
      if (seen.insert(j).second) out.push_back(std::move(j));
    }
  }
  std::sort(out.begin(), out.end(), set_less);
  normal_ = std::move(out);
}

const std::vector<ElementSet>& GroupContext::normal_subgroups() const {
  std::call_once(normal_once_, [this] { find_normal(); });
  return normal_;
}

std::vector<ElementSet> GroupContext::minimal_normal_subgroups() const {
  const auto& all = normal_subgroups();
  std::vector<ElementSet> out;
  for (const auto& n : all) {
    if (n.size() == 1) continue;
    bool minimal = true;
    for (const auto& m : all)
      if (m.size() > 1 && m.size() < n.size() && m.is_subset_of(n)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(n);
  }
  return out;
}

SubgroupClass GroupContext::to_class(const ClassData& c, bool complete) const {
  return SubgroupClass{subgroup(c.representative), c.class_size, Order(order_ / c.class_size), complete};
}

std::vector<SubgroupClass> all_subgroups(const PermGroup& g, std::uint64_t order_cap) {
  LatticeOptions opts;
  opts.order_cap = order_cap;
  GroupContext ctx(g, opts);
  std::vector<SubgroupClass> out;
  for (const auto& c : ctx.subgroup_classes()) out.push_back(ctx.to_class(c, true));
  return out;
}

std::uint64_t subgroup_count(const std::vector<SubgroupClass>& classes) {
  std::uint64_t n = 0;
  for (const auto& c : classes) n += c.class_size;
  return n;
}

std::vector<SubgroupClass> maximal_subgroups(const GroupContext& ctx) {
  std::vector<SubgroupClass> out;
  const bool complete = ctx.maximal_classes_complete();
  for (const auto& c : ctx.maximal_classes()) out.push_back(ctx.to_class(c, complete));
  return out;
}

std::vector<SubgroupClass> maximal_subgroups(const PermGroup& g, const LatticeOptions& options) {
  GroupContext ctx(g, options);
  return maximal_subgroups(ctx);
}

std::vector<SubgroupClass> subgroups_of_index(const GroupContext& ctx, std::uint64_t index) {
  std::vector<SubgroupClass> out;
  if (index == 0 || ctx.order() % index) return out;
  for (const auto& c : ctx.subgroup_classes())
    if (c.order * index == ctx.order()) out.push_back(ctx.to_class(c, true));
  return out;
}

std::vector<SubgroupClass> subgroups_of_index(const PermGroup& g, std::uint64_t index, std::uint64_t order_cap) {
  LatticeOptions opts;
  opts.order_cap = order_cap;
  GroupContext ctx(g, opts);
  return subgroups_of_index(ctx, index);
}

bool is_maximal(const PermGroup& g, const Subgroup& m) {
  GroupContext ctx(g);
  return ctx.is_maximal(ctx.set_of(m));
}

std::vector<Subgroup> normal_subgroups(const PermGroup& g) {
  GroupContext ctx(g);
  std::vector<Subgroup> out;
  for (const auto& n : ctx.normal_subgroups()) out.push_back(ctx.subgroup(n));
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g) {
  GroupContext ctx(g);
  std::vector<Subgroup> out;
  for (const auto& n : ctx.minimal_normal_subgroups()) out.push_back(ctx.subgroup(n));
  return out;
}

std::vector<SubgroupClass> klein_four_classes(const GroupContext& ctx) {
  const auto& T = ctx.table();
  std::vector<ElementIndex> involutions;
  for (ElementIndex x = 0; x < T.size(); ++x)
    if (T.element_order(x) == 2) involutions.push_back(x);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<GroupContext::ClassData> classes;
  for (std::size_t i = 0; i < involutions.size(); ++i)
    for (std::size_t j = i + 1; j < involutions.size(); ++j) {
      ElementIndex a = involutions[i], b = involutions[j];
      ElementIndex ab = T.mul(a, b);
      if (ab != T.mul(b, a)) continue;
      ElementSet v = T.trivial();
      v.insert(a);
      v.insert(b);
      v.insert(ab);
      if (seen.count(v)) continue;
      auto conj = ctx.conjugates(v);
      for (const auto& c : conj) seen.insert(c);
      GroupContext::ClassData d;
      d.representative = conj.front();
      d.generators = T.generating_set(d.representative);
      d.order = 4;
      d.class_size = conj.size();
      classes.push_back(std::move(d));
    }
  std::sort(classes.begin(), classes.end(), class_less);
  std::vector<SubgroupClass> out;
  for (const auto& c : classes) out.push_back(ctx.to_class(c, true));
  return out;
}

std::vector<SubgroupClass> klein_four_classes(const PermGroup& g) {
  GroupContext ctx(g);
  return klein_four_classes(ctx);
}

FusionReport fusion_analysis(const GroupContext& g, const std::vector<SubgroupClass>& inner) {
  const auto& T = g.table();
  FusionReport r;
  r.inner_classes = inner.size();
  std::vector<ElementSet> outer_reps;
  for (const auto& c : inner) {
    ElementSet s = T.from_group(c.representative.group());
    std::size_t id = outer_reps.size();
    for (std::size_t k = 0; k < outer_reps.size(); ++k)
      if (g.are_conjugate(outer_reps[k], s)) {
        id = k;
        break;
      }
    if (id == outer_reps.size()) outer_reps.push_back(s);
    r.outer_class_of.push_back(id);
  }
  r.outer_classes = outer_reps.size();
  return r;
}

}  // namespace csec
