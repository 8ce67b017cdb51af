#include "csec/perm_group.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "csec/error.hpp"

namespace csec {

std::uint64_t to_u64(const Order& n) {
  if (n > std::numeric_limits<std::uint64_t>::max())
    throw CapExceeded("group order does not fit in 64 bits");
  return n.convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------
// Stabilizer chain

struct PermGroup::Chain {
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into orbit, -1 if absent
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
  };

  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> strong;
  std::vector<Point> base;
  std::vector<Level> levels;
  Order order = 1;

  void rebuild_orbit(Level& level) const {
    level.slot.assign(degree, -1);
    level.orbit.assign(1, level.base);
    level.transversal.assign(1, Permutation(degree));
    level.transversal_inv.assign(1, Permutation(degree));
    level.slot[level.base] = 0;
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      Point x = level.orbit[k];
      for (const auto& s : level.gens) {
        Point y = s[x];
        if (level.slot[y] >= 0) continue;
        level.slot[y] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(y);
        Permutation u = level.transversal[k] * s;
        level.transversal_inv.push_back(u.inverse());
        level.transversal.push_back(std::move(u));
      }
    }
  }

  // Strips g through levels [from, end). Returns the residue and the level at
  // which sifting stopped (levels.size() if it went all the way through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t j = from; j < levels.size(); ++j) {
      const Level& L = levels[j];
      Point beta = g[L.base];
      std::int32_t s = L.slot[beta];
      if (s < 0) return {std::move(g), j};
      if (s != 0) g = g * L.transversal_inv[s];
    }
    return {std::move(g), levels.size()};
  }

  // Point moved by `p` whose orbit under `gens` is largest; ties go to the
  // smallest point.
  Point pick_base_point(const Permutation& p, const std::vector<Permutation>& gens) const {
    std::vector<std::int32_t> orbit_size(degree, -1);
    Point best = 0;
    std::int64_t best_size = -1;
    for (Point x = 0; x < degree; ++x) {
      if (p[x] == x) continue;
      if (orbit_size[x] < 0) {
        std::vector<Point> orb{x};
        std::vector<bool> seen(degree, false);
        seen[x] = true;
        for (std::size_t k = 0; k < orb.size(); ++k)
          for (const auto& s : gens)
            if (!seen[s[orb[k]]]) {
              seen[s[orb[k]]] = true;
              orb.push_back(s[orb[k]]);
            }
        for (Point y : orb) orbit_size[y] = static_cast<std::int32_t>(orb.size());
      }
      if (orbit_size[x] > best_size) {
        best_size = orbit_size[x];
        best = x;
      }
    }
    return best;
  }

  bool fixes_base(const Permutation& p) const {
    for (Point b : base)
      if (p[b] != b) return false;
    return true;
  }

  void add_level(Point b) {
    base.push_back(b);
    Level L;
    L.base = b;
    levels.push_back(std::move(L));
  }

  void build(std::span<const Point> prefix) {
    for (Point b : prefix) {
      if (b >= degree) throw InvalidArgument("base point out of range");
      if (std::find(base.begin(), base.end(), b) == base.end()) add_level(b);
    }
    std::vector<Permutation> gens;
    for (const auto& g : generators)
      if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);

    for (const auto& g : gens) {
      if (!fixes_base(g)) continue;
      // generators fixing all base points so far
      std::vector<Permutation> stab;
      for (const auto& h : gens)
        if (fixes_base(h)) stab.push_back(h);
      add_level(pick_base_point(g, stab));
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (const auto& g : gens) {
        bool fixes = true;
        for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[base[j]] == base[j];
        if (fixes) levels[i].gens.push_back(g);
      }
      rebuild_orbit(levels[i]);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      Level& L = levels[static_cast<std::size_t>(i)];
      const std::vector<Permutation> level_gens = L.gens;
      for (std::size_t k = 0; !restarted && k < L.orbit.size(); ++k) {
        for (const auto& s : level_gens) {
          Point y = s[L.orbit[k]];
          Permutation h = levels[static_cast<std::size_t>(i)].transversal[k] * s *
                          levels[static_cast<std::size_t>(i)].transversal_inv[static_cast<std::size_t>(
                              levels[static_cast<std::size_t>(i)].slot[y])];
          if (h.is_identity()) continue;
          auto [residue, stop] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
          if (residue.is_identity()) continue;
          if (stop == levels.size()) add_level(pick_base_point(residue, {residue}));
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
            levels[l].gens.push_back(residue);
            rebuild_orbit(levels[l]);
          }
          i = static_cast<std::ptrdiff_t>(stop);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }

    std::unordered_set<Permutation> seen;
    for (const auto& L : levels)
      for (const auto& g : L.gens)
        if (seen.insert(g).second) strong.push_back(g);
    order = 1;
    for (const auto& L : levels) order *= L.orbit.size();
  }
};

PermGroup::PermGroup() : PermGroup(0, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::span<const Point> base_prefix) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree));
  auto chain = std::make_shared<Chain>();
  chain->degree = degree;
  chain->generators = std::move(generators);
  chain->build(base_prefix);
  chain_ = std::move(chain);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::size_t PermGroup::degree() const noexcept { return chain_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return chain_->generators; }
const std::vector<Permutation>& PermGroup::strong_generators() const noexcept { return chain_->strong; }
const std::vector<Point>& PermGroup::base() const noexcept { return chain_->base; }
const Order& PermGroup::order() const noexcept { return chain_->order; }
std::size_t PermGroup::chain_length() const noexcept { return chain_->levels.size(); }

const std::vector<Point>& PermGroup::basic_orbit(std::size_t level) const {
  return chain_->levels.at(level).orbit;
}

bool PermGroup::in_basic_orbit(std::size_t level, Point point) const {
  return chain_->levels.at(level).slot.at(point) >= 0;
}

const Permutation& PermGroup::transversal(std::size_t level, Point point) const {
  const auto& L = chain_->levels.at(level);
  std::int32_t s = L.slot.at(point);
  if (s < 0) throw InvalidArgument("point not in basic orbit");
  return L.transversal[static_cast<std::size_t>(s)];
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) throw DegreeMismatch("membership test with wrong degree");
  auto [residue, stop] = chain_->sift(p, 0);
  return stop == chain_->levels.size() && residue.is_identity();
}

bool PermGroup::is_abelian() const {
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
  return true;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree());
  for (const auto& L : chain_->levels) {
    std::uniform_int_distribution<std::size_t> pick(0, L.orbit.size() - 1);
    g = L.transversal[pick(rng)] * g;
  }
  return g;
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& f) const {
  const auto& levels = chain_->levels;
  // g = r_{k-1} * ... * r_0, built from the deepest level outwards
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t depth,
                                                                  const Permutation& suffix) {
    if (depth == 0) {
      f(suffix);
      return;
    }
    const auto& L = levels[depth - 1];
    for (const auto& u : L.transversal) rec(depth - 1, suffix * u);
  };
  rec(levels.size(), Permutation(degree()));
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree()) throw InvalidArgument("orbit point out of range");
  std::vector<Point> orb{p};
  std::vector<bool> seen(degree(), false);
  seen[p] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& s : generators())
      if (!seen[s[orb[k]]]) {
        seen[s[orb[k]]] = true;
        orb.push_back(s[orb[k]]);
      }
  return orb;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(PermGroup ambient, PermGroup group)
    : ambient_(std::move(ambient)), group_(std::move(group)) {}

Subgroup::Subgroup(PermGroup ambient, std::vector<Permutation> generators)
    : ambient_(std::move(ambient)) {
  for (const auto& g : generators) {
    if (g.degree() != ambient_.degree()) throw DegreeMismatch("subgroup generator has wrong degree");
    if (!ambient_.contains(g)) throw NotContained("generator " + g.to_cycle_string() + " is not in the ambient group");
  }
  group_ = PermGroup(ambient_.degree(), std::move(generators));
}

Subgroup Subgroup::whole(const PermGroup& ambient) { return Subgroup(ambient, ambient); }
Subgroup Subgroup::trivial(const PermGroup& ambient) {
  return Subgroup(ambient, PermGroup::trivial(ambient.degree()));
}

Subgroup adopt_subgroup(PermGroup ambient, PermGroup group) {
  return Subgroup(std::move(ambient), std::move(group));
}

bool is_subset(const PermGroup& inner, const PermGroup& outer) {
  if (inner.degree() != outer.degree()) return false;
  for (const auto& g : inner.generators())
    if (!outer.contains(g)) return false;
  return true;
}

bool same_elements(const Subgroup& a, const Subgroup& b) {
  return a.order() == b.order() && is_subset(a.group(), b.group());
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

bool contains(const PermGroup& g, const Permutation& p) { return g.contains(p); }

namespace {

void require_inside(const PermGroup& g, const Subgroup& h) {
  if (h.group().degree() != g.degree()) throw DegreeMismatch("subgroup degree differs from group degree");
  if (!is_subset(h.group(), g)) throw NotContained("subgroup is not contained in the group");
}

PermGroup extend(const PermGroup& h, const Permutation& g) {
  auto gens = h.generators();
  gens.push_back(g);
  return PermGroup(h.degree(), std::move(gens));
}

}  // namespace

Subgroup closure(const Subgroup& h, const Permutation& g) {
  if (!h.ambient().contains(g)) throw NotContained("closure element not in ambient group");
  if (h.contains(g)) return h;
  return adopt_subgroup(h.ambient(), extend(h.group(), g));
}

Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g) {
  if (!h.ambient().contains(g)) throw NotContained("conjugating element not in ambient group");
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(conjugate(x, g));
  return adopt_subgroup(h.ambient(), PermGroup(h.ambient().degree(), std::move(gens)));
}

bool is_normal(const PermGroup& g, const Subgroup& h) {
  require_inside(g, h);
  for (const auto& x : h.generators())
    for (const auto& s : g.generators())
      if (!h.contains(conjugate(x, s))) return false;
  return true;
}

Subgroup normal_closure(const PermGroup& g, std::span<const Permutation> elements) {
  PermGroup n = PermGroup::trivial(g.degree());
  for (const auto& x : elements) {
    if (!g.contains(x)) throw NotContained("normal closure seed not in group");
    if (!n.contains(x)) n = extend(n, x);
  }
  // conjugate every generator of N by every generator of G until stable
  for (std::size_t k = 0; k < n.generators().size(); ++k) {
    for (const auto& s : g.generators()) {
      Permutation c = conjugate(n.generators()[k], s);
      if (!n.contains(c)) n = extend(n, c);
    }
  }
  return adopt_subgroup(g, n);
}

Subgroup normal_closure(const PermGroup& g, const Subgroup& s) {
  require_inside(g, s);
  return normal_closure(g, std::span<const Permutation>(s.generators()));
}

// ---------------------------------------------------------------------------
// Normalizer / centralizer

namespace {

using ElementTest = std::function<bool(const Permutation&)>;
using ImagePrune = std::function<bool(std::size_t level, Point image)>;

// Scans every element, growing the known subgroup K when a new element with
// the property is found.
PermGroup scan_subgroup(const PermGroup& g, PermGroup known, const ElementTest& test) {
  g.for_each_element([&](const Permutation& x) {
    if (!known.contains(x) && test(x)) known = extend(known, x);
  });
  return known;
}

// Subgroup search over the stabilizer chain of G. The property must define a
// subgroup; `prune` rejects partial base images that no element with the
// property can have. Levels are completed deepest first, so at level i the
// subgroup's stabilizer of b_0..b_i is already known and only one witness per
// orbit of the known group is needed.
PermGroup backtrack_subgroup(const PermGroup& g, PermGroup known, const ElementTest& test,
                             const ImagePrune& prune) {
  const auto& base = g.base();
  const std::size_t k = g.chain_length();
  auto rebase = [&](const PermGroup& h) { return PermGroup(g.degree(), h.generators(), base); };
  known = rebase(known);

  std::function<bool(std::size_t, const Permutation&, Permutation&)> dfs =
      [&](std::size_t j, const Permutation& c, Permutation& found) -> bool {
    if (j == k) {
      if (test(c)) {
        found = c;
        return true;
      }
      return false;
    }
    for (Point beta : g.basic_orbit(j)) {
      Point image = c[beta];
      if (!prune(j, image)) continue;
      if (dfs(j + 1, g.transversal(j, beta) * c, found)) return true;
    }
    return false;
  };

  for (std::size_t level = k; level-- > 0;) {
    std::vector<bool> dead(g.degree(), false);
    for (Point gamma : g.basic_orbit(level)) {
      if (gamma == base[level] || dead[gamma]) continue;
      if (level < known.chain_length() && known.in_basic_orbit(level, gamma)) continue;
      Permutation found;
      bool ok = prune(level, gamma) && dfs(level + 1, g.transversal(level, gamma), found);
      if (ok) {
        known = rebase(extend(known, found));
      } else {
        // the whole orbit of gamma under the known stabilizer is excluded
        std::vector<Permutation> stab;
        for (const auto& s : known.strong_generators()) {
          bool fixes = true;
          for (std::size_t j = 0; j < level && fixes; ++j) fixes = s[base[j]] == base[j];
          if (fixes) stab.push_back(s);
        }
        std::vector<Point> orb{gamma};
        dead[gamma] = true;
        for (std::size_t t = 0; t < orb.size(); ++t)
          for (const auto& s : stab)
            if (!dead[s[orb[t]]]) {
              dead[s[orb[t]]] = true;
              orb.push_back(s[orb[t]]);
            }
      }
    }
  }
  return known;
}

std::vector<std::size_t> orbit_sizes(const PermGroup& h) {
  std::vector<std::size_t> size(h.degree(), 0);
  for (Point x = 0; x < h.degree(); ++x) {
    if (size[x]) continue;
    auto orb = h.orbit(x);
    for (Point y : orb) size[y] = orb.size();
  }
  return size;
}

ImagePrune orbit_size_prune(const PermGroup& g, const PermGroup& h) {
  auto sizes = std::make_shared<std::vector<std::size_t>>(orbit_sizes(h));
  auto base = g.base();
  return [sizes, base](std::size_t level, Point image) {
    return (*sizes)[base[level]] == (*sizes)[image];
  };
}

ElementTest normalizes(const Subgroup& h) {
  return [h](const Permutation& x) {
    for (const auto& s : h.generators())
      if (!h.contains(conjugate(s, x))) return false;
    return true;
  };
}

ElementTest centralizes(const Subgroup& h) {
  return [h](const Permutation& x) {
    for (const auto& s : h.generators())
      if (s * x != x * s) return false;
    return true;
  };
}

PermGroup central_generators(const Subgroup& h) {
  std::vector<Permutation> gens;
  for (const auto& s : h.generators())
    if (centralizes(h)(s)) gens.push_back(s);
  return PermGroup(h.group().degree(), std::move(gens));
}

}  // namespace

Subgroup normalizer_backtrack(const PermGroup& g, const Subgroup& h) {
  require_inside(g, h);
  return adopt_subgroup(g, backtrack_subgroup(g, h.group(), normalizes(h), orbit_size_prune(g, h.group())));
}

Subgroup centralizer_backtrack(const PermGroup& g, const Subgroup& h) {
  require_inside(g, h);
  return adopt_subgroup(
      g, backtrack_subgroup(g, central_generators(h), centralizes(h), orbit_size_prune(g, h.group())));
}

Subgroup normalizer(const PermGroup& g, const Subgroup& h, const EngineLimits& limits) {
  require_inside(g, h);
  if (g.order() > limits.element_scan_limit) return normalizer_backtrack(g, h);
  return adopt_subgroup(g, scan_subgroup(g, h.group(), normalizes(h)));
}

Subgroup centralizer(const PermGroup& g, const Subgroup& h, const EngineLimits& limits) {
  require_inside(g, h);
  if (g.order() > limits.element_scan_limit) return centralizer_backtrack(g, h);
  return adopt_subgroup(g, scan_subgroup(g, central_generators(h), centralizes(h)));
}

Subgroup center(const PermGroup& g, const EngineLimits& limits) {
  return centralizer(g, Subgroup::whole(g), limits);
}

Subgroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Permutation c = commutator(gs[i], gs[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, std::span<const Permutation>(comms));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  const Subgroup& small = a.order() <= b.order() ? a : b;
  const Subgroup& large = a.order() <= b.order() ? b : a;
  PermGroup result = PermGroup::trivial(a.ambient().degree());
  small.group().for_each_element([&](const Permutation& x) {
    if (!result.contains(x) && large.contains(x)) result = extend(result, x);
  });
  return adopt_subgroup(a.ambient(), result);
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
  std::unordered_set<Permutation> seen;
  std::vector<ConjugacyClass> out;
  for (const auto& x : g.elements()) {
    if (seen.count(x)) continue;
    std::vector<Permutation> cls{x};
    seen.insert(x);
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (const auto& s : g.generators()) {
        Permutation y = conjugate(cls[k], s);
        if (seen.insert(y).second) cls.push_back(y);
      }
    out.push_back({*std::min_element(cls.begin(), cls.end()), cls.size()});
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
  return out;
}

// ---------------------------------------------------------------------------
// Coset actions

struct CosetAction::Index {
  PermGroup subgroup;
  std::vector<std::int32_t> orbit_id;  // point -> H-orbit label
  std::vector<Permutation> reps;
  std::vector<Permutation> reps_inv;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;

  // Invariant of the coset Hx: point y -> label of the H-orbit containing y^(x^-1).
  std::size_t key(const Permutation& x) const {
    Permutation xi = x.inverse();
    std::uint64_t h = 1469598103934665603ull;
    for (Point y = 0; y < xi.degree(); ++y) {
      h ^= static_cast<std::uint64_t>(orbit_id[xi[y]]);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  std::int64_t find(const Permutation& x, std::size_t k) const {
    auto it = buckets.find(k);
    if (it == buckets.end()) return -1;
    for (std::size_t r : it->second)
      if (subgroup.contains(x * reps_inv[r])) return static_cast<std::int64_t>(r);
    return -1;
  }
};

std::size_t CosetAction::coset_of(const Permutation& g) const {
  std::int64_t r = index_->find(g, index_->key(g));
  if (r < 0) throw NotContained("element is not in the acting group");
  return static_cast<std::size_t>(r);
}

Permutation CosetAction::image_of(const Permutation& g) const {
  std::vector<Point> images(index_->reps.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = static_cast<Point>(coset_of(index_->reps[i] * g));
  return Permutation(std::move(images));
}

CosetAction coset_action(const PermGroup& g, const Subgroup& h, const EngineLimits& limits) {
  require_inside(g, h);
  Order idx = g.order() / h.order();
  if (idx > limits.coset_degree_cap)
    throw CapExceeded("coset action of index " + idx.str() + " exceeds degree cap " +
                      std::to_string(limits.coset_degree_cap));
  auto index = std::make_shared<CosetAction::Index>();
  index->subgroup = h.group();
  index->orbit_id.assign(g.degree(), -1);
  std::int32_t label = 0;
  for (Point x = 0; x < g.degree(); ++x) {
    if (index->orbit_id[x] >= 0) continue;
    for (Point y : h.group().orbit(x)) index->orbit_id[y] = label;
    ++label;
  }
  auto add = [&](Permutation x, std::size_t key) {
    index->buckets[key].push_back(index->reps.size());
    index->reps_inv.push_back(x.inverse());
    index->reps.push_back(std::move(x));
  };
  Permutation e(g.degree());
  add(e, index->key(e));
  const auto& gens = g.generators();
  std::vector<std::vector<Point>> action(gens.size());
  for (std::size_t i = 0; i < index->reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = index->reps[i] * gens[s];
      std::size_t key = index->key(y);
      std::int64_t r = index->find(y, key);
      if (r < 0) {
        r = static_cast<std::int64_t>(index->reps.size());
        add(std::move(y), key);
      }
      action[s].push_back(static_cast<Point>(r));
    }
  }
  CosetAction out;
  const std::size_t n = index->reps.size();
  for (auto& a : action) out.generator_images.emplace_back(std::move(a));
  out.image = PermGroup(n, out.generator_images);
  out.coset_representatives = index->reps;
  out.subgroup = h.group();
  out.index_ = std::move(index);
  return out;
}

PermGroup quotient_group(const PermGroup& g, const Subgroup& n, const EngineLimits& limits) {
  if (!is_normal(g, n)) throw NotNormal("quotient by a subgroup that is not normal");
  if (n.order() == 1) return g;
  return coset_action(g, n, limits).image;
}

}  // namespace csec
