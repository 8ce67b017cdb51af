#include "csec/series.hpp"

#include <algorithm>
#include <random>

#include "csec/error.hpp"
#include "csec/field.hpp"

namespace csec {

namespace {

FactorDescriptor describe(const GroupContext& ctx, const ElementSet& k, const ElementSet& l, bool identify_factors) {
  const auto& t = ctx.table();
  FactorDescriptor d;
  d.order = k.size() / l.size();
  const auto kgens = t.generating_set(k);
  for (std::size_t i = 0; i < kgens.size() && d.is_abelian; ++i)
    for (std::size_t j = i + 1; j < kgens.size(); ++j) {
      ElementIndex a = kgens[i], b = kgens[j];
      ElementIndex c = t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b));
      if (!l.contains(c)) {
        d.is_abelian = false;
        break;
      }
    }
  d.is_prime_order = is_prime(d.order);
  if (!d.is_abelian && identify_factors) {
    Subgroup ks = ctx.subgroup(k);
    Subgroup ls = adopt_subgroup(ks.group(), ctx.subgroup(l).group());
    PermGroup q = quotient_group(ks.group(), ls, ctx.options().limits);
    GroupContext qctx(q);
    // a characteristically simple T^m: its minimal normal subgroups are the
    // m direct factors
    auto minimal = qctx.minimal_normal_subgroups();
    const auto& simple = minimal.front();
    d.simple_factor_id = identify(qctx.subgroup(simple).group());
    std::uint64_t m = 0;
    for (std::uint64_t r = d.order; r > 1; r /= simple.size()) ++m;
    d.simple_factor_count = m;
  }
  return d;
}

}  // namespace

ChiefSeries chief_series(const GroupContext& ctx, const SeriesOptions& options) {
  const auto& normals = ctx.normal_subgroups();
  const auto& t = ctx.table();
  std::optional<std::mt19937_64> rng;
  if (options.random_seed) rng.emplace(*options.random_seed);

  std::vector<ElementSet> chain{t.trivial()};
  while (chain.back().size() != t.size()) {
    const ElementSet& l = chain.back();
    std::vector<const ElementSet*> covers;
    for (const auto& n : normals) {
      if (n.size() <= l.size() || !l.is_subset_of(n)) continue;
      bool covering = true;
      for (const auto& m : normals)
        if (m.size() > l.size() && m.size() < n.size() && l.is_subset_of(m) && m.is_subset_of(n)) {
          covering = false;
          break;
        }
      if (covering) covers.push_back(&n);
    }
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, covers.size() - 1)(*rng);
    chain.push_back(*covers.at(pick));
  }
  std::reverse(chain.begin(), chain.end());

  ChiefSeries s;
  for (const auto& term : chain) s.terms.push_back(ctx.subgroup(term));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    s.factors.push_back(describe(ctx, chain[i], chain[i + 1], options.identify_factors));
  return s;
}

ChiefSeries chief_series(const PermGroup& g, const SeriesOptions& options) {
  GroupContext ctx(g);
  return chief_series(ctx, options);
}

bool is_supersolvable(const GroupContext& ctx) {
  SeriesOptions opts;
  opts.identify_factors = false;
  for (const auto& f : chief_series(ctx, opts).factors)
    if (!f.is_prime_order) return false;
  return true;
}

bool is_supersolvable(const PermGroup& g) {
  GroupContext ctx(g);
  return is_supersolvable(ctx);
}

std::vector<Subgroup> derived_series(const PermGroup& g) {
  std::vector<Subgroup> out{Subgroup::whole(g)};
  while (true) {
    Subgroup d = derived_subgroup(out.back().group());
    if (d.order() == out.back().order()) break;
    out.push_back(adopt_subgroup(g, d.group()));
  }
  return out;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().order() == 1; }

std::vector<Subgroup> lower_central_series(const PermGroup& g) {
  std::vector<Subgroup> out{Subgroup::whole(g)};
  while (true) {
    std::vector<Permutation> comms;
    for (const auto& a : out.back().generators())
      for (const auto& s : g.generators()) comms.push_back(commutator(a, s));
    Subgroup next = normal_closure(g, std::span<const Permutation>(comms));
    if (next.order() == out.back().order()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_nilpotent(const PermGroup& g) { return lower_central_series(g).back().order() == 1; }

std::vector<GroupId> composition_factors(const GroupContext& ctx, const SeriesOptions& options) {
  SeriesOptions opts = options;
  opts.identify_factors = true;
  std::vector<GroupId> out;
  for (const auto& f : chief_series(ctx, opts).factors) {
    if (f.is_abelian) {
      std::uint64_t p = 2;
      while (f.order % p) ++p;
      for (std::uint64_t r = f.order; r > 1; r /= p) out.push_back(GroupId::cyclic(p));
    } else {
      for (std::uint64_t i = 0; i < f.simple_factor_count; ++i) out.push_back(*f.simple_factor_id);
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupId& a, const GroupId& b) { return a.to_string() < b.to_string(); });
  return out;
}

std::vector<GroupId> composition_factors(const PermGroup& g, const SeriesOptions& options) {
  GroupContext ctx(g);
  return composition_factors(ctx, options);
}

bool is_simple(const PermGroup& g) {
  if (g.order() == 1) return false;
  GroupContext ctx(g);
  return ctx.normal_subgroups().size() == 2;
}

}  // namespace csec
