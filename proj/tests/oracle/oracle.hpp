#pragma once

// Brute-force reference computations on explicit element lists. Independent
// of the stabilizer chain, the element table and the lattice code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "csec/perm_group.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using Elements = std::set<Perm>;

inline Perm mul(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline Perm inv(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint32_t>(i);
  return c;
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

/// Breadth-first closure of `gens` under right multiplication.
inline Elements closure(std::size_t degree, const std::vector<Perm>& gens) {
  Elements seen{identity(degree)};
  std::vector<Perm> queue{identity(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      Perm x = mul(queue[k], g);
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  return seen;
}

inline std::vector<Perm> raw_generators(const csec::PermGroup& g) {
  std::vector<Perm> out;
  for (const auto& p : g.generators()) out.push_back(p.images());
  return out;
}

inline Elements elements(const csec::PermGroup& g) { return closure(g.degree(), raw_generators(g)); }

inline Elements join(std::size_t degree, const Elements& h, const Perm& x) {
  std::vector<Perm> gens(h.begin(), h.end());
  gens.push_back(x);
  return closure(degree, gens);
}

/// Every subgroup, found by repeatedly adjoining one element to known subgroups.
inline std::set<Elements> all_subgroups(const csec::PermGroup& g) {
  const std::size_t n = g.degree();
  const Elements all = elements(g);
  std::set<Elements> found{Elements{identity(n)}};
  std::vector<Elements> frontier{Elements{identity(n)}};
  while (!frontier.empty()) {
    std::vector<Elements> next;
    for (const auto& h : frontier)
      for (const auto& x : all) {
        if (h.count(x)) continue;
        Elements k = join(n, h, x);
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return found;
}

inline bool is_normal(const Elements& h, const Elements& g) {
  for (const auto& x : g)
    for (const auto& y : h)
      if (!h.count(mul(mul(inv(x), y), x))) return false;
  return true;
}

inline std::vector<Elements> normal_subgroups(const std::set<Elements>& subs, const Elements& g) {
  std::vector<Elements> out;
  for (const auto& h : subs)
    if (is_normal(h, g)) out.push_back(h);
  return out;
}

inline bool subset(const Elements& a, const Elements& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Orders of maximal subgroups (one entry per subgroup, not per class), sorted descending.
inline std::vector<std::size_t> maximal_orders(const std::set<Elements>& subs, const Elements& g) {
  std::vector<std::size_t> out;
  for (const auto& h : subs) {
    if (h.size() == g.size()) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (k.size() > h.size() && k.size() < g.size() && k.size() % h.size() == 0 && subset(h, k)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(h.size());
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline bool prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Supersolvable iff a chain 1 = N_0 < N_1 < ... < N_r = G of normal
/// subgroups exists with every |N_i+1 : N_i| prime (such factors are cyclic).
inline bool supersolvable(const csec::PermGroup& g) {
  const Elements all = elements(g);
  auto normals = oracle::normal_subgroups(oracle::all_subgroups(g), all);
  std::sort(normals.begin(), normals.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::map<std::size_t, bool> reach;  // index in normals -> reachable from 1
  reach[0] = true;
  for (std::size_t j = 1; j < normals.size(); ++j) {
    bool ok = false;
    for (std::size_t i = 0; i < j && !ok; ++i)
      ok = reach[i] && normals[j].size() % normals[i].size() == 0 && prime(normals[j].size() / normals[i].size()) &&
           subset(normals[i], normals[j]);
    reach[j] = ok;
  }
  return reach[normals.size() - 1];
}

/// Number of conjugacy classes of the given subgroups under G.
inline std::size_t class_count(const std::vector<Elements>& subs, const Elements& g) {
  std::set<Elements> seen;
  std::size_t classes = 0;
  for (const auto& h : subs) {
    if (seen.count(h)) continue;
    ++classes;
    for (const auto& x : g) {
      Elements c;
      for (const auto& y : h) c.insert(mul(mul(inv(x), y), x));
      seen.insert(std::move(c));
    }
  }
  return classes;
}

}  // namespace oracle
