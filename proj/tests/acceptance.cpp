// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "csec/csection.hpp"
#include "csec/error.hpp"
#include "csec/field.hpp"
#include "csec/matrix_groups.hpp"
#include "csec/named.hpp"
#include "csec/series.hpp"
#include "oracle/oracle.hpp"

using namespace csec;

namespace {

constexpr double kExampleSeconds = 120.0;
constexpr double kScanSeconds = 600.0;
constexpr std::size_t kIdentityTrials = 200;  // at least 100 required

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

const VerdictReport& sub(const VerdictReport& r, const std::string& check) {
  for (const auto& s : r.subchecks)
    if (s.check == check) return s;
  throw Error("missing subcheck " + check);
}

void example(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = verify_pgl2_example(7);
  double secs = seconds_since(t0);
  o.require(r.status == Status::Pass && r.complete, "overall pass");
  o.require(r.subchecks.size() == 5, "five subchecks");
  for (const auto& s : r.subchecks) o.require(s.status == Status::Pass, s.check);
  const auto& chief = sub(r, "unique_chief_series").evidence.orders;
  o.require(chief.size() == 3 && chief.at("normal[1]") == 168 && chief.at("normal[2]") == 336, "chain 336 > 168 > 1");
  const auto& kf = sub(r, "klein_four_classes").evidence;
  o.require(kf.class_counts.at("classes") == 2, "two Klein four classes");
  o.require(kf.orders.at("normalizer[0]") == 24 && kf.orders.at("normalizer[1]") == 24, "normalizers of order 24");
  o.require(sub(r, "klein_four_fusion").evidence.class_counts.at("classes_in_group") == 1, "fusion to one class");
  const auto& ms = sub(r, "maximal_sections_supersolvable").evidence.orders;
  o.require(ms.at("maximal[0]") == 168 && ms.at("maximal[1]") == 42 && ms.at("maximal[2]") == 16 &&
                ms.at("maximal[3]") == 12 && !ms.count("maximal[4]"),
            "maximal orders 168/42/16/12");
  o.require(secs < kExampleSeconds, "runtime");
  o.detail << " maximals 168/42/16/12, Klein four classes 2 (normalizers 24, 24) fusing to 1, " << secs << " s";
}

void sections_unique(Outcome& o) {
  auto battery = scan_battery(200);
  battery.push_back(GroupSpec::named("PGL2", {7}));
  std::uint64_t violations = 0, maximal_classes = 0;
  for (const auto& spec : battery) {
    GroupContext ctx(build_group(spec));
    auto r = verify_sections_unique(ctx, spec.label());
    violations += r.evidence.class_counts.at("violations");
    maximal_classes += r.evidence.class_counts.at("maximal_classes");
    o.require(r.status == Status::Pass && r.complete, spec.label());
  }
  o.require(violations == 0, "zero violations");
  o.detail << " " << battery.size() << " groups, " << maximal_classes << " maximal classes, " << violations
           << " violations";
}

void alternating(Outcome& o) {
  auto a5 = verify_alternating_no_small_index(5);
  for (const char* k : {"index 2", "index 3", "index 4"})
    o.require(a5.evidence.class_counts.at(k) == 0, std::string("A5 ") + k);
  o.require(a5.status == Status::Pass, "A5 small index");
  auto a4 = verify_alternating_no_small_index(4);
  o.require(a4.evidence.class_counts.at("index 3") == 1 && a4.evidence.witnesses.count("exception"),
            "A4 index-3 exception");
  std::uint64_t counts[3];
  std::size_t ns[3] = {5, 6, 7};
  for (int i = 0; i < 3; ++i) {
    auto r = verify_alternating_index_n_conjugate(ns[i]);
    counts[i] = r.evidence.class_counts.at("index_n_classes");
    o.require(r.status == Status::Pass, "A" + std::to_string(ns[i]) + " index-n classes");
  }
  o.require(counts[0] == 1 && counts[1] == 2 && counts[2] == 1, "class counts 1/2/1");
  o.detail << " A5 index 2,3,4: 0 subgroups; index-n classes A5=" << counts[0] << " A6=" << counts[1]
           << " A7=" << counts[2] << "; A4 index 3: E2^2 exception";
}

void sylow(Outcome& o) {
  struct Case {
    std::size_t n;
    std::uint32_t q;
    LinearAction side;
    std::uint64_t order;
  };
  const Case cases[] = {{2, 4, LinearAction::Vectors, 12},
                        {2, 8, LinearAction::Vectors, 56},
                        {2, 9, LinearAction::ProjectivePoints, 36},
                        {3, 4, LinearAction::Vectors, 576}};
  for (const auto& c : cases) {
    std::string tag = "(" + std::to_string(c.n) + "," + std::to_string(c.q) + ")";
    auto f = FiniteField::of_order(c.q);
    o.require(corner_conjugation_identity(c.n, f, kIdentityTrials, 0), tag + " identity");
    for (auto side : {LinearAction::Vectors, LinearAction::ProjectivePoints}) {
      auto t = lower_triangular_normalizer(c.n, f, side);
      auto cert = certify_corner_minimal_normal(t);
      o.require(cert.normal && cert.minimal, tag + " corner minimal normal");
      o.require(!is_supersolvable(t.normalizer.group()), tag + " not supersolvable");
      o.require(t.normalizer.order() == t.closed_form, tag + " closed form");
      if (side == c.side) o.require(t.normalizer.order() == c.order, tag + " order " + std::to_string(c.order));
    }
    o.require(verify_sylow_normalizer(c.n, c.q).status == Status::Pass, tag + " report");
  }
  o.detail << " orders 12, 56, 36 (after kernel), 576; " << kIdentityTrials
           << " identity trials per case, 0 failures; corners minimal normal; none supersolvable";
}

void theorem_scan(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t groups = 0, fails = 0, vacuous = 0, holds = 0, other = 0;
  for (const auto& spec : scan_battery(500)) {
    GroupContext ctx(build_group(spec));
    auto r = verify_theorem_instance(ctx, spec.label());
    ++groups;
    if (r.status == Status::Fail) ++fails;
    if (r.status != Status::Pass) {
      ++other;
      o.require(false, spec.label() + " " + to_string(r.status));
      continue;
    }
    bool nonvacuous = r.evidence.witnesses.at("implication") == "hypothesis holds";
    (nonvacuous ? holds : vacuous)++;
    if (nonvacuous) o.require(r.complete && r.subchecks.at(0).complete && r.subchecks.at(1).complete,
                              spec.label() + " completeness");
  }
  GroupContext s5(symmetric_group(5));
  auto h = check_hypothesis(s5, "S5");
  o.require(h.status == Status::Fail && h.evidence.witnesses.at("section") == "A4", "S5 witness A4");
  GroupContext pgl(pgl2_group(7));
  o.require(check_hypothesis(pgl).status == Status::Pass && check_conclusion(pgl).status == Status::Pass,
            "PGL2(7) both sides");
  double secs = seconds_since(t0);
  o.require(fails == 0, "zero fail verdicts");
  o.require(secs < kScanSeconds, "runtime");
  o.detail << " " << groups << " groups: " << holds << " hypothesis holds, " << vacuous << " vacuous, " << fails
           << " fail, " << other << " non-pass; S5 witness Sec = A4; PGL2(7) both sides pass; " << secs << " s";
}

void engine(Outcome& o) {
  for (std::size_t n = 2; n <= 7; ++n) {
    o.require(alternating_group(n).order() == factorial(n) / 2, "|A" + std::to_string(n) + "|");
    o.require(symmetric_group(n).order() == factorial(n), "|S" + std::to_string(n) + "|");
  }
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u})
    o.require(psl2_group(q).order() == std::uint64_t(q) * (q * q - 1) / std::gcd(2u, q - 1),
              "|L2(" + std::to_string(q) + ")|");
  std::uint64_t counts[] = {subgroup_count(all_subgroups(symmetric_group(3))),
                            subgroup_count(all_subgroups(dihedral_group(8))),
                            subgroup_count(all_subgroups(alternating_group(4))),
                            subgroup_count(all_subgroups(symmetric_group(4)))};
  o.require(counts[0] == 6 && counts[1] == 10 && counts[2] == 10 && counts[3] == 30, "subgroup counts");
  std::size_t oracle_groups = 0, invariance_groups = 0;
  for (const auto& spec : scan_battery(200)) {
    auto g = build_group(spec);
    GroupContext ctx(g);
    o.require(is_supersolvable(ctx) == oracle::supersolvable(g), spec.label() + " supersolvable");
    ++oracle_groups;
    auto base = composition_factors(ctx);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SeriesOptions opts;
      opts.random_seed = seed;
      o.require(composition_factors(ctx, opts) == base, spec.label() + " composition factors");
    }
    ++invariance_groups;
  }
  o.detail << " S3/D8/A4/S4 subgroups " << counts[0] << "/" << counts[1] << "/" << counts[2] << "/" << counts[3]
           << "; supersolvability matches oracle on " << oracle_groups << " groups; composition factors stable over 5 reruns on "
           << invariance_groups << " groups";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"1 example p=7 (exact, < 120 s)", example},
      {"2 sections agree across chief pairs (0 violations)", sections_unique},
      {"3 alternating index counts (exact)", alternating},
      {"4 Sylow normalizers (exact orders, >= 100 identity trials)", sylow},
      {"5 theorem scan, order <= 500 (0 fail, < 600 s)", theorem_scan},
      {"6 engine properties (exact)", engine},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s criterion %s:%s\n", o.ok ? "PASS" : "FAIL", name, o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
