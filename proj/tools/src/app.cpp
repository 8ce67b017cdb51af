#include "csec_cli/app.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "csec/error.hpp"
#include "csec/lattice.hpp"
#include "csec/series.hpp"
#include "csec_cli/scan_store.hpp"

namespace csec::cli {

namespace {

struct Common {
  bool json = false;
  std::uint64_t max_order = 5000;
  std::size_t degree_cap = 5000;
  std::uint64_t seed = 0;
  bool allow_large = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Print a JSON document instead of text");
  cmd->add_option("--max-order", c.max_order, "Largest group order for full lattice enumeration")->capture_default_str();
  cmd->add_option("--degree-cap", c.degree_cap, "Largest permutation degree or coset-action degree")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed for randomized fallbacks")->capture_default_str();
  cmd->add_flag("--allow-large", c.allow_large, "Permit instances above the default size limits");
}

LatticeOptions lattice_options(const Common& c) {
  LatticeOptions o;
  o.order_cap = c.max_order;
  o.seed = c.seed;
  o.limits.coset_degree_cap = c.degree_cap;
  return o;
}

VerifyOptions verify_options(const Common& c) {
  VerifyOptions o;
  o.seed = c.seed;
  o.allow_large = c.allow_large;
  o.lattice = lattice_options(c);
  return o;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
      return kPass;
    case Status::Fail:
      return kFail;
    default:
      return kInconclusive;
  }
}

json order_json(const Order& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return to_u64(n);
  return n.str();
}

std::string generators_string(const PermGroup& g) {
  std::string s;
  for (const auto& p : g.generators()) s += (s.empty() ? "" : " ") + p.to_cycle_string();
  return s.empty() ? "()" : s;
}

void print_report(std::ostream& out, const VerdictReport& r, int depth = 0) {
  std::string pad(2 * depth, ' ');
  out << pad << r.check << ": " << to_string(r.status) << (r.complete ? "" : " (incomplete enumeration)");
  if (depth == 0) out << "  [" << r.subject << "]";
  out << '\n';
  for (const auto& [k, v] : r.evidence.orders) out << pad << "  order " << k << " = " << v << '\n';
  for (const auto& [k, v] : r.evidence.class_counts) out << pad << "  count " << k << " = " << v << '\n';
  for (const auto& [k, v] : r.evidence.factor_ids) {
    out << pad << "  " << k << ":";
    for (const auto& id : v) out << ' ' << id;
    out << '\n';
  }
  for (const auto& [k, v] : r.evidence.witnesses) out << pad << "  " << k << ": " << v << '\n';
  for (const auto& s : r.subchecks) print_report(out, s, depth + 1);
}

int emit(std::ostream& out, const VerdictReport& r, bool as_json) {
  if (as_json)
    out << to_json(r).dump(2) << '\n';
  else
    print_report(out, r);
  return exit_code(r.status);
}

struct Loaded {
  GroupSpec spec;
  PermGroup group;
};

Loaded load_group(const std::string& text, const Common& c) {
  GroupSpec spec = parse_group_spec(text);
  BuildLimits limits;
  limits.max_degree = c.degree_cap;
  return {spec, build_group(spec, limits)};
}

void echo_group(std::ostream& out, const Loaded& g, const Common& c) {
  if (!c.json) out << "group " << g.spec.label() << ", order " << g.group.order().str() << '\n';
}

int cmd_order(const std::string& spec, const Common& c, std::ostream& out) {
  auto g = load_group(spec, c);
  if (c.json)
    out << json{{"subject", g.spec.label()}, {"order", order_json(g.group.order())}, {"degree", g.group.degree()}}.dump(2)
        << '\n';
  else
    out << g.group.order().str() << '\n';
  return kPass;
}

int cmd_maximals(const std::string& spec, const Common& c, std::ostream& out) {
  auto g = load_group(spec, c);
  GroupContext ctx(g.group, lattice_options(c));
  const auto& maxes = ctx.maximal_classes();
  bool complete = ctx.maximal_classes_complete();
  json list = json::array();
  echo_group(out, g, c);
  for (std::size_t i = 0; i < maxes.size(); ++i) {
    Subgroup m = ctx.subgroup(maxes[i].representative);
    std::string id = identify(m.group()).to_string();
    if (c.json) {
      list.push_back({{"index", i},
                      {"order", maxes[i].order},
                      {"class_size", maxes[i].class_size},
                      {"identified", id},
                      {"generators", generators_string(m.group())}});
    } else {
      out << "[" << i << "] order " << maxes[i].order << ", class size " << maxes[i].class_size << ", " << id
          << "  gens " << generators_string(m.group()) << '\n';
    }
  }
  if (c.json)
    out << json{{"subject", g.spec.label()},
                {"order", order_json(g.group.order())},
                {"completeness", complete},
                {"maximals", list}}
               .dump(2)
        << '\n';
  else if (!complete)
    out << "warning: maximal classes found by random search, list may be incomplete\n";
  return complete ? kPass : kInconclusive;
}

int cmd_sec(const std::string& spec, std::size_t index, bool all_pairs, const Common& c, std::ostream& out,
            std::ostream& err) {
  auto g = load_group(spec, c);
  GroupContext ctx(g.group, lattice_options(c));
  const auto& maxes = ctx.maximal_classes();
  if (index >= maxes.size()) {
    err << "error: --maximal-index " << index << " out of range (" << maxes.size() << " maximal classes)\n";
    return kUsage;
  }
  Subgroup m = ctx.subgroup(maxes[index].representative);
  CSection s = sec(ctx, m, all_pairs);
  bool complete = ctx.maximal_classes_complete();
  if (c.json) {
    out << json{{"subject", g.spec.label()},
                {"maximal_index", index},
                {"maximal_order", maxes[index].order},
                {"maximal_generators", generators_string(m.group())},
                {"chief_factor", {{"K", order_json(s.source_pair.k.order())}, {"L", order_json(s.source_pair.l.order())}}},
                {"section_order", order_json(s.group.order())},
                {"supersolvable", s.supersolvable},
                {"identified", s.identified.to_string()},
                {"completeness", complete}}
               .dump(2)
        << '\n';
  } else {
    echo_group(out, g, c);
    out << "maximal [" << index << "] order " << maxes[index].order << ", chief factor |K| = "
        << s.source_pair.k.order().str() << ", |L| = " << s.source_pair.l.order().str() << '\n';
    out << "section order " << s.group.order().str() << ", supersolvable: " << (s.supersolvable ? "true" : "false")
        << ", isomorphic to " << s.identified.to_string() << '\n';
  }
  return complete ? kPass : kInconclusive;
}

using ReportFn = VerdictReport (*)(const GroupContext&, const std::string&);

int cmd_group_report(ReportFn fn, const std::string& spec, const Common& c, std::ostream& out) {
  auto g = load_group(spec, c);
  GroupContext ctx(g.group, lattice_options(c));
  return emit(out, fn(ctx, g.spec.label()), c.json);
}

ScanRecord scan_one(const GroupSpec& spec, const Common& c) {
  ScanRecord rec;
  rec.spec = spec;
  rec.timestamp = utc_timestamp();
  std::string label = spec.label();
  try {
    BuildLimits limits;
    limits.max_degree = c.degree_cap;
    GroupContext ctx(build_group(spec, limits), lattice_options(c));
    rec.reports.push_back(verify_theorem_instance(ctx, label));
    rec.reports.push_back(verify_sections_unique(ctx, label));
  } catch (const Error& e) {
    VerdictReport r;
    r.subject = label;
    r.check = "theorem_instance";
    r.status = Status::Inconclusive;
    r.complete = false;
    r.evidence.witnesses["error"] = e.what();
    rec.reports.push_back(std::move(r));
  }
  for (const auto& r : rec.reports) rec.complete = rec.complete && r.complete;
  return rec;
}

int cmd_scan(std::uint64_t up_to, std::string store_path, std::size_t workers, const Common& c, std::ostream& out) {
  if (store_path.empty())
    if (const char* env = std::getenv("CSECTION_STORE")) store_path = env;
  std::optional<ScanStore> store;
  if (!store_path.empty()) store.emplace(store_path);

  auto battery = scan_battery(up_to);
  std::vector<std::optional<ScanRecord>> records(battery.size());
  std::vector<bool> cached(battery.size(), false);
  if (store) {
    auto existing = store->load();
    for (std::size_t i = 0; i < battery.size(); ++i)
      for (const auto& r : existing)
        if (r.version == kToolkitVersion && r.spec == battery[i]) {
          records[i] = r;
          cached[i] = true;
        }
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < battery.size();)
      if (!records[i]) records[i] = scan_one(battery[i], c);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Status worst = Status::Pass;
  std::size_t passes = 0, fails = 0, inconclusive = 0, reused = 0;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const ScanRecord& rec = *records[i];
    if (store && !cached[i]) store->append(rec);
    reused += cached[i];
    Status s = Status::Pass;
    for (const auto& r : rec.reports) {
      if (r.status == Status::Fail) s = Status::Fail;
      else if (r.status == Status::Inconclusive && s == Status::Pass) s = Status::Inconclusive;
    }
    (s == Status::Pass ? passes : s == Status::Fail ? fails : inconclusive)++;
    if (s == Status::Fail || (s == Status::Inconclusive && worst == Status::Pass)) worst = s;
    if (c.json) {
      out << to_json(rec).dump() << '\n';
    } else {
      out << rec.spec.label();
      for (const auto& r : rec.reports) out << "  " << r.check << "=" << to_string(r.status);
      if (cached[i]) out << "  (stored)";
      out << '\n';
    }
  }
  if (!c.json)
    out << battery.size() << " groups: " << passes << " pass, " << fails << " fail, " << inconclusive
        << " inconclusive; " << reused << " taken from the store\n";
  return exit_code(worst);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal-subgroup c-section toolkit", "csection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));

  Common c;
  std::string group;
  std::size_t maximal_index = 0;
  bool all_pairs = false;
  std::size_t n = 5, vn = 2;
  std::uint32_t q = 4, p = 7;
  std::uint64_t up_to = 500;
  std::string store;
  std::size_t workers = 0;

  auto with_group = [&](CLI::App* cmd) {
    add_common(cmd, c);
    cmd->add_option("--group,-g", group, "Group spec: a JSON file path or inline JSON")->required();
    return cmd;
  };

  auto* order = with_group(app.add_subcommand("order", "Print the group order"));
  auto* maximals = with_group(app.add_subcommand("maximals", "List conjugacy classes of maximal subgroups"));
  auto* secc = with_group(app.add_subcommand("sec", "Compute Sec(M) for one maximal class"));
  secc->add_option("--maximal-index", maximal_index, "Index into the maximals listing (0-based)")->required();
  secc->add_flag("--all-pairs", all_pairs, "Check every chief pair gives an isomorphic section");
  auto* hyp = with_group(app.add_subcommand("hypothesis", "Is Sec(M) supersolvable for every maximal M"));
  auto* con = with_group(app.add_subcommand("conclusion", "Are all composition factors cyclic or L2(p), p = +-1 mod 8"));

  auto* verify = app.add_subcommand("verify", "Run one of the packaged verifications");
  verify->require_subcommand(1);
  auto* lemma1 = with_group(verify->add_subcommand("lemma1", "Sections agree across chief pairs"));
  auto* theorem = with_group(verify->add_subcommand("theorem", "Hypothesis implies conclusion for one group"));
  auto* lemma2a = verify->add_subcommand("lemma2a", "A_n has no subgroup of index below n");
  add_common(lemma2a, c);
  lemma2a->add_option("--n", n, "Degree, 4..7")->capture_default_str();
  auto* lemma3 = verify->add_subcommand("lemma3", "Index-n subgroups of A_n are conjugate");
  add_common(lemma3, c);
  lemma3->add_option("--n", n, "Degree, 4..7")->capture_default_str();
  auto* lemma4 = verify->add_subcommand("lemma4", "Sylow normalizer in SL(n,q)");
  add_common(lemma4, c);
  lemma4->add_option("--n", vn, "Matrix dimension")->capture_default_str();
  lemma4->add_option("--q", q, "Field size")->capture_default_str();
  auto* example = verify->add_subcommand("example", "The PGL2(p) example");
  add_common(example, c);
  example->add_option("--p", p, "Prime with p = +-1 mod 8")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "Check the theorem over the built-in battery");
  add_common(scan, c);
  scan->add_option("--up-to", up_to, "Largest group order in the battery")->capture_default_str();
  scan->add_option("--store", store, "Append-only result file (default: $CSECTION_STORE)");
  scan->add_option("--workers", workers, "Worker threads (default: available parallelism)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolkitVersion << '\n';
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) {
      err << sub->help();
      return kUsage;
    }
    err << app.help();
    return kUsage;
  }

  try {
    if (order->parsed()) return cmd_order(group, c, out);
    if (maximals->parsed()) return cmd_maximals(group, c, out);
    if (secc->parsed()) return cmd_sec(group, maximal_index, all_pairs, c, out, err);
    if (hyp->parsed()) return cmd_group_report(&check_hypothesis, group, c, out);
    if (con->parsed()) return cmd_group_report(&check_conclusion, group, c, out);
    if (lemma1->parsed()) return cmd_group_report(&verify_sections_unique, group, c, out);
    if (theorem->parsed()) return cmd_group_report(&verify_theorem_instance, group, c, out);
    if (lemma2a->parsed()) return emit(out, verify_alternating_no_small_index(n, verify_options(c)), c.json);
    if (lemma3->parsed()) return emit(out, verify_alternating_index_n_conjugate(n, verify_options(c)), c.json);
    if (lemma4->parsed()) return emit(out, verify_sylow_normalizer(vn, q, verify_options(c)), c.json);
    if (example->parsed()) return emit(out, verify_pgl2_example(p, verify_options(c)), c.json);
    if (scan->parsed()) return cmd_scan(up_to, store, workers, c, out);
  } catch (const MissingChiefPair& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (see --max-order, --degree-cap, --allow-large)\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace csec::cli
