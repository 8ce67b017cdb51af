#include "csec_cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "csec/error.hpp"

namespace csec::cli {

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("group spec: missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InvalidArgument("group spec: " + where + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

json to_json(const GroupSpec& spec) {
  json j;
  if (spec.kind == GroupSpec::Kind::Perm) {
    j["kind"] = "perm";
    j["degree"] = spec.degree;
    j["generators"] = spec.generators;
    return j;
  }
  j["kind"] = "named";
  j["name"] = spec.name;
  j["params"] = spec.params;
  if (!spec.factors.empty()) {
    j["factors"] = json::array();
    for (const auto& f : spec.factors) j["factors"].push_back(to_json(f));
  }
  return j;
}

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("group spec: expected a JSON object");
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw InvalidArgument("group spec: \"kind\" must be a string");
  GroupSpec s;
  if (kind == "perm") {
    s.kind = GroupSpec::Kind::Perm;
    auto degree = integer(field(j, "degree"), "\"degree\"");
    if (degree < 0) throw InvalidArgument("group spec: \"degree\" must be non-negative");
    s.degree = static_cast<std::size_t>(degree);
    const json& gens = field(j, "generators");
    if (!gens.is_array()) throw InvalidArgument("group spec: \"generators\" must be a list of generators");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!gens[g].is_array())
        throw InvalidArgument("group spec: generator " + std::to_string(g + 1) + " must be a list of cycles");
      auto& cycles = s.generators.emplace_back();
      for (const auto& c : gens[g]) {
        if (!c.is_array())
          throw InvalidArgument("group spec: malformed cycle in generator " + std::to_string(g + 1));
        auto& cycle = cycles.emplace_back();
        for (const auto& p : c) cycle.push_back(integer(p, "cycle entries"));
      }
    }
    return s;
  }
  if (kind == "named") {
    s.kind = GroupSpec::Kind::Named;
    const json& name = field(j, "name");
    if (!name.is_string()) throw InvalidArgument("group spec: \"name\" must be a string");
    s.name = name.get<std::string>();
    if (auto it = j.find("params"); it != j.end()) {
      if (!it->is_array()) throw InvalidArgument("group spec: \"params\" must be a list");
      for (const auto& p : *it) {
        if (p.is_object())
          s.factors.push_back(group_spec_from_json(p));
        else
          s.params.push_back(integer(p, "params"));
      }
    }
    if (auto it = j.find("factors"); it != j.end()) {
      if (!it->is_array()) throw InvalidArgument("group spec: \"factors\" must be a list of group specs");
      for (const auto& f : *it) s.factors.push_back(group_spec_from_json(f));
    }
    return s;
  }
  throw InvalidArgument("group spec: unknown kind \"" + kind.get<std::string>() + "\" (expected perm or named)");
}

GroupSpec parse_group_spec(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  std::string body;
  if (first != std::string::npos && text[first] == '{') {
    body = text;
  } else {
    std::ifstream in(text);
    if (!in) throw InvalidArgument("cannot read group spec file '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("group spec: malformed JSON: ") + e.what());
  }
  return group_spec_from_json(j);
}

json to_json(const VerdictReport& r) {
  json j;
  j["subject"] = r.subject;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["evidence"] = {{"orders", r.evidence.orders},
                   {"class_counts", r.evidence.class_counts},
                   {"factor_ids", r.evidence.factor_ids},
                   {"witnesses", r.evidence.witnesses}};
  j["completeness"] = r.complete;
  j["version"] = r.version;
  if (!r.subchecks.empty()) {
    j["subchecks"] = json::array();
    for (const auto& s : r.subchecks) j["subchecks"].push_back(to_json(s));
  }
  return j;
}

VerdictReport report_from_json(const json& j) {
  try {
    VerdictReport r;
    r.subject = j.at("subject").get<std::string>();
    r.check = j.at("check").get<std::string>();
    r.status = parse_status(j.at("status").get<std::string>());
    const auto& e = j.at("evidence");
    e.at("orders").get_to(r.evidence.orders);
    e.at("class_counts").get_to(r.evidence.class_counts);
    e.at("factor_ids").get_to(r.evidence.factor_ids);
    e.at("witnesses").get_to(r.evidence.witnesses);
    r.complete = j.at("completeness").get<bool>();
    r.version = j.at("version").get<std::string>();
    if (auto it = j.find("subchecks"); it != j.end())
      for (const auto& s : *it) r.subchecks.push_back(report_from_json(s));
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace csec::cli
