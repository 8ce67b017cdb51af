#include "csec_cli/scan_store.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "csec/error.hpp"

namespace csec::cli {

json to_json(const ScanRecord& r) {
  json j;
  j["spec"] = to_json(r.spec);
  j["reports"] = json::array();
  for (const auto& rep : r.reports) j["reports"].push_back(to_json(rep));
  j["version"] = r.version;
  j["timestamp"] = r.timestamp;
  j["completeness"] = r.complete;
  return j;
}

ScanRecord scan_record_from_json(const json& j) {
  try {
    ScanRecord r;
    r.spec = group_spec_from_json(j.at("spec"));
    for (const auto& rep : j.at("reports")) r.reports.push_back(report_from_json(rep));
    r.version = j.at("version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.complete = j.at("completeness").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed scan record: ") + e.what());
  }
}

ScanStore::ScanStore(std::filesystem::path path) : path_(std::move(path)) {}

std::vector<ScanRecord> ScanStore::load() const {
  std::vector<ScanRecord> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(scan_record_from_json(json::parse(line)));
    } catch (const json::parse_error& e) {
      throw InvalidArgument(path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::optional<ScanRecord> ScanStore::find(const GroupSpec& spec, const std::string& version) const {
  std::optional<ScanRecord> hit;
  for (auto& r : load())
    if (r.version == version && r.spec == spec) hit = std::move(r);
  return hit;
}

void ScanStore::append(const ScanRecord& r) const {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) throw InvalidArgument("cannot open scan store '" + path_.string() + "'");
  out << to_json(r).dump() << '\n';
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace csec::cli
