#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "csec_cli/json_io.hpp"

namespace csec::cli {

struct ScanRecord {
  GroupSpec spec;
  std::vector<VerdictReport> reports;
  std::string version = kToolkitVersion;
  std::string timestamp;
  bool complete = true;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

json to_json(const ScanRecord& r);
ScanRecord scan_record_from_json(const json& j);

/// One JSON record per line. Records are only ever appended.
class ScanStore {
 public:
  explicit ScanStore(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }
  /// Reads every record; a missing file is an empty store. Throws
  /// InvalidArgument on a malformed line.
  std::vector<ScanRecord> load() const;
  /// Latest record for `spec` written by `version`, if any.
  std::optional<ScanRecord> find(const GroupSpec& spec, const std::string& version) const;
  void append(const ScanRecord& r) const;

 private:
  std::filesystem::path path_;
};

std::string utc_timestamp();

}  // namespace csec::cli
