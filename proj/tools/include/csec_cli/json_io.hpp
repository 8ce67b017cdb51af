#pragma once

#include <string>

#include <json.hpp>

#include "csec/csection.hpp"
#include "csec/named.hpp"

namespace csec::cli {

using nlohmann::json;

json to_json(const GroupSpec& spec);
/// Throws InvalidArgument with a message naming the offending field.
GroupSpec group_spec_from_json(const json& j);

/// `text` is either inline JSON (first non-blank char '{') or a file path.
GroupSpec parse_group_spec(const std::string& text);

json to_json(const VerdictReport& r);
VerdictReport report_from_json(const json& j);

}  // namespace csec::cli
