#pragma once

#include <string>

#include <json.hpp>

#include "symj/group.hpp"

namespace symj {

/// Reads {"order": n, "table": [[int]], "names": [string], "name": string}; indices are
/// 0-based, "names" and "name" optional. Throws std::invalid_argument (with the path) on
/// IO or schema errors and NotAGroup on invalid tables.
Group load_group_file(const std::string& path);
Group group_from_json(const nlohmann::json& j, const std::string& fallback_label);
nlohmann::json group_to_json(const Group& g);

}  // namespace symj
