#include "symj/io.hpp"

#include <filesystem>
#include <fstream>

namespace symj {

Group group_from_json(const nlohmann::json& j, const std::string& fallback_label) {
  try {
    const int order = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (order < 1 || static_cast<int>(table.size()) != order)
      throw std::invalid_argument("\"order\" does not match the table size");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    std::string label = j.contains("name") ? j.at("name").get<std::string>() : fallback_label;
    return Group::from_table(table, std::move(names), std::move(label));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("group json: ") + e.what());
  }
}

Group load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return group_from_json(j, std::filesystem::path(path).stem().string());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

nlohmann::json group_to_json(const Group& g) {
  nlohmann::json j;
  j["name"] = g.label();
  j["order"] = g.order();
  j["table"] = g.table();
  j["names"] = g.names();
  return j;
}

}  // namespace symj
