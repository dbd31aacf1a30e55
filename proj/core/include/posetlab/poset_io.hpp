#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "posetlab/poset.hpp"

namespace posetlab {

// Poset documents look like
//   {"labels": ["a", "b"], "covers": [["a", "b"]]}
// where ["a", "b"] means b covers a.

nlohmann::json to_json(const Poset& p);
/// Throws PosetError when the document is malformed or describes an invalid
/// poset.
Poset poset_from_json(const nlohmann::json& doc);

Poset load_poset(const std::filesystem::path& path);
void save_poset(const Poset& p, const std::filesystem::path& path);

}  // namespace posetlab
