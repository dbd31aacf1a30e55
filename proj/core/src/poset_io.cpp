#include "posetlab/poset_io.hpp"

#include <fstream>

namespace posetlab {

nlohmann::json to_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : p.cover_pairs()) {
    covers.push_back({p.label(a), p.label(b)});
  }
  return {{"labels", p.labels()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("labels") ||
      !doc["labels"].is_array()) {
    throw PosetError("poset document needs a \"labels\" array");
  }
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw PosetError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) {
      throw PosetError("\"covers\" must be an array");
    }
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
          !c[1].is_string()) {
        throw PosetError("each cover must be a pair of labels");
      }
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset load_poset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PosetError("cannot open '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw PosetError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return poset_from_json(doc);
}

void save_poset(const Poset& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw PosetError("cannot write '" + path.string() + "'");
  out << to_json(p).dump(2) << '\n';
}

}  // namespace posetlab
