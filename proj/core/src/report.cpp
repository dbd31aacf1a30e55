#include "posetlab/report.hpp"

namespace posetlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::not_graded: return "not graded";
  }
  return "?";
}

namespace {

template <class W>
Verdict verdict_of(const std::optional<W>& w) {
  return w ? Verdict::fails : Verdict::holds;
}

nlohmann::json labels_of(const Poset& p, const Subset& s) {
  auto out = nlohmann::json::array();
  for (auto x : s) out.push_back(p.label(x));
  return out;
}

Subset ids_of(const Poset& p, const nlohmann::json& labels) {
  Subset out;
  for (const auto& l : labels) out.push_back(p.id_of(l.get<std::string>()));
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json index_json(const IndexWitness& w) {
  return {{"indices", w.indices}, {"counts", w.counts}};
}

nlohmann::json property(Verdict v, nlohmann::json witness = nullptr) {
  nlohmann::json out{{"verdict", to_string(v)}};
  if (!witness.is_null()) out["witness"] = std::move(witness);
  return out;
}

bool index_witness_ok(const WhitneyProfile& counts, const nlohmann::json& w,
                      std::size_t arity) {
  auto idx = w.at("indices").get<std::vector<std::size_t>>();
  auto cnt = w.at("counts").get<std::vector<std::size_t>>();
  if (idx.size() != arity || cnt.size() != arity) return false;
  for (std::size_t i = 0; i < arity; ++i) {
    if (idx[i] >= counts.size() || counts[idx[i]] != cnt[i]) return false;
  }
  if (arity == 2) return idx[1] == counts.size() - 1 - idx[0] && cnt[0] != cnt[1];
  if (!(idx[0] < idx[1] && idx[1] < idx[2])) return false;
  if (idx[1] == idx[0] + 1 && idx[2] == idx[1] + 1 &&
      cnt[1] * cnt[1] < cnt[0] * cnt[2]) {
    return true;
  }
  return cnt[0] > cnt[1] && cnt[1] < cnt[2];
}

}  // namespace

PropertyReport analyze(const Poset& p) {
  PropertyReport r;
  r.graded = p.is_graded();
  if (!r.graded) return r;
  const auto counts = whitney(p);
  r.symmetry_witness = symmetry_violation(counts);
  r.unimodality_witness = unimodality_violation(counts);
  r.log_concavity_witness = log_concavity_violation(counts);
  r.normality_witness = normality_violation(p);
  r.sperner_witness = sperner_violation(p);
  r.rank_symmetric = verdict_of(r.symmetry_witness);
  r.rank_unimodal = verdict_of(r.unimodality_witness);
  r.rank_log_concave = verdict_of(r.log_concavity_witness);
  r.normal = verdict_of(r.normality_witness);
  r.strongly_sperner = verdict_of(r.sperner_witness);
  return r;
}

bool validates(const Poset& p, const PropertyReport& r) {
  if (r.graded != p.is_graded()) return false;
  if (!r.graded) {
    for (auto v : {r.rank_symmetric, r.rank_unimodal, r.rank_log_concave,
                   r.normal, r.strongly_sperner}) {
      if (v != Verdict::not_graded) return false;
    }
    return true;
  }
  const auto counts = whitney(p);
  auto check_index = [&](Verdict v, const std::optional<IndexWitness>& w,
                         auto finder) {
    if (v == Verdict::holds) return !w && !finder(counts);
    return v == Verdict::fails && w && finder(counts).has_value() &&
           index_witness_ok(counts, index_json(*w), w->indices.size());
  };
  auto sym = [](const WhitneyProfile& c) { return symmetry_violation(c); };
  auto uni = [](const WhitneyProfile& c) { return unimodality_violation(c); };
  auto lc = [](const WhitneyProfile& c) { return log_concavity_violation(c); };
  if (!check_index(r.rank_symmetric, r.symmetry_witness, sym)) return false;
  if (!check_index(r.rank_unimodal, r.unimodality_witness, uni)) return false;
  if (!check_index(r.rank_log_concave, r.log_concavity_witness, lc)) return false;
  if (r.normal == Verdict::fails &&
      !(r.normality_witness && validates(p, *r.normality_witness))) {
    return false;
  }
  if (r.strongly_sperner == Verdict::fails &&
      !(r.sperner_witness && validates(p, *r.sperner_witness))) {
    return false;
  }
  return r.normal != Verdict::not_graded &&
         r.strongly_sperner != Verdict::not_graded;
}

nlohmann::json to_json(const Poset& p, const PropertyReport& r) {
  nlohmann::json props;
  auto idx = [](const std::optional<IndexWitness>& w) -> nlohmann::json {
    return w ? index_json(*w) : nlohmann::json(nullptr);
  };
  props["rank_symmetric"] = property(r.rank_symmetric, idx(r.symmetry_witness));
  props["rank_unimodal"] = property(r.rank_unimodal, idx(r.unimodality_witness));
  props["rank_log_concave"] =
      property(r.rank_log_concave, idx(r.log_concavity_witness));

  nlohmann::json normal_w = nullptr;
  if (r.normality_witness) {
    const auto& w = *r.normality_witness;
    normal_w = {{"level", w.level},
                {"subset", labels_of(p, w.subset)},
                {"shadow", labels_of(p, w.shadow)},
                {"level_size", w.level_size},
                {"next_level_size", w.next_level_size}};
  }
  props["normal"] = property(r.normal, normal_w);

  nlohmann::json sperner_w = nullptr;
  if (r.sperner_witness) {
    const auto& w = *r.sperner_witness;
    auto antichains = nlohmann::json::array();
    for (const auto& a : w.family.antichains) antichains.push_back(labels_of(p, a));
    sperner_w = {{"j", w.j},
                 {"family_size", w.family.size},
                 {"level_bound", w.level_bound},
                 {"antichains", antichains}};
  }
  props["strongly_sperner"] = property(r.strongly_sperner, sperner_w);

  return {{"graded", r.graded}, {"properties", props}};
}

nlohmann::json report_document(const std::string& expression, const Poset& p,
                               const PropertyReport& r) {
  auto doc = to_json(p, r);
  doc["expression"] = expression;
  doc["size"] = p.size();
  if (p.is_graded()) {
    doc["max_rank"] = p.max_rank();
    doc["whitney"] = whitney(p);
    doc["rank_polynomial"] = format_polynomial(rank_polynomial(p));
  } else {
    doc["max_rank"] = nullptr;
    doc["whitney"] = nullptr;
    doc["rank_polynomial"] = nullptr;
  }
  return doc;
}

bool validate_document(const Poset& p, const nlohmann::json& doc) {
  try {
    if (doc.at("graded").get<bool>() != p.is_graded()) return false;
    const auto& props = doc.at("properties");
    static const char* const names[] = {"rank_symmetric", "rank_unimodal",
                                        "rank_log_concave", "normal",
                                        "strongly_sperner"};
    if (!p.is_graded()) {
      for (auto name : names) {
        if (props.at(name).at("verdict") != "not graded") return false;
      }
      return true;
    }
    const auto counts = whitney(p);
    for (auto name : names) {
      const auto& prop = props.at(name);
      const auto verdict = prop.at("verdict").get<std::string>();
      if (verdict == "true") {
        if (prop.contains("witness")) return false;
        continue;
      }
      if (verdict != "false" || !prop.contains("witness")) return false;
      const auto& w = prop.at("witness");
      const std::string n = name;
      if (n == "rank_symmetric") {
        if (!index_witness_ok(counts, w, 2)) return false;
      } else if (n == "rank_unimodal" || n == "rank_log_concave") {
        if (!index_witness_ok(counts, w, 3)) return false;
      } else if (n == "normal") {
        NormalityWitness nw;
        nw.level = w.at("level").get<int>();
        nw.subset = ids_of(p, w.at("subset"));
        nw.shadow = ids_of(p, w.at("shadow"));
        nw.level_size = w.at("level_size").get<std::size_t>();
        nw.next_level_size = w.at("next_level_size").get<std::size_t>();
        if (!validates(p, nw)) return false;
      } else {
        SpernerWitness sw;
        sw.j = w.at("j").get<std::size_t>();
        sw.level_bound = w.at("level_bound").get<std::size_t>();
        sw.family.size = w.at("family_size").get<std::size_t>();
        for (const auto& a : w.at("antichains")) {
          sw.family.antichains.push_back(ids_of(p, a));
        }
        if (!validates(p, sw)) return false;
      }
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace posetlab
