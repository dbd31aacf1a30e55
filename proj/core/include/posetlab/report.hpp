#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "posetlab/analysis.hpp"

namespace posetlab {

enum class Verdict { holds, fails, not_graded };

std::string to_string(Verdict v);

/// Every checked property of one poset. A `fails` verdict always comes
/// with its witness.
struct PropertyReport {
  bool graded = false;
  Verdict rank_symmetric = Verdict::not_graded;
  Verdict rank_unimodal = Verdict::not_graded;
  Verdict rank_log_concave = Verdict::not_graded;
  Verdict normal = Verdict::not_graded;
  Verdict strongly_sperner = Verdict::not_graded;

  std::optional<IndexWitness> symmetry_witness;
  std::optional<IndexWitness> unimodality_witness;
  std::optional<IndexWitness> log_concavity_witness;
  std::optional<NormalityWitness> normality_witness;
  std::optional<SpernerWitness> sperner_witness;
};

PropertyReport analyze(const Poset& p);

/// True iff every failing verdict carries a witness that re-validates.
bool validates(const Poset& p, const PropertyReport& report);

/// {"graded": bool, "properties": {name: {"verdict": "true"|"false"|
/// "not graded", "witness": {...}}}}. Witness elements are written by label.
nlohmann::json to_json(const Poset& p, const PropertyReport& report);

/// Summary plus properties, as printed by `posetlab report --json`:
/// {"expression", "size", "max_rank", "whitney", "rank_polynomial",
///  "graded", "properties"}. Ungraded posets have null rank fields.
nlohmann::json report_document(const std::string& expression, const Poset& p,
                               const PropertyReport& report);

/// Rebuilds the report from a document written by to_json / report_document
/// and checks each failure witness against `p`.
bool validate_document(const Poset& p, const nlohmann::json& doc);

}  // namespace posetlab
