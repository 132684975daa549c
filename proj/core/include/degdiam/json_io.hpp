#pragma once

#include <nlohmann/json.hpp>

#include "degdiam/cayley.hpp"
#include "degdiam/group.hpp"
#include "degdiam/records.hpp"
#include "degdiam/search.hpp"

namespace degdiam {

/// {"family": "cyclic"|"square"|"doubled", "m": int, "n": int,
///  "a": int (cyclic/doubled), "sigma": [[x,y],[z,t]] (square)}
nlohmann::json group_spec_to_json(const GroupSpec& spec);
/// Throws SpecInvalid on unknown family, missing fields, or wrong shapes.
GroupSpec group_spec_from_json(const nlohmann::json& j);

/// Elements serialize as plain integer arrays, e.g. [6,2] or [0,5,1,1].
nlohmann::json element_to_json(const Element& e);
/// Throws ParseError unless j is an integer array of length 2..4.
Element element_from_json(const nlohmann::json& j);

nlohmann::json stats_to_json(const CayleyStats& stats);

/// {"config": {...}, "hits": [{"trial", "generators", "diameter", "order"}],
///  "summary": {"trials", "connected", "best_diameter"}}
nlohmann::json search_result_to_json(const SearchConfig& config, const SearchResult& result);

/// {"delta", "diameter", "order", "spec", "generators", "inverses", "orders"}
/// with null inverse entries for involutions.
nlohmann::json record_to_json(const RecordEntry& entry);
/// Throws ParseError (shape) and SpecInvalid (spec or generator validation).
RecordEntry record_from_json(const nlohmann::json& j);

nlohmann::json erratum_to_json(const Erratum& e);
Erratum erratum_from_json(const nlohmann::json& j);

/// Timing is deliberately excluded: report JSON is byte-stable across runs.
nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json summary_to_json(const VerifySummary& summary);

}  // namespace degdiam
