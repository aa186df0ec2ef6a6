#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "runlat/measures.hpp"
#include "runlat/poset.hpp"

namespace runlat {

// {is_lattice, is_distributive, is_modular, is_graded, n5_witness,
//  join_irreducible_count, ...context}
nlohmann::json verdict_to_json(const SpaceAnalysis& analysis);

nlohmann::json classification_to_json(const ClassificationReport& report);

// Header plus one row: measure, ordering, n, c, is_valuation, is_isotone,
// is_positive, witness1, witness2 (first failing pair, law before isotone
// before positive).
std::string classification_to_csv(const ClassificationReport& report, bool with_header = true);

std::string classification_to_text(const ClassificationReport& report);

}  // namespace runlat
