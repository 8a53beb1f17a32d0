#pragma once

#include <json.hpp>

#include "cds/game.hpp"
#include "cds/perm_core.hpp"
#include "cds/pile.hpp"
#include "cds/symmetry.hpp"
#include "cds/taxonomy.hpp"

namespace cds {

using json = nlohmann::json;

void to_json(json& j, const Permutation& pi);
void from_json(const json& j, Permutation& pi);  // throws std::invalid_argument

void to_json(json& j, const PointerContext& c);
PointerContext context_from_json(const json& j);  // {p, q}

json moves_json(const std::vector<PointerContext>& moves);

void to_json(json& j, const Hint& h);
void to_json(json& j, const SufficientConditions& s);
void to_json(json& j, const Transcript& t);
void to_json(json& j, const CensusReport& r);
void to_json(json& j, const PeriodicTriple& t);
void to_json(json& j, const StrategicPile& sp);

/// Whole-permutation summary used by `analyze`.
json analysis_json(const Permutation& pi);

/// Integer list from a JSON array; throws std::invalid_argument otherwise.
std::vector<int> int_list(const json& j, const char* what);

}  // namespace cds
