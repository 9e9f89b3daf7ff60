#pragma once

#include <json.hpp>

#include "lensbord/coin_game.hpp"
#include "lensbord/e8.hpp"
#include "lensbord/knot.hpp"
#include "lensbord/lattice.hpp"
#include "lensbord/scan.hpp"
#include "lensbord/surgery.hpp"

namespace lensbord {

using json = nlohmann::json;

// Input forms. Vectors accept either the wrapped object ({"sigma": [...]},
// {"v": [...]}) or a bare array; torus knots enter as {"torus": [p, q]}.
Changemaker sigma_from_json(const json& j);
std::vector<i64> raw_sigma_from_json(const json& j);  // zeros allowed, for the e8 side
VSequence vseq_from_json(const json& j);
e8::E8Vector e8_vector_from_json(const json& j);

json to_json(const Changemaker& sigma);
json to_json(const VSequence& v);
json to_json(const LaurentPoly& poly);
json to_json(const RelevantView& view);
json to_json(const SlopeWindow& w);
json to_json(const V0SlopeCheck& check);
json to_json(const StructureReport& report);
json to_json(const SigmaTable& table);
json to_json(const HJExpansion& e);
json to_json(const GramMatrix& g);
json to_json(const Realization& r);
json to_json(const std::vector<Realization>& rs);
json to_json(const std::vector<SigmaCandidate>& cands);
json to_json(const FamilyRecovery& rec);
json to_json(const std::vector<FamilyCheck>& checks);
json to_json(const e8::E8Vector& v);
json to_json(const ScanReport& report);

json parse_json(const std::string& text);

}  // namespace lensbord
