#pragma once

#include "fpg/groupoids.hpp"
#include "fpg/leaves.hpp"

#include <json.hpp>

namespace fpg {

using json = nlohmann::json;

// rationals are "p/q" strings, Weyl elements 1-based words, matrices row-major arrays.
// records carry kind and rank so the parser knows the ambient group.
struct JsonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json to_json(const Rat& x);
json to_json(const RMat& m);
json to_json(const std::vector<Rat>& v);
json to_json(const WeylElt& w);
json to_json(const TorusElt& t);
json to_json(const std::vector<WeylElt>& ws);
json to_json(const std::vector<RMat>& ms);
json to_json(const FnPoint& p);
json to_json(const TFnPoint& p);
json to_json(const GammaArrow& g);
json to_json(const C2nArrow& a);
json to_json(const FoTArrow& a);
json to_json(const GdbuArrow& a);
json to_json(const GmnPoint& p);
json to_json(const BSChart& ch);
json to_json(const TorusCoset& c);
json to_json(const LevelPair& l);
json to_json(const CellLabel& l);

Rat rat_from_json(const json& j);
RMat mat_from_json(const json& j);
WeylElt weyl_from_json(const json& j, int rank);
std::vector<WeylElt> weyls_from_json(const json& j, int rank);
TorusElt torus_from_json(const json& j);
std::vector<RMat> mats_from_json(const json& j);
std::vector<Rat> rats_from_json(const json& j);
BSChart chart_from_json(const json& j);
// records are validated: stored points must already be canonical, or "reps" is given instead
FnPoint fn_from_json(const json& j);
TFnPoint tfn_from_json(const json& j);
GammaArrow gamma_from_json(const json& j);
C2nArrow c2n_from_json(const json& j);
FoTArrow fot_from_json(const json& j);
GdbuArrow gdbu_from_json(const json& j);
GmnPoint gmn_from_json(const json& j);

}  // namespace fpg
