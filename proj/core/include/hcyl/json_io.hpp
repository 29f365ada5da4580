#pragma once

#include <string>

#include "json.hpp"

#include "hcyl/covers.hpp"
#include "hcyl/cylinder.hpp"
#include "hcyl/forms.hpp"
#include "hcyl/infection.hpp"
#include "hcyl/knots.hpp"
#include "hcyl/magnus.hpp"
#include "hcyl/nilpotent.hpp"

namespace hcyl {

using json = nlohmann::ordered_json;

// Every reader throws ValidationError naming the JSON pointer of the bad token.
json parse_json(const std::string& text, const std::string& what);

SurfaceBasis basis_from_json(const json& j, const std::string& at = "/basis");
json to_json(const SurfaceBasis& b);

Word word_from_json(const json& j, SurfaceBasis b, const std::string& at);
json to_json(const Word& w);

NilAutomorphism aut_from_json(const json& j, SurfaceBasis b, const std::string& at = "");
json to_json(const NilAutomorphism& a);

// {"basis", "milnor", "aut_images", optional "depth", optional "boundary"}; validated at level Q.
CylinderClass cylinder_from_json(const json& j, int Q, const std::string& at = "");
json to_json(const CylinderClass& M);

json to_json(const FiltrationReport& r);
json to_json(const TruncatedSeries& s);
json to_json(const Aut2Report& r);

// {"basis", "p", "levels":[{"orders","values"}], "phi":{"d","values"}}
PStructure tower_from_json(const json& j, const std::string& at = "");
json to_json(const PStructure& T);
json to_json(const LiftData& L);

SeifertMatrix seifert_from_json(const json& j, const std::string& at);
json to_json(const SeifertMatrix& A);
std::string rational_str(const mpq_class& q);
json to_json(const WittSignatureVector& w);
json to_json(const SignatureIntegral& I);
json cyc_matrix_to_json(const CycMatrix& H);

json to_json(const FamilyReport& r);
FamilyReport family_from_json(const json& j, const std::string& at = "");
json to_json(const GammaTower& gt);
GammaTower gamma_tower_from_json(const json& j, const std::string& at = "");
json to_json(const Certificate& c);

}  // namespace hcyl
