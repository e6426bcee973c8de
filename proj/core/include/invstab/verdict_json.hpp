#ifndef INVSTAB_VERDICT_JSON_HPP
#define INVSTAB_VERDICT_JSON_HPP

#include <json.hpp>

#include "invstab/char_sums.hpp"
#include "invstab/stability.hpp"

namespace invstab {

// Field elements serialize as a plain residue over a prime field and as the
// coefficient list (low to high) over an extension.
nlohmann::json elem_to_json(const FieldCtx& F, const FieldElem& a);

// Verdict of decide_fq with the schema
// {"schema_version":1,"field":{"p":..,"k":..},"d":..,"c":..,"verdict":..,
//  "preperiod":..,"period":..,"ratios":[..],"witness":..}.
nlohmann::json decide_json(const FieldCtx& F, uint64_t d, const FieldElem& c,
                           const Verdict& v);

// Verdict of guarantee_z / guarantee_ft; `ring` is "z" or "ft" and `c_text`
// the input form of c.
nlohmann::json guarantee_json(const std::string& ring, uint64_t d,
                              const std::string& c_text, const Verdict& v);

nlohmann::json family_json(const FamilyReport& rep);

// One row per qualifying c: c, legendre(c-1), legendre(c), legendre(c+1),
// verdict. Header row included; verdict is blank when stability was not run.
std::string family_csv(const FamilyReport& rep);

std::string verdict_text(const Verdict& v);

}  // namespace invstab

#endif
