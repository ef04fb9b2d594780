#pragma once

#include <string>

#include "json.hpp"
#include "padichl/hecke.hpp"
#include "padichl/laws.hpp"
#include "padichl/matrices.hpp"
#include "padichl/montecarlo.hpp"

namespace padichl::jsonio {

using nlohmann::json;

json to_json(const sigcore::Signature& s);
sigcore::Signature signature_from_json(const json& j);
sigcore::Signature signature_from_csv(const std::string& s);  // "3,1,0"

/* {"num": [[exp, "coeff"], ...], "den": [...]} with decimal-string
 * coefficients, exponents ascending. */
json to_json(const exactnum::RatFun& f);
exactnum::RatFun ratfun_from_json(const json& j);

json to_json(const exactnum::Rat& r);  // "p/q" string

/* {"nvars": n, "terms": [[[e1,...,en], ratfun], ...]} sorted
 * lexicographically. */
json to_json(const hlpoly::LaurentSymPoly& p);

/* {"case": ..., "mu": ..., "nu": ..., "entries": [[lambda, ratfun], ...]} */
json to_json(const heckecoeff::CoeffTable& t);

/* {"atoms": [[lambda, "p/q"], ...], "tail": "p/q", "cutoff": c} */
json to_json(const lawbook::ExactDistribution& d);

json to_json(const veristat::Histogram& h);
json to_json(const veristat::ComparisonReport& r);

/* Debug view: nested arrays of residue strings "a" / "a+b*s". */
json to_json(const randmat::LocalMatrix& m);

}  // namespace padichl::jsonio
