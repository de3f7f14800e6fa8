// JSON (de)serialization: lattice inputs, polytope dumps, proof reports.
// Rationals are rendered as "p/q" strings ("p" when q = 1) everywhere.

#pragma once

#include "hlr/polytope.hpp"
#include "hlr/verify.hpp"

#include <json.hpp>

#include <string>

namespace hlr {

using nlohmann::json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);  // accepts integers and "p/q" strings

json vec_to_json(const RatVec& v);
RatVec vec_from_json(const json& j);

json mat_to_json(const RatMat& m);
RatMat mat_from_json(const json& j);

struct LatticeInput {
    RatMat gram;
    std::string name;  // empty unless taken from the catalog
};

// {"n": int, "gram": [[...]]} or {"n": int, "basis": [[...]]}; a basis B
// (rows are basis vectors) is converted to the Gram matrix of its rows.
LatticeInput lattice_from_json(const json& j);

json polytope_to_json(const Polytope& p);

json report_to_json(const ProofReport& r);
ProofReport report_from_json(const json& j);

}  // namespace hlr
