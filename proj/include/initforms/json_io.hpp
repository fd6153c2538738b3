#pragma once

#include "initforms/actions.hpp"
#include "initforms/newton.hpp"
#include "initforms/theorems.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace initforms::io {

// Insertion-ordered JSON keeps CLI output byte-stable.
using Json = nlohmann::ordered_json;

// Stable class tag for an error ("SyntaxError", "CounitFails", ...).
std::string error_class_name(const Error& e);

// Rationals travel as decimal-free strings ("3", "-1/2"); plain JSON
// integers are accepted on input.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json group_elem_to_json(const GroupElem& g);
Json weight_to_json(const Weight& w);
// Weight literal: [[1],[1]] or [["1/2","0"],["0","1"]].
Weight weight_from_json(const Json& j);

Json exponent_to_json(const Exponent& e);
Json exponents_to_json(const std::vector<Exponent>& es);

// {"m": 2, "images": ["x1", "x2 + x1*z"]}
GaAction action_from_json(const Json& j);
Json action_to_json(const GaAction& a);

// {"m": 3, "d": ["0", "x1", "x2"], "cap": 64}
LND lnd_from_json(const Json& j);

// {"m": 2, "images": [...]}; the source arity is the image count. z is
// admitted in images only when allow_z is set.
AlgebraHom hom_from_json(const Json& j, bool allow_z);

// {"m": 2, "F": [...], "G": [...]}
AutomorphismPair ap_from_json(const Json& j);

std::vector<Poly> polys_from_json(const Json& j, int nvars);

struct JobResult {
    Json output;
    int exit_code = 0;  // 0 verified, 1 failed, 2 hypothesis_fails, 3 error
};

// Dispatches a theorem-lab job: {"check": "prop23"|"thm24i"|"star"|"build_u"|
// "thm12"|"thm11"|"thm14", ...}. The output always embeds the normalized job
// under "reproducer", so re-running a report is a fixed point.
JobResult run_job(const Json& job);

}  // namespace initforms::io
