#pragma once

#include <string>

#include "normone/construction.hpp"
#include "normone/instances.hpp"
#include "normone/operators.hpp"
#include "normone/poly.hpp"
#include "normone/replay.hpp"

namespace normone {

// JSON is the interchange format; text and LaTeX are presentation-only
// (text is still parseable for convenience).  All emitters are
// deterministic: terms appear in canonical order and coefficients are
// decimal strings, so equal values serialize to identical bytes.

// {"p": 2, "n": 2, "terms": [{"c": "-1", "w": [1, 0, 0]}, ...]}
std::string poly_to_json(const Poly& P);
// Accepts coefficients as decimal strings or plain integers; duplicate or
// zero terms are canonicalized away.  Throws ParameterError with the parse
// location / offending field on malformed input.
Poly poly_from_json(const std::string& text);

// "2*s1(x)*s0(x) - s0(x) + 1" where sJ(x) denotes x[J].
std::string poly_to_text(const Poly& P);
Poly poly_from_text(const GroupContext& ctx, const std::string& text);

// "\sigma(x)x - \sigma(x)x^{2} + ..." with runs collapsed into powers and
// \sigma^{0} omitted.
std::string poly_to_latex(const Poly& P);

// {"op": [{"c": 1, "e": 0}, {"c": -1, "e": 2}]}
std::string operator_to_json(const Operator& op);
Operator operator_from_json(const GroupContext& ctx, const std::string& text);

// {"kind": "matrix", "dim": 2, "seed": "7", "bound": 3, "values": [[[...]], ...]}
std::string instance_to_json(const InstanceSpec& inst);
InstanceSpec instance_from_json(const std::string& text);

// [{"eq": "...", "ok": true, "residual_terms": 0}, ...]
std::string replay_report_to_json(const ReplayReport& rep);

// Chain document with per-step data; `include_polys` controls whether the
// (possibly large) ambient polynomials are embedded.
std::string chain_to_json(const Chain& chain, bool include_polys);

std::string strategy_name(Strategy s);
std::string step_check_name(StepCheck c);

}  // namespace normone
