#pragma once

// JSON forms of certificates, derived witnesses and rank reports. Derivations
// and polynomials are embedded as strings in the text grammar; the dimension
// comes from the spec key, so documents round-trip exactly.
//
// Expression nodes:
//   {"kind": "leaf", "claim": "in_spec", "spec": "ms(2,1)", "derivation": "..."}
//   {"kind": "leaf", "claim": "given", "derivation": "..."}
//   {"kind": "bracket", "left": node, "right": node}
//   {"kind": "lincomb", "terms": [{"scalar": "1/2", "expr": node}, ...]}

#include <stdexcept>

#include "json.hpp"

#include "derlie/certificate.hpp"
#include "derlie/modrank.hpp"

namespace derlie {

/// Structurally invalid JSON document (missing keys, wrong kinds, ...).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json expr_to_json(const BracketExpr& expr);
ExprPtr expr_from_json(const nlohmann::json& j, std::size_t n);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const DerivedWitness& w);
DerivedWitness witness_from_json(const nlohmann::json& j);

/// Pivot indices are emitted 1-based, matching x1/d1 in the grammar.
nlohmann::json rank_report_to_json(const RankReport& r);

}  // namespace derlie
