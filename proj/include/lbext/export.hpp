#pragma once

#include <string>

#include <json.hpp>

#include "lbext/conjugacy.hpp"

namespace lbext {

using Document = nlohmann::ordered_json;

// Key order in every document is fixed, so dump() output is byte-stable.

Document to_document(const FreeAut& phi);    // {"n", "images"}
Document to_document(const PCForm& form);    // {"n", "pi", "signs", "conjugators"}
Document to_document(const ClosureInvariant& inv);  // {"n", "components", "cycles", "sigma_parity"}
Document to_document(const ConjugacyVerdict& verdict);  // {"verdict", "witness"?, "invariant"?, "values"?, "radius"}
Document to_document(const TauNormalForm& nf);  // {"pi_tau", "alpha"}

/// Tab-separated table: family, relation, indices, status.
std::string relation_table(const RelationReport& report);

/// Inverse of to_document for the free-group documents. Throws Error on
/// malformed input.
FreeAut free_aut_from_document(const Document& doc);
PCForm pc_form_from_document(const Document& doc);

}  // namespace lbext
