#pragma once

// Canonical JSON forms. Big integers are decimal strings; terms are sorted
// by (length, lex) for classes and in the pinned monomial order for
// polynomials, so equal values always serialize to identical bytes.

#include <json.hpp>

#include "schubert/cohomology.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/ktheory.hpp"
#include "schubert/poly.hpp"
#include "schubert/polyring.hpp"
#include "schubert/table.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const CohClass& c);
CohClass coh_class_from_json(const Json& j);

Json to_json(const KClass& c);
KClass k_class_from_json(const Json& j);

Json to_json(const GrassIndex& I);
Json to_json(const Partition& p);
Json to_json(const HilbertPoly& p);
Json to_json(const OperatorMatrix& m);

/// {"theory", "window", "entries": [[v, w, [[x, "c"], …]], …]} over the
/// computed pairs v ≤ w (indices into SymmetricGroup::get(n)).
Json table_to_json(ProductTable& table);
/// Installs every entry of `j` into the matching process-wide table and
/// returns it. Throws DomainError on malformed payloads.
ProductTable& table_from_json(const Json& j);

}  // namespace schubert
