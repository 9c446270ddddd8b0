#pragma once

#include "json.hpp"

#include "jacobson/algebra.hpp"
#include "jacobson/division.hpp"
#include "jacobson/ideal.hpp"
#include "jacobson/prufer.hpp"
#include "jacobson/simple_modules.hpp"
#include "jacobson/verify.hpp"
#include "jacobson/y_module.hpp"

namespace jacobson {

/// Ordered so printed objects keep the documented key order.
using Json = nlohmann::ordered_json;

// Scalars serialize as exact strings ("3/2", residues as decimal),
// polynomials as coefficient-string arrays low degree first, fields as
// "q" or "fp:<p>". Every to_json below round-trips through its *_from_json
// partner; containers that need a field take it as a parameter.

Json to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

Json to_json(const Scalar& k);
Scalar scalar_from_json(const Json& j, const FieldSpec& field);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, const FieldSpec& field);

Json to_json(const Element& e);
Element element_from_json(const Json& j);

Json to_json(const VfElement& m);
VfElement vf_from_json(const Json& j);

Json to_json(const RwElement& m);
RwElement rw_from_json(const Json& j);

Json to_json(const MnElement& m);
MnElement mn_from_json(const Json& j);

Json to_json(const UfElement& u);
UfElement uf_from_json(const Json& j);

Json to_json(const YElement& y);
YElement y_from_json(const Json& j);

Json to_json(const DivisionResult& d);
Json to_json(const GfCoordinates& c);
Json to_json(const RwSolution& s);
Json to_json(const SocleDecomposition& d);
Json to_json(const IdealClassification& c);
Json to_json(const VerifyReport& r);

}  // namespace jacobson
