#pragma once

// JSON documents for algebras, elements, operators, order-isomorphism forms
// and sampling reports.
//
//   algebra   {"factors": [{"kind": "real"}, {"kind": "sym", "n": 3}, ...]}
//   element   [c0, c1, ...]            or {"coords": [...]}
//   operator  {"rows": r, "cols": c, "data": [row-major entries]}
//   form      {"domain": algebra, "codomain": algebra,
//              "sigma": [[i, j], ...], "f_p": [map, ...],
//              "y": element | null, "J": operator | null}
//   map       {"kind": "power", "alpha": a}
//             {"kind": "piecewise_linear", "points": [[t, f], ...]}
//             {"kind": "chain", "stages": [map, ...]}

#include <string>

#include <json.hpp>

#include "jordan/algebra.hpp"
#include "jordan/monotone.hpp"
#include "jordan/order_maps.hpp"
#include "jordan/spectral.hpp"
#include "jordan/structure.hpp"
#include "jordan/verify.hpp"

namespace jordan::io {

using Json = nlohmann::json;

Json to_json(const FactorDescriptor& f);
Json to_json(const Algebra& a);
Json to_json(const Element& x);
Json to_json(const LinearOperator& t);
Json to_json(const MonotoneBijection& m);
Json to_json(const OrderIsoForm& f);
Json to_json(const SpectralDecomposition& d);
Json to_json(const Decomposition& d);
Json to_json(const SampleReport& r);

AlgebraPtr algebra_from_json(const Json& j);
Element element_from_json(const Json& j, const AlgebraPtr& a);
LinearOperator operator_from_json(const Json& j, const AlgebraPtr& domain, const AlgebraPtr& codomain);
MonotoneBijection monotone_from_json(const Json& j);
OrderIsoForm form_from_json(const Json& j);

/// Parses a file; throws FormatError on I/O or syntax errors.
Json load_file(const std::string& path);

}  // namespace jordan::io
