#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nestbraid/arrangement.hpp"

namespace nestbraid {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings "p/q" or "p"; plain JSON integers are also
/// accepted on input.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
VectorQ vector_from_json(const Json& j);
Json to_json(const VectorQ& v);

/// A cyclotomic scalar is either a rational or {"order": m, "coeffs": [...]}
/// with coefficients of 1, z, z^2, ...; any length, reduced modulo the m-th
/// cyclotomic polynomial.
Cyclotomic cyclotomic_from_json(const Json& j);
Json to_json(const Cyclotomic& c);
VectorCyc cyclotomic_vector_from_json(const Json& j);
Json to_json(const VectorCyc& v);

Json to_json(const Subspace& s);

/// {"dim": n, "normals": [[...], ...], "gram"?: [[...]], "offsets"?: [...],
///  "essentialize"?: bool}. Nonzero offsets are rejected: only central
/// arrangements are supported.
Arrangement load_arrangement(const Json& doc);
Arrangement load_arrangement_file(const std::string& path);
Json to_json(const Arrangement& a);

Json parse_json_file(const std::string& path);

}  // namespace nestbraid
