#include "nestbraid/io.hpp"

#include <fstream>

#include "nestbraid/errors.hpp"

namespace nestbraid {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InvalidInput("expected a rational string, got " + j.dump());
}

Json to_json(const Rational& r) { return to_string(r); }

VectorQ vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals, got " + j.dump());
  VectorQ v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const VectorQ& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (!j.is_object()) return Cyclotomic(rational_from_json(j));
  if (!j.contains("order") || !j.contains("coeffs"))
    throw InvalidInput("cyclotomic entry needs 'order' and 'coeffs'");
  if (!j["order"].is_number_integer()) throw InvalidInput("cyclotomic order must be an integer");
  const int m = j["order"].get<int>();
  if (m < 1) throw InvalidInput("cyclotomic order must be positive");
  VectorQ c = vector_from_json(j["coeffs"]);
  return Cyclotomic(m, c);
}

Json to_json(const Cyclotomic& c) {
  Rational q;
  if (c.is_rational(&q)) return to_string(q);
  return Json{{"order", c.order()}, {"coeffs", to_json(VectorQ(c.coeffs()))}};
}

VectorCyc cyclotomic_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array, got " + j.dump());
  VectorCyc v;
  for (const auto& x : j) v.push_back(cyclotomic_from_json(x));
  return v;
}

Json to_json(const VectorCyc& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& r : s.basis_vectors()) rows.push_back(to_json(r));
  return Json{{"dim", s.dim()}, {"basis", rows}};
}

Arrangement load_arrangement(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("normals"))
    throw InvalidInput("arrangement JSON needs 'dim' and 'normals'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0)
    throw InvalidInput("'dim' must be a positive integer");
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc["normals"].is_array()) throw InvalidInput("'normals' must be an array");
  std::vector<VectorQ> normals;
  for (const auto& n : doc["normals"]) {
    normals.push_back(vector_from_json(n));
    if (normals.back().size() != dim)
      throw InvalidInput("normal " + n.dump() + " does not have length " + std::to_string(dim));
  }
  if (doc.contains("offsets")) {
    const auto& off = doc["offsets"];
    if (!off.is_array() || off.size() != normals.size())
      throw InvalidInput("'offsets' must have one entry per normal");
    for (const auto& o : off)
      if (!is_zero(rational_from_json(o)))
        throw InvalidInput("non-central arrangement: hyperplane offset " + o.dump() + " is nonzero");
  }
  MatrixQ gram;
  if (doc.contains("gram")) {
    std::vector<VectorQ> rows;
    for (const auto& r : doc["gram"]) rows.push_back(vector_from_json(r));
    if (rows.size() != dim) throw InvalidInput("'gram' must be dim x dim");
    gram = MatrixQ::from_rows(rows, dim);
  }
  Arrangement a = Arrangement::from_normals(dim, normals, gram);
  if (doc.value("essentialize", false)) a = a.essentialize();
  return a;
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
  }
}

Arrangement load_arrangement_file(const std::string& path) {
  return load_arrangement(parse_json_file(path));
}

Json to_json(const Arrangement& a) {
  Json normals = Json::array();
  for (const auto& h : a.hyperplanes()) normals.push_back(to_json(h.normal));
  Json gram = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) gram.push_back(to_json(a.gram().row(i)));
  return Json{{"dim", a.dim()}, {"normals", normals}, {"gram", gram}, {"essential", a.essential()}};
}

}  // namespace nestbraid
