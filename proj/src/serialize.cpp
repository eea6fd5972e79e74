#include "albertkit/serialize.hpp"

#include <fstream>

namespace albertkit {
namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("expected a rational string, got " + j.dump());
}

json to_json(const QuaternionAlgebra<Rational>& alg) {
  json j;
  if (alg.backend() == QuaternionBackend::matrix2) {
    j["backend"] = "matrix2";
  } else {
    j["backend"] = "symbol";
    j["a"] = rational_to_json(alg.a());
    j["b"] = rational_to_json(alg.b());
  }
  return j;
}

json to_json(const Quaternion<Rational>& q) {
  json j = to_json(q.algebra());
  j["coords"] = json::array();
  for (const auto& c : q.coords()) j["coords"].push_back(rational_to_json(c));
  return j;
}

json to_json(const Octonion<Rational>& o) {
  return {{"first", to_json(o.first())}, {"second", to_json(o.second())}, {"lambda", rational_to_json(o.lambda())}};
}

json to_json(const AlbertElement<Rational>& a) {
  json diag = json::array();
  for (const auto& d : a.diag()) diag.push_back(rational_to_json(d));
  return {{"diag", diag}, {"x", to_json(a.x())}, {"y", to_json(a.y())}, {"z", to_json(a.z())}};
}

Quaternion<Rational> quaternion_from_json(const json& j) {
  const std::string backend = field(j, "backend", "quaternion").get<std::string>();
  QuaternionAlgebra<Rational> alg = QuaternionAlgebra<Rational>::matrix2(Rational(1));
  if (backend == "symbol") {
    alg = QuaternionAlgebra<Rational>::symbol(rational_from_json(field(j, "a", "quaternion")),
                                              rational_from_json(field(j, "b", "quaternion")));
  } else if (backend != "matrix2") {
    throw DomainError("quaternion: unknown backend \"" + backend + "\"");
  }
  const json& coords = field(j, "coords", "quaternion");
  if (!coords.is_array() || coords.size() != 4) throw DomainError("quaternion: coords must have 4 entries");
  return Quaternion<Rational>(alg, {rational_from_json(coords[0]), rational_from_json(coords[1]),
                                    rational_from_json(coords[2]), rational_from_json(coords[3])});
}

Octonion<Rational> octonion_from_json(const json& j) {
  return Octonion<Rational>(quaternion_from_json(field(j, "first", "octonion")),
                            quaternion_from_json(field(j, "second", "octonion")),
                            rational_from_json(field(j, "lambda", "octonion")));
}

AlbertElement<Rational> albert_from_json(const json& j) {
  const json& diag = field(j, "diag", "albert");
  if (!diag.is_array() || diag.size() != 3) throw DomainError("albert: diag must have 3 entries");
  return AlbertElement<Rational>(
      {rational_from_json(diag[0]), rational_from_json(diag[1]), rational_from_json(diag[2])},
      {octonion_from_json(field(j, "x", "albert")), octonion_from_json(field(j, "y", "albert")),
       octonion_from_json(field(j, "z", "albert"))});
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace albertkit
