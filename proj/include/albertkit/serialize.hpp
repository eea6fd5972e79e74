#pragma once

// JSON wire format for exact rational elements.
//
//   quaternion: {"backend": "matrix2", "coords": ["1", "0", "0", "1"]}
//               {"backend": "symbol", "a": "-1", "b": "-1", "coords": [...]}
//   octonion:   {"first": <quaternion>, "second": <quaternion>, "lambda": "1"}
//   albert:     {"diag": ["1", "0", "0"], "x": <octonion>, "y": ..., "z": ...}
//
// Rationals are strings ("3/2", "-4", "0.25"); plain JSON integers are accepted on input.

#include <json.hpp>

#include "albertkit/albert.hpp"

namespace albertkit {

using nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const QuaternionAlgebra<Rational>& alg);
json to_json(const Quaternion<Rational>& q);
json to_json(const Octonion<Rational>& o);
json to_json(const AlbertElement<Rational>& a);

// DomainError on malformed input.
Quaternion<Rational> quaternion_from_json(const json& j);
Octonion<Rational> octonion_from_json(const json& j);
AlbertElement<Rational> albert_from_json(const json& j);

// Reads a JSON document from a file; DomainError if missing or malformed.
json read_json_file(const std::string& path);

}  // namespace albertkit
