#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weylcoinv/polynomial.hpp"
#include "weylcoinv/rootsystem.hpp"

namespace weylcoinv {

// Deterministic JSON encodings. Polynomials serialize as
//   {"arity": n, "terms": [{"exp": [..], "coeff": "p/q"}, ..]}
// with terms sorted descending in grevlex so identical inputs yield
// byte-identical output.
using Json = nlohmann::ordered_json;

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json root_system_to_json(const RootSystem& rs);

std::string dump_deterministic(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace weylcoinv
