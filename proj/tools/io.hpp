#pragma once

#include "conelab/cones.hpp"
#include "conelab/eisenstein.hpp"
#include "conelab/lattice.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace conelab::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError carrying "source:line:column" on malformed text.
Json parse_text(std::string_view text, const std::string& source);
Json read_file(const std::string& path);

// Integers are JSON integers or decimal strings; rationals may also be "p/q".
Int int_from_json(const Json& j, const std::string& where);
Rational rational_from_json(const Json& j, const std::string& where);
IntVector int_vector_from_json(const Json& j, const std::string& where);
RatVector rational_vector_from_json(const Json& j, const std::string& where);
IntMatrix int_matrix_from_json(const Json& j, const std::string& where);
RatMatrix rational_matrix_from_json(const Json& j, const std::string& where);

/// {"rank": n, "gram": [[...]], "labels": [...]}.
IntegralLattice lattice_from_json(const Json& j);
/// {"matrix": [[...]]}.
IntMatrix matrix_from_json(const Json& j);
/// {"maps": [matrix, ...]}.
std::vector<RatMatrix> maps_from_json(const Json& j);
std::vector<IntMatrix> integer_maps_from_json(const Json& j);
/// {"form": [a, d, h0, h1]} or a bare array.
HermitianForm form_from_json(const Json& j);
/// {"ambient_dim": n, "generators": [[...]]}.
RationalCone cone_from_json(const Json& j);
/// {"samples": [[...]]}.
std::vector<RatVector> samples_from_json(const Json& j);

/// "1,-2,3".
IntVector parse_int_list(const std::string& text, const std::string& where);

/// Machine-sized integers as numbers, larger ones as decimal strings.
Json to_json(const Int& x);
/// Integral values as integers, others as "p/q".
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const HermitianForm& f);
Json to_json(const UnimodularTransform& g);

}  // namespace conelab::io
