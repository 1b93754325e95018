#pragma once

// JSON encodings. Integers and rationals travel as canonical strings
// ("p" or "p/q"), a non-real Gaussian rational as {"re": ..., "im": ...};
// indices, ranks and degrees are plain numbers. Object keys are sorted, so
// equal values always serialise to equal bytes.

#include "gkz/cone.hpp"
#include "gkz/int_matrix.hpp"
#include "gkz/scalar.hpp"

#include "json.hpp"

namespace gkz {

using Json = nlohmann::json;

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const GaussRat& v);
Json to_json(std::span<const Integer> v);
Json to_json(std::span<const Rational> v);
Json to_json(std::span<const GaussRat> v);
Json to_json(const IntMatrix& m);  // list of rows
Json columns_json(const ColumnSet& c);

/// Accepts JSON integers, "p/q" strings and {"re", "im"} objects.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
GaussRat gauss_from_json(const Json& j);
Parameter parameter_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
/// Sorted, duplicate-free column indices.
ColumnSet columns_from_json(const Json& j);

}  // namespace gkz
