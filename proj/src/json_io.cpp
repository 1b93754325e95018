#include "gkz/json_io.hpp"

#include "gkz/error.hpp"

#include <algorithm>

namespace gkz {

Json to_json(const Integer& v) { return to_string(v); }
Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const GaussRat& v) {
  if (v.is_real()) return to_string(v.re());
  return Json{{"re", to_string(v.re())}, {"im", to_string(v.im())}};
}

Json to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(std::span<const GaussRat> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json columns_json(const ColumnSet& c) {
  Json out = Json::array();
  for (auto i : c) out.push_back(i);
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  Rational r = rational_from_json(j);
  if (r.get_den() != 1) fail(ErrorKind::InvalidInput, "expected an integer, got " + j.dump());
  return r.get_num();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::InvalidInput, "expected an integer or a \"p/q\" string, got " + j.dump());
}

GaussRat gauss_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("re") || !j.contains("im") || j.size() != 2)
      fail(ErrorKind::InvalidInput, "a complex entry needs exactly the keys \"re\" and \"im\"");
    return GaussRat(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
  }
  return GaussRat(rational_from_json(j));
}

Parameter parameter_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "beta must be a list");
  Parameter out;
  for (const auto& x : j) out.push_back(gauss_from_json(x));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::InvalidInput, "A must be a nonempty list of rows");
  std::vector<IntVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::InvalidInput, "every row of A must be a list");
    IntVector r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    if (!rows.empty() && r.size() != rows.front().size())
      fail(ErrorKind::InvalidInput, "the rows of A have different lengths");
    rows.push_back(std::move(r));
  }
  if (rows.front().empty()) fail(ErrorKind::InvalidInput, "A has no columns");
  return IntMatrix::from_rows(rows, rows.front().size());
}

ColumnSet columns_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "a face must be a list of column indices");
  ColumnSet out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      fail(ErrorKind::InvalidInput, "column indices are nonnegative integers (0-based)");
    out.push_back(x.get<std::size_t>());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gkz
