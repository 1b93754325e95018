#pragma once

// Cross-checks of the fast paths against the brute-force oracles on one
// instance. Meant for small matrices (d <= 3, n <= 6, small entries).

#include "gkz/json_io.hpp"
#include "gkz/normality.hpp"

#include <optional>

namespace gkz {

/// {"checks": [{"check", "ok", "detail"}], "ok": bool}. The matrix must
/// already satisfy ZA = Z^d.
Json verify_instance(const IntMatrix& a, const std::optional<Parameter>& beta, const NormalityOptions& options);

}  // namespace gkz
