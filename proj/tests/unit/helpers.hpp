#pragma once

#include "gkz/error.hpp"
#include "gkz/scalar.hpp"

#include "doctest.h"

#include <string>

namespace gkz::testing {

inline GaussRat q(long p, long d = 1) { return GaussRat(Rational(p, d)); }

inline Parameter params(std::initializer_list<GaussRat> xs) { return Parameter(xs); }

inline IntVector ints(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.push_back(x);
  return out;
}

template <typename F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a gkz::Error");
  return ErrorKind::Internal;
}

}  // namespace gkz::testing
