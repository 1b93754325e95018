#include "gkz/fourier_motzkin.hpp"

#include "gkz/error.hpp"

#include <map>

namespace gkz {

namespace {

// a . x >= b, a primitive (or zero).
struct Row {
  IntVector a;
  Rational b;
};

using System = std::map<IntVector, Rational>;  // coefficients -> tightest bound

// Returns false if the row is the contradiction 0 >= b with b > 0.
bool insert(System& system, Row row) {
  Integer g = gcd(row.a);
  if (g == 0) return row.b <= 0;
  if (g != 1) {
    for (auto& c : row.a) c /= g;
    row.b /= Rational(g);
  }
  auto [it, inserted] = system.try_emplace(std::move(row.a), row.b);
  if (!inserted && it->second < row.b) it->second = row.b;
  return true;
}

Rational pick_value(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if ((!lo || *lo <= 0) && (!hi || *hi >= 0)) return 0;
  if (lo && *lo > 0) {
    Rational c(ceil(*lo));
    if (!hi || c <= *hi) return c;
    return *lo;
  }
  Rational c(floor(*hi));
  if (!lo || c >= *lo) return c;
  return *hi;
}

}  // namespace

std::optional<RatVector> rational_lp_feasible(std::size_t dimension,
                                              const std::vector<LinearConstraint>& constraints) {
  // levels[k] holds constraints in variables x_0 .. x_{k-1}.
  std::vector<System> levels(dimension + 1);
  for (const auto& c : constraints) {
    if (c.coefficients.size() != dimension)
      fail(ErrorKind::InvalidInput, "rational_lp_feasible: constraint dimension mismatch");
    Row row{c.coefficients, Rational(c.bound)};
    if (c.relation == Relation::LessEqual) {
      for (auto& v : row.a) v = -v;
      row.b = -row.b;
    }
    if (!insert(levels[dimension], std::move(row))) return std::nullopt;
  }

  for (std::size_t k = dimension; k > 0; --k) {
    const std::size_t var = k - 1;
    std::vector<const System::value_type*> positive, negative;
    System& next = levels[k - 1];
    for (const auto& entry : levels[k]) {
      const Integer& c = entry.first[var];
      if (c > 0) positive.push_back(&entry);
      else if (c < 0) negative.push_back(&entry);
      else if (!insert(next, Row{entry.first, entry.second})) return std::nullopt;
    }
    for (const auto* p : positive) {
      for (const auto* q : negative) {
        const Integer cp = p->first[var];
        const Integer cq = -q->first[var];
        Row combined{IntVector(dimension), Rational(cq) * p->second + Rational(cp) * q->second};
        for (std::size_t j = 0; j < dimension; ++j) combined.a[j] = cq * p->first[j] + cp * q->first[j];
        if (!insert(next, std::move(combined))) return std::nullopt;
      }
    }
  }

  RatVector x(dimension, 0);
  for (std::size_t k = 1; k <= dimension; ++k) {
    const std::size_t var = k - 1;
    std::optional<Rational> lo, hi;
    for (const auto& [a, b] : levels[k]) {
      const Integer& c = a[var];
      if (c == 0) continue;
      Rational rest = b;
      for (std::size_t j = 0; j < var; ++j) rest -= Rational(a[j]) * x[j];
      Rational limit = rest / Rational(c);
      if (c > 0) {
        if (!lo || limit > *lo) lo = limit;
      } else {
        if (!hi || limit < *hi) hi = limit;
      }
    }
    if (lo && hi && *lo > *hi) fail(ErrorKind::Internal, "Fourier-Motzkin back substitution inconsistent");
    x[var] = pick_value(lo, hi);
  }
  return x;
}

}  // namespace gkz
