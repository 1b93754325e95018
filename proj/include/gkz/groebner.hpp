#pragma once

// Buchberger's algorithm for pure-difference binomial ideals (x^a - x^b),
// the only kind toric and lattice ideals need. Reducing a binomial reduces
// each of its two monomials independently, so no coefficients are stored.

#include <chrono>
#include <cstddef>
#include <vector>

namespace gkz {

using Exponent = std::vector<long>;

/// Graded reverse lexicographic order, optionally refined into a block
/// order: the last `eliminate` variables are compared first (degree, then
/// reverse lex inside the block), which makes them an elimination block.
struct MonomialOrder {
  std::size_t eliminate = 0;

  /// true iff a < b
  bool less(const Exponent& a, const Exponent& b) const;
};

struct Binomial {
  Exponent lead;   // larger monomial
  Exponent trail;  // smaller monomial

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// x^a - x^b oriented by the order; nothing when a == b.
bool make_binomial(Exponent a, Exponent b, const MonomialOrder& order, Binomial& out);

struct GroebnerCaps {
  std::size_t max_spairs = 10000;
  std::chrono::duration<double> time_cap = std::chrono::seconds(30);
};

struct GroebnerStats {
  std::size_t spairs = 0;
  std::size_t reductions_to_zero = 0;
};

/// Reduced Groebner basis, sorted by leading monomial. Throws ScaleLimit
/// when a cap is exceeded.
std::vector<Binomial> groebner_basis(const std::vector<Binomial>& generators, const MonomialOrder& order,
                                     const GroebnerCaps& caps = {}, GroebnerStats* stats = nullptr);

/// Normal form of a monomial modulo a binomial list (a Groebner basis for
/// a unique answer).
Exponent normal_form(Exponent m, const std::vector<Binomial>& basis);

/// Whether x^a - x^b lies in the ideal of a Groebner basis.
bool in_ideal(const Exponent& a, const Exponent& b, const std::vector<Binomial>& basis);

}  // namespace gkz
