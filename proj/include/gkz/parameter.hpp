#pragma once

// Parameter arithmetic: facet value classes, the coset test
// beta in CF + Z^d, coset classes, strong resonance and the constructive
// parameters gamma, lambda and beta'.

#include "gkz/cone.hpp"
#include "gkz/lattice.hpp"
#include "gkz/normality.hpp"
#include "gkz/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkz {

enum class HClass { NatInt, NegInt, NonInt };

std::string_view to_string(HClass c);

HClass classify(const GaussRat& value);
HClass classify_h(const SupportFn& h, std::span<const GaussRat> beta);

/// Some lambda in CF with beta - lambda in Z^d; lambda = beta when beta is
/// already in CF.
std::optional<Parameter> in_CF_plus_Zd(const Cone& cone, std::size_t face, std::span<const GaussRat> beta);

struct CosetClass {
  Parameter representative;  // in CF, beta - representative in Z^d
  LatticeBasis modulus;      // ZF
};

/// The classes lambda + ZF with lambda in CF and beta - lambda in Z^d.
/// Throws NotInCoset when there are none.
std::vector<CosetClass> coset_classes(const Cone& cone, std::size_t face, std::span<const GaussRat> beta);

/// [Z^d ∩ CF : ZF]
Integer saturation_index(const Cone& cone, std::size_t face);

/// No facet value h_G(beta) is a negative integer.
bool not_strongly_resonant(const Cone& cone, std::span<const GaussRat> beta);

/// gamma in Z^d with h_G(gamma) > 0 when h_G(beta) is NatInt, < 0 when
/// NegInt, and != 0 (positive whenever possible) when NonInt.
IntVector find_gamma(const Cone& cone, std::span<const GaussRat> beta);

/// Description of the first violated gamma condition, if any.
std::optional<std::string> check_gamma(const Cone& cone, std::span<const GaussRat> beta, std::span<const Integer> gamma);

/// How find_lambda treats a facet F' of F whose value h_F'(lambda) is an
/// integer while the facets G of A with G ∩ F = F' disagree in class.
enum class LambdaPolicy {
  Strict,          // no admissible lambda exists: throw LambdaInfeasible
  MixedNonneg,     // put h_F'(lambda) in N
  MixedNegative,   // put h_F'(lambda) in Z_{<0}
};

/// lambda in CF ∩ (beta + Z^d) such that for every facet F' of F, an N
/// (resp. Z_{<0}) value h_F'(lambda) forces h_G(beta) in N (resp. Z_{<0})
/// for all facets G of A with G ∩ F = F'. Under a non-strict policy, facets
/// F' with disagreeing G get the sign the policy names instead.
///
/// The empty face yields lambda = 0. Throws NotInCoset, and LambdaInfeasible
/// when the required sign pattern has no realisation in ZF.
Parameter find_lambda(const NormalCone& cone, std::size_t face, std::span<const GaussRat> beta,
                      LambdaPolicy policy = LambdaPolicy::Strict);

/// Description of the first violated lambda condition, if any. Checks
/// lambda in CF, beta - lambda in Z^d and both implications.
std::optional<std::string> check_lambda(const Cone& cone, std::size_t face, std::span<const GaussRat> beta,
                                        std::span<const GaussRat> lambda);

/// For each facet F' of F (in face_basis order): the facets G of A with G ∩ F = F'.
std::vector<std::vector<std::size_t>> facets_over(const Cone& cone, std::size_t face);

/// beta' in -beta + Z^d with h_G(beta') in N iff h_G(beta) in Z_{<0} for every facet G.
Parameter dual_parameter(const Cone& cone, std::span<const GaussRat> beta);

std::optional<std::string> check_dual(const Cone& cone, std::span<const GaussRat> beta, std::span<const GaussRat> dual);

}  // namespace gkz
