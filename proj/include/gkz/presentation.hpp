#pragma once

// GKZ presentation data (Euler operators, lattice and toric ideal
// generators) and the symbolic answers for restriction and projection of a
// normal GKZ system to a face coordinate subspace, plus the holonomic dual
// parameter.

#include "gkz/groebner.hpp"
#include "gkz/normality.hpp"
#include "gkz/orbits.hpp"
#include "gkz/parameter.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace gkz {

struct EulerOperator {
  std::size_t row = 0;
  IntVector coefficients;  // sum_j a_ij x_j d_j
  GaussRat beta;
};

std::vector<EulerOperator> euler_operators(const IntMatrix& a, std::span<const GaussRat> beta);

/// d^{u_plus} - d^{u_minus}
struct BinomialGenerator {
  IntVector u_plus;
  IntVector u_minus;
};

/// One binomial per vector of the saturated kernel basis.
std::vector<BinomialGenerator> lattice_ideal_generators(const IntMatrix& a);

/// Reduced graded reverse lexicographic Groebner basis of the toric ideal,
/// obtained by saturating the lattice ideal at the product of all variables.
std::vector<BinomialGenerator> toric_ideal_generators(const IntMatrix& a, const GroebnerCaps& caps = {});

enum class RestrictionMode { Default, AsPrinted };

std::string_view to_string(RestrictionMode mode);

/// M_F(lambda) ⊗ ⋀C^{d_{A/F}} placed so that its degrees are -k - shift,
/// or zero.
struct ModuleDescriptor {
  bool zero = true;
  std::size_t face = 0;
  std::optional<Parameter> lambda;
  std::size_t exterior_rank = 0;
  long shift = 0;

  /// (degree, multiplicity C(d_{A/F}, k)) in increasing degree.
  std::vector<std::pair<long, Integer>> degrees() const;
};

/// pi_{F+} M_A(beta): nonzero iff beta in CF + Z^d and h_G(beta) in Z_{<0}
/// for every facet G containing F; shift n_{A/F} - d_{A/F}.
ModuleDescriptor projection(const NormalCone& cone, std::size_t face, std::span<const GaussRat> beta);

/// i_F^+ M_A(beta), shift -n_{A/F}. Default mode requires h_G(beta) in N for
/// every facet G containing F; AsPrinted uses the Z_{<0} condition verbatim.
ModuleDescriptor restriction(const NormalCone& cone, std::size_t face, std::span<const GaussRat> beta,
                             RestrictionMode mode = RestrictionMode::Default);

/// i_F^+ of the inverse Fourier-Laplace transform: projection's condition and
/// lambda, shift -d_{A/F}.
ModuleDescriptor transformed_restriction(const NormalCone& cone, std::size_t face, std::span<const GaussRat> beta);

struct DualSystem {
  Parameter beta_prime;
  RatVector homogenizing;  // c with <c, a_i> = 1
  OrbitSet fsupp_dual;     // equals cofsupp(beta)
  OrbitSet cofsupp_dual;   // equals fsupp(beta)
};

/// Throws NotHomogeneous.
DualSystem dual_system(const NormalCone& cone, std::span<const GaussRat> beta);

}  // namespace gkz
