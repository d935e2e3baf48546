// G-integrals, the dual integral on H_1, and the Drinfeld element.
#pragma once

#include <string>
#include <vector>

#include "hennings/hopf.hpp"

namespace hennings {

struct IntegralData {
  /// Lambda[a.index] is Lambda_a; the zero vector for grades of dimension 0.
  std::vector<GradedVector> Lambda;
  /// lambda(e_i) on the basis of H_1.
  SparseVec lambda;
  bool normalized = false;

  const GradedVector& at(GroupElement a) const { return Lambda.at(a.index); }
};

/// Solves for the two-sided G-integral and the integral of H_1^*, normalised
/// so that eps_1(Lambda_1) = 1 and lambda(Lambda_1) = 1, then re-verifies the
/// integral laws on every grade. Throws AlgebraError.
IntegralData solve_integrals(const HopfGAlgebra& h);

/// Empty when every left and right G-integral law holds, otherwise the first
/// violating basis element.
std::string check_integral_laws(const HopfGAlgebra& h, const IntegralData& in);

/// lambda(x); x must lie in H_1.
CycloScalar eval_lambda(const HopfGAlgebra& h, const IntegralData& in, const GradedVector& x);

struct DrinfeldData {
  GradedVector u;
  GradedVector u_inverse;
};

/// u = S(b_i) a_i for R = a_i (x) b_i, with u^{-1} = b_i S^2(a_i). Certifies
/// u u^{-1} = 1, u central in H_1, S(u) = u, eps(u) = 1 and
/// Delta(u) R21 R = u (x) u. Throws AlgebraError naming the failed identity.
DrinfeldData drinfeld_element(const HopfGAlgebra& h);

}  // namespace hennings
