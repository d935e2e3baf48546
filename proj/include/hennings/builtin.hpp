// The two example algebras: the cyclic family over Z_k and the
// Kac-Paljutkin algebra graded by Z_2.
#pragma once

#include <string>

#include "hennings/hopf.hpp"

namespace hennings {

struct CyclicParams {
  std::size_t k = 1;
  std::size_t l = 1;
  std::size_t d = 0;
};

/// Grade a^p has basis g^{ik+p}, i = 0..l-1, inside Z_{kl} = <g>. Group-like
/// coproduct, trivial crossing and R_d = (1/l) sum w^{-ij} g^{ik} (x) g^{djk}
/// with w = zeta_l. Throws AlgebraError unless d < l.
HopfGAlgebra build_cyclic(const CyclicParams& p);

/// Basis index a + 2b + 4c stands for x^a y^b z^c in every grade.
HopfGAlgebra build_kac_paljutkin();

/// "cyclic:k=2,l=3,d=1" or "kac-paljutkin". Throws AlgebraError.
HopfGAlgebra parse_builtin_algebra(const std::string& name);
bool is_builtin_algebra_name(const std::string& name);

}  // namespace hennings
