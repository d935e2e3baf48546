// Evaluation of the invariant on colored Kirby diagrams.
#pragma once

#include <string>
#include <vector>

#include "hennings/integrals.hpp"
#include "hennings/kirby.hpp"

namespace hennings {

/// Raised when grades fail to telescope to 1 along a component, or when the
/// integrals are not normalised.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvariantValue {
  CycloScalar value;
  CycloScalar bracket;
  /// |L1| - |L2|; value = dim(H_1)^exponent * bracket.
  long exponent = 0;
};

/// Contracts the tensors assigned by dots and crossings along every
/// undotted component, applies lambda and normalises.
InvariantValue evaluate(const HopfGAlgebra& h, const IntegralData& in, const ColoredDiagram& cd);

struct SummedValue {
  CycloScalar total;
  std::vector<GroupHom> homs;
  std::vector<InvariantValue> values;
};

/// Sum of evaluate over every flat connection, in lexicographic order.
SummedValue evaluate_summed(const HopfGAlgebra& h, const IntegralData& in, const KirbyDiagram& d);

struct ConnectedSumReport {
  InvariantValue a;
  InvariantValue b;
  InvariantValue combined;
  bool equal = false;
};

ConnectedSumReport connected_sum_check(const HopfGAlgebra& h, const IntegralData& in, const KirbyDiagram& da,
                                       const KirbyDiagram& db, const GroupHom& hom_a, const GroupHom& hom_b);

}  // namespace hennings
