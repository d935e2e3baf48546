// Exhaustive verification of the Hopf G-algebra, crossing and R-matrix laws.
#pragma once

#include <string>
#include <vector>

#include "hennings/hopf.hpp"

namespace hennings {

struct AxiomResult {
  std::string name;
  bool passed = true;
  /// First violating basis tuple with both sides, empty when passed.
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_passed() const;
  /// nullptr when the axiom was not checked.
  const AxiomResult* find(const std::string& name) const;
};

/// Checks, in this order: HG1..HG9, involutive, CHG1..CHG4, QHG1..QHG4,
/// QYB and R-inverse. Every check loops over all basis tuples in
/// lexicographic order and keeps the first failure.
AxiomReport verify_axioms(const HopfGAlgebra& h);

std::string format_report(const AxiomReport& report);

}  // namespace hennings
