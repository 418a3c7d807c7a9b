#pragma once

// Existence of dihedral actions with given branching data.

#include <string>
#include <utility>
#include <vector>

#include "dihedra/correspondence.hpp"
#include "dihedra/generating_vector.hpp"
#include "dihedra/signatures.hpp"

namespace dihedra {

/// Decision with a stable identifier naming the first failed condition
/// (empty when ok).
struct Verdict {
  bool ok = false;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

Verdict is_realizable(const GeometricSignature& gs, bool allow_low_genus = false);

/// Explicit generating vector; NoAction when gs is not realizable.
GeneratingVector generating_vector(const GeometricSignature& gs, bool allow_low_genus = false);

Verdict is_analytic_representation(const AnalyticCharacter& v, bool allow_low_genus = false);

/// The actions whose analytic representation is irreducible.
std::vector<std::pair<Int, GeometricSignature>> irreducible_analytic_cases();

}  // namespace dihedra
