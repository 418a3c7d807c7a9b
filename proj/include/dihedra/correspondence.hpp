#pragma once

// Geometric signatures <-> analytic representations.

#include <vector>

#include "dihedra/dihedral_core.hpp"
#include "dihedra/signatures.hpp"

namespace dihedra {

/// Multiplicities of the irreducibles of D_n in a representation.
struct AnalyticCharacter {
  Int n = 3;
  std::vector<Int> psi;  // psi[j-1] = <V, psi_j>; two entries for odd n, four for even n
  std::vector<Int> nu;   // nu[h-1] = <V, rho^h>, h = 1..rho_range(n)

  static AnalyticCharacter zero(Int n);

  Int mu(int j) const;
  Int rho(Int h) const;
  Int multiplicity(const IrrepId& v) const;
  void set(const IrrepId& v, Int value);

  /// sum of multiplicity * degree.
  Int dimension() const;
  bool has_negative() const;

  friend bool operator==(const AnalyticCharacter&, const AnalyticCharacter&) = default;
};

AnalyticCharacter analytic_from_geosig(const GeometricSignature& gs);

/// Phi_V(q).
Int presignature(const AnalyticCharacter& v, Int q);
IntegerFunction presignature_table(const AnalyticCharacter& v);

GeometricSignature geosig_from_analytic(const AnalyticCharacter& v);

/// <rho_r, V> = 2 d_V (gamma - 1) + sum_k (d_V - d_V^{G_k}), from fixed-point data.
Int rational_rep_multiplicity(const GeometricSignature& gs, const IrrepId& v);

}  // namespace dihedra
