#pragma once

// Group algebra decompositions of Jacobians of surfaces with D_n-action.

#include <optional>
#include <set>
#include <vector>

#include "dihedra/correspondence.hpp"
#include "dihedra/dihedral_core.hpp"
#include "dihedra/signatures.hpp"

namespace dihedra {

enum class FactorKind { JQuotient, B2, B3, B4, Bq };

struct Factor {
  FactorKind kind = FactorKind::JQuotient;
  Int q = 0;  // only for Bq
  Int dim = 0;
  Int multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Formal product of factors in canonical order (J, B2, B3, B4, B(q) by q).
struct IsogenyDecomposition {
  Int n = 3;
  std::vector<Factor> factors;

  Int total_dimension() const;
  friend bool operator==(const IsogenyDecomposition&, const IsogenyDecomposition&) = default;
};

/// Every factor of the full decomposition with its dimension (zero allowed);
/// B(q) carries multiplicity 2.
std::vector<Factor> component_dimensions(const GeometricSignature& gs);

IsogenyDecomposition full_decomposition(const GeometricSignature& gs);

/// Decomposition of J(S/H).
IsogenyDecomposition quotient_decomposition(const GeometricSignature& gs, const SubgroupId& h);

/// Decomposition of the Prym variety of S/H -> S/K; factors of dimension 0
/// are omitted.
IsogenyDecomposition prym_decomposition(const GeometricSignature& gs, const SubgroupId& h, const SubgroupId& k);

/// Genus of S/H by Riemann-Hurwitz for S/H -> S/D_n.
Int quotient_genus(const GeometricSignature& gs, const SubgroupId& h);

/// lcm of the elements of Q dividing q, other than q itself (1 if none).
Int L_function(const std::set<Int>& Q, Int q);

/// Divisors t of n outside {1, 2} with <V, rho^{n/t}> >= 1.
std::set<Int> q_theta(const AnalyticCharacter& v);

struct PrymRealization {
  Int q = 0;
  SubgroupId cover;  // H
  SubgroupId base;   // K, with H < K

  friend bool operator==(const PrymRealization&, const PrymRealization&) = default;
};

/// A pair H < K with B(q) ~ P(S/H -> S/K). Odd n, or n a power of 2 with q >= 4.
std::optional<PrymRealization> prym_realization(const GeometricSignature& gs, Int q);

bool is_prym_affordable_group(Int n);

struct ClassificationRow {
  Int genus = 0;
  GeometricSignature geosig;
  IsogenyDecomposition decomposition;
};

/// Largest genus a completely decomposable action of D_n can have.
Int complete_decomposition_genus_bound(Int n);

std::vector<ClassificationRow> classify_complete(Int n, int jobs = 1);

std::vector<ClassificationRow> classify_k_decompositions(Int n, Int k, Int genus_bound, int jobs = 1);

}  // namespace dihedra
