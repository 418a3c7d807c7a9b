#pragma once

// Signatures and geometric signatures of dihedral actions.

#include <compare>
#include <vector>

#include "dihedra/divisor_lattice.hpp"

namespace dihedra {

/// (gamma; <s>^a, <sr>^b, C_1, ..., C_v) with C_j = <r^{n/m_j}>. For odd n only
/// t = a + b is meaningful and the canonical form has b = 0.
struct GeometricSignature {
  Int n = 2;
  Int gamma = 0;
  Int a = 0;
  Int b = 0;
  std::vector<Int> periods;  // ascending, each m | n with m >= 2

  Int t() const noexcept { return a + b; }

  friend bool operator==(const GeometricSignature&, const GeometricSignature&) = default;
  friend auto operator<=>(const GeometricSignature&, const GeometricSignature&) = default;
};

struct PlainSignature {
  Int gamma = 0;
  std::vector<Int> periods;  // ascending

  friend bool operator==(const PlainSignature&, const PlainSignature&) = default;
  friend auto operator<=>(const PlainSignature&, const PlainSignature&) = default;
};

/// Validates the fields and returns the canonical form.
GeometricSignature make_geometric_signature(Int n, Int gamma, Int a, Int b, std::vector<Int> periods);
GeometricSignature canonical(const GeometricSignature& gs);

PlainSignature make_plain_signature(Int gamma, std::vector<Int> periods);
PlainSignature plain_signature(const GeometricSignature& gs);

/// 2g - 2 from Riemann-Hurwitz with |G| = 2n; may be odd or below -2.
Int twice_genus_minus_two(const GeometricSignature& gs);

/// Genus of the covering surface; DegenerateSignature if not a nonnegative integer.
Int genus(const GeometricSignature& gs);

/// Genus below 2 (still a valid integer genus).
bool is_low_genus(const GeometricSignature& gs);

Int signature_function(const GeometricSignature& gs, Int q);
Int hat_signature_function(const GeometricSignature& gs, Int q);
IntegerFunction signature_function_table(const GeometricSignature& gs);

/// #{j : n/m_j odd}; requires n even.
Int count_A(const GeometricSignature& gs);
/// #{j : n/(2 m_j) odd}; requires n divisible by 4.
Int count_B(const GeometricSignature& gs);

/// lcm of the cyclic periods (1 when there are none).
Int lcm_of_periods(const GeometricSignature& gs);

/// sum_j n/m_j.
Int xi3(const GeometricSignature& gs);

/// Every canonical geometric signature over D_n with integral genus in
/// [0, max_genus], sorted by (genus, signature).
std::vector<GeometricSignature> enumerate_geometric_signatures(Int n, Int max_genus);

/// Every plain signature with 2*gamma + v <= max_generators and periods dividing n.
std::vector<PlainSignature> enumerate_plain_signatures(Int n, Int max_generators);

}  // namespace dihedra
