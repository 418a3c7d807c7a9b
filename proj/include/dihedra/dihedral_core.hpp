#pragma once

// The dihedral group D_n = <r, s | r^n = s^2 = (sr)^2 = 1>, its subgroups up to
// conjugacy, and its complex irreducible representations.

#include <boost/rational.hpp>
#include <compare>
#include <vector>

#include "dihedra/cyclotomic.hpp"
#include "dihedra/divisor_lattice.hpp"

namespace dihedra {

using Rational = boost::rational<Int>;

/// r^exponent, or s*r^exponent when reflector is set.
struct DihedralElement {
  Int n = 2;
  bool reflector = false;
  Int exponent = 0;

  static DihedralElement identity(Int n) { return {n, false, 0}; }
  static DihedralElement rotation(Int n, Int i);
  static DihedralElement reflection(Int n, Int i);

  bool is_identity() const noexcept { return !reflector && exponent == 0; }

  /// Position in the lexicographic order (rotations first).
  Int index() const noexcept { return (reflector ? n : 0) + exponent; }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend std::strong_ordering operator<=>(const DihedralElement& a, const DihedralElement& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.index() <=> b.index();
  }
};

void require_group_parameter(Int n);

DihedralElement element_at(Int n, Int index);
std::vector<DihedralElement> all_elements(Int n);

DihedralElement multiply(const DihedralElement& x, const DihedralElement& y);
DihedralElement inverse(const DihedralElement& x);
DihedralElement power(const DihedralElement& x, Int k);
/// x y x^-1 y^-1
DihedralElement commutator(const DihedralElement& x, const DihedralElement& y);
Int element_order(const DihedralElement& x);

/// Membership mask (indexed by element index) of the subgroup generated by gens.
std::vector<bool> generated_subgroup(Int n, const std::vector<DihedralElement>& gens);
bool generates_group(Int n, const std::vector<DihedralElement>& gens);

enum class IrrepKind { Psi1, Psi2, Psi3, Psi4, Rho };

struct IrrepId {
  Int n = 2;
  IrrepKind kind = IrrepKind::Psi1;
  Int h = 0;  // only for Rho

  static IrrepId psi(Int n, int j);
  static IrrepId rho(Int n, Int h);

  int degree() const noexcept { return kind == IrrepKind::Rho ? 2 : 1; }
  friend bool operator==(const IrrepId&, const IrrepId&) = default;
};

/// Largest admissible h for rho^h.
Int rho_range(Int n);

std::vector<IrrepId> irreducible_reps(Int n);

/// Character value chi_V(g) as an element of Z[zeta_n].
CyclotomicInt character(const IrrepId& v, const DihedralElement& g);

/// Eigenvalues of V(g) as exponents alpha of omega = exp(2 pi i / |g|),
/// 0 <= alpha < |g|, found from the characteristic polynomial.
std::vector<Int> eigen_exponents(const IrrepId& v, const DihedralElement& g);

/// N(V,g) = sum over eigenvalues omega^alpha (1 <= alpha <= |g|) of (|g|-alpha)/|g|.
Rational n_function(const IrrepId& v, const DihedralElement& g);

/// The same quantity from the closed dihedral tables.
Rational n_function_table(const IrrepId& v, const DihedralElement& g);

/// (1/|G|) sum_g f1(g) conj(f2(g)) for class functions given on all_elements(n).
Rational inner_product(Int n, const std::vector<CyclotomicInt>& f1, const std::vector<CyclotomicInt>& f2);
std::vector<CyclotomicInt> character_table_row(const IrrepId& v);

/// Irreps rho^h with n / gcd(n, h) = q: the Galois orbit attached to q.
std::vector<IrrepId> rational_irrep_of_divisor(Int n, Int q);

/// q with rho^h in the orbit attached to q.
Int divisor_of_rho(Int n, Int h);

enum class SubgroupFamily { H, K, C };

/// H_a = <s, r^{n/a}>, K_a = <sr, r^{n/a}>, C_a = <r^{n/a}>.
struct SubgroupId {
  Int n = 2;
  SubgroupFamily family = SubgroupFamily::C;
  Int alpha = 1;

  friend bool operator==(const SubgroupId&, const SubgroupId&) = default;
};

/// Validates alpha and rewrites K_a as H_a when the two are conjugate.
SubgroupId canonical_subgroup(const SubgroupId& h);
Int subgroup_order(const SubgroupId& h);
std::vector<DihedralElement> subgroup_elements(const SubgroupId& h);

/// Conjugacy normal form of the subgroup generated by gens.
SubgroupId subgroup_normal_form(Int n, const std::vector<DihedralElement>& gens);

/// Every subgroup of D_n up to conjugacy, each once.
std::vector<SubgroupId> subgroup_classes(Int n);

/// Whether some conjugate of h is contained in k.
bool is_subconjugate(const SubgroupId& h, const SubgroupId& k);

bool are_conjugate(const DihedralElement& x, const DihedralElement& y);

/// dim V^H from the closed table.
Int fixed_dim(const IrrepId& v, const SubgroupId& h);

/// dim V^H as (1/|H|) sum_{x in H} chi_V(x).
Int fixed_dim_by_character(const IrrepId& v, const SubgroupId& h);

}  // namespace dihedra
