#pragma once

// Exact arithmetic in Z[zeta_n], stored in Z[x]/(x^n - 1) and compared
// modulo the n-th cyclotomic polynomial.

#include <vector>

#include "dihedra/divisor_lattice.hpp"

namespace dihedra {

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Int>& cyclotomic_polynomial(Int n);

class CyclotomicInt {
 public:
  explicit CyclotomicInt(Int n, Int value = 0);

  /// zeta_n^k for any integer k.
  static CyclotomicInt zeta_power(Int n, Int k);

  Int order() const noexcept { return n_; }
  const std::vector<Int>& coefficients() const noexcept { return coeffs_; }

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  CyclotomicInt operator-() const;

  /// Complex conjugate (zeta -> zeta^{-1}).
  CyclotomicInt conj() const;

  /// Remainder modulo Phi_n, of length phi(n).
  std::vector<Int> reduced() const;

  bool is_rational_integer() const;
  /// The integer value; throws Internal if the element is not in Z.
  Int to_integer() const;

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

 private:
  void check_same(const CyclotomicInt& o) const;

  Int n_;
  std::vector<Int> coeffs_;
};

}  // namespace dihedra
