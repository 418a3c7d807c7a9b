#pragma once

// Exact arithmetic on the divisor lattice of a positive integer.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace dihedra {

using Int = std::int64_t;

/// Largest modulus accepted anywhere in the library.
inline constexpr Int kMaxModulus = 2147483647;  // 2^31 - 1

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<Int, int>> factorize(Int n);

/// Divisors of n in ascending order.
std::vector<Int> divisors(Int n);

/// q | n such that n/q is a product of exactly k distinct primes. For k = 0
/// this is {n}.
std::vector<Int> k_divisors(Int n, int k);

Int euler_phi(Int n);

bool is_prime_power(Int n);

/// A map Z+ -> Z given by a finite table over the divisors of a fixed modulus;
/// every other argument evaluates to 0.
class IntegerFunction {
 public:
  explicit IntegerFunction(Int modulus);

  /// Tabulates f over divisors(modulus).
  static IntegerFunction tabulate(Int modulus, const std::function<Int(Int)>& f);

  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& support_domain() const noexcept { return divisors_; }

  Int operator()(Int q) const;
  void set(Int q, Int value);

  bool operator==(const IntegerFunction&) const = default;

 private:
  std::size_t index_of(Int q) const;

  Int modulus_;
  std::vector<Int> divisors_;
  std::vector<Int> values_;
};

/// Sum of psi over the divisors of n.
Int divisor_transform(const IntegerFunction& psi, Int n);

/// Alternating sum over k-divisors: sum_k (-1)^k sum_{q in Z_k^{|n}} phi(q).
Int inverse_divisor_transform(const IntegerFunction& phi, Int n);

/// Tables of the two transforms at every divisor of the modulus.
IntegerFunction divisor_transform_table(const IntegerFunction& psi);
IntegerFunction inverse_divisor_transform_table(const IntegerFunction& phi);

}  // namespace dihedra
