#include "dihedra/divisor_lattice.hpp"

#include <algorithm>
#include <string>

#include "dihedra/error.hpp"

namespace dihedra {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::DegenerateSignature: return "degenerate-signature";
    case ErrorCode::Parity: return "parity-error";
    case ErrorCode::NoAction: return "no-action";
    case ErrorCode::NotAnalytic: return "not-an-analytic-representation";
    case ErrorCode::UnsupportedScope: return "unsupported-scope";
    case ErrorCode::Budget: return "budget-exceeded";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::Internal: return "internal-error";
  }
  return "unknown";
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

namespace {

void require_positive(Int n, const char* what) {
  if (n < 1) fail(ErrorCode::InvalidArgument, std::string(what) + ": argument must be a positive integer");
  if (n > kMaxModulus) fail(ErrorCode::InvalidArgument, std::string(what) + ": argument exceeds 2^31-1");
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
  require_positive(n, "factorize");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Int> k_divisors(Int n, int k) {
  require_positive(n, "k_divisors");
  std::vector<Int> out;
  if (k < 0) return out;
  const auto primes = factorize(n);
  const int r = static_cast<int>(primes.size());
  if (k > r) return out;
  // Choose k distinct primes; q = n / (product).
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Int q = n;
    for (int j = 0; j < r; ++j)
      if (mask & (1u << j)) q /= primes[j].first;
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int euler_phi(Int n) {
  require_positive(n, "euler_phi");
  Int result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

bool is_prime_power(Int n) {
  require_positive(n, "is_prime_power");
  return factorize(n).size() == 1;
}

IntegerFunction::IntegerFunction(Int modulus) {
  require_positive(modulus, "IntegerFunction");
  modulus_ = modulus;
  divisors_ = divisors(modulus);
  values_.assign(divisors_.size(), 0);
}

IntegerFunction IntegerFunction::tabulate(Int modulus, const std::function<Int(Int)>& f) {
  IntegerFunction out(modulus);
  for (std::size_t i = 0; i < out.divisors_.size(); ++i) out.values_[i] = f(out.divisors_[i]);
  return out;
}

std::size_t IntegerFunction::index_of(Int q) const {
  auto it = std::lower_bound(divisors_.begin(), divisors_.end(), q);
  if (it == divisors_.end() || *it != q) return divisors_.size();
  return static_cast<std::size_t>(it - divisors_.begin());
}

Int IntegerFunction::operator()(Int q) const {
  if (q < 1) fail(ErrorCode::InvalidArgument, "IntegerFunction evaluated at a non-positive integer");
  if (modulus_ % q != 0) return 0;
  return values_[index_of(q)];
}

void IntegerFunction::set(Int q, Int value) {
  if (q < 1 || modulus_ % q != 0)
    fail(ErrorCode::InvalidArgument, "IntegerFunction::set: argument is not a divisor of the modulus");
  values_[index_of(q)] = value;
}

Int divisor_transform(const IntegerFunction& psi, Int n) {
  require_positive(n, "divisor_transform");
  Int sum = 0;
  // Only common divisors of n and the modulus can contribute.
  for (Int q : divisors(gcd(n, psi.modulus()))) sum = checked_add(sum, psi(q));
  return sum;
}

Int inverse_divisor_transform(const IntegerFunction& phi, Int n) {
  require_positive(n, "inverse_divisor_transform");
  const int r = static_cast<int>(factorize(n).size());
  Int sum = 0;
  for (int k = 0; k <= r; ++k) {
    Int part = 0;
    for (Int q : k_divisors(n, k)) part = checked_add(part, phi(q));
    sum = (k % 2 == 0) ? checked_add(sum, part) : checked_sub(sum, part);
  }
  return sum;
}

IntegerFunction divisor_transform_table(const IntegerFunction& psi) {
  return IntegerFunction::tabulate(psi.modulus(), [&](Int q) { return divisor_transform(psi, q); });
}

IntegerFunction inverse_divisor_transform_table(const IntegerFunction& phi) {
  return IntegerFunction::tabulate(phi.modulus(), [&](Int q) { return inverse_divisor_transform(phi, q); });
}

}  // namespace dihedra
