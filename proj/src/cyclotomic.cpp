#include "dihedra/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "dihedra/error.hpp"

namespace dihedra {

namespace {

using Poly = std::vector<Int>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  return out;
}

// Exact division by a monic divisor.
Poly poly_div_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int c = num[k + dn];
    quot[k] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k + j] = checked_sub(num[k + j], checked_mul(c, den[j]));
  }
  for (Int c : num)
    if (c != 0) fail(ErrorCode::Internal, "cyclotomic division left a remainder");
  return quot;
}

std::mutex g_cache_mutex;
std::map<Int, Poly> g_cache;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(Int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cyclotomic_polynomial: n must be positive");
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_cache.find(n);
    if (it != g_cache.end()) return it->second;
  }
  Poly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[n] = 1;
  Poly den{1};
  for (Int d : divisors(n))
    if (d < n) den = poly_mul(den, cyclotomic_polynomial(d));
  Poly phi = poly_div_exact(num, den);
  std::lock_guard lock(g_cache_mutex);
  return g_cache.emplace(n, std::move(phi)).first->second;
}

CyclotomicInt::CyclotomicInt(Int n, Int value) : n_(n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "CyclotomicInt: order must be positive");
  coeffs_.assign(static_cast<std::size_t>(n), 0);
  coeffs_[0] = value;
}

CyclotomicInt CyclotomicInt::zeta_power(Int n, Int k) {
  CyclotomicInt z(n);
  z.coeffs_[0] = 0;
  z.coeffs_[((k % n) + n) % n] = 1;
  return z;
}

void CyclotomicInt::check_same(const CyclotomicInt& o) const {
  if (n_ != o.n_) fail(ErrorCode::InvalidArgument, "cyclotomic integers of different orders");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  a.check_same(b);
  const std::size_t n = a.coeffs_.size();
  CyclotomicInt out(a.n_);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      std::size_t k = (i + j) % n;
      out.coeffs_[k] = checked_add(out.coeffs_[k], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return out;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out(n_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = checked_sub(0, coeffs_[i]);
  return out;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt out(n_);
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) out.coeffs_[(n - i) % n] = coeffs_[i];
  return out;
}

std::vector<Int> CyclotomicInt::reduced() const {
  const Poly& phi = cyclotomic_polynomial(n_);
  const std::size_t deg = phi.size() - 1;
  Poly rem = coeffs_;
  for (std::size_t k = rem.size(); k-- > deg;) {
    Int c = rem[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) rem[k - deg + j] = checked_sub(rem[k - deg + j], checked_mul(c, phi[j]));
  }
  rem.resize(deg);
  return rem;
}

bool CyclotomicInt::is_rational_integer() const {
  auto r = reduced();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

Int CyclotomicInt::to_integer() const {
  auto r = reduced();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) fail(ErrorCode::Internal, "cyclotomic value is not a rational integer");
  return r.empty() ? 0 : r[0];
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.n_ != b.n_) return false;
  return (a - b).reduced() == std::vector<Int>(cyclotomic_polynomial(a.n_).size() - 1, 0);
}

}  // namespace dihedra
