#include "dihedra/dihedral_core.hpp"

#include <array>
#include <string>

#include "dihedra/error.hpp"

namespace dihedra {

namespace {

Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

void check_same(const DihedralElement& x, const DihedralElement& y) {
  if (x.n != y.n) fail(ErrorCode::InvalidArgument, "dihedral elements from different groups");
}

}  // namespace

void require_group_parameter(Int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dihedral parameter n must be at least 2");
  if (n > kMaxModulus) fail(ErrorCode::InvalidArgument, "dihedral parameter n exceeds 2^31-1");
}

DihedralElement DihedralElement::rotation(Int n, Int i) {
  require_group_parameter(n);
  return {n, false, mod(i, n)};
}

DihedralElement DihedralElement::reflection(Int n, Int i) {
  require_group_parameter(n);
  return {n, true, mod(i, n)};
}

DihedralElement element_at(Int n, Int index) {
  require_group_parameter(n);
  if (index < 0 || index >= 2 * n) fail(ErrorCode::InvalidArgument, "element index out of range");
  return index < n ? DihedralElement{n, false, index} : DihedralElement{n, true, index - n};
}

std::vector<DihedralElement> all_elements(Int n) {
  require_group_parameter(n);
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (Int i = 0; i < 2 * n; ++i) out.push_back(element_at(n, i));
  return out;
}

DihedralElement multiply(const DihedralElement& x, const DihedralElement& y) {
  check_same(x, y);
  const Int n = x.n;
  if (!x.reflector && !y.reflector) return {n, false, mod(x.exponent + y.exponent, n)};
  if (!x.reflector) return {n, true, mod(y.exponent - x.exponent, n)};  // r^i s r^j = s r^{j-i}
  if (!y.reflector) return {n, true, mod(x.exponent + y.exponent, n)};
  return {n, false, mod(y.exponent - x.exponent, n)};  // s r^i s r^j = r^{j-i}
}

DihedralElement inverse(const DihedralElement& x) {
  if (x.reflector) return x;
  return {x.n, false, mod(-x.exponent, x.n)};
}

DihedralElement power(const DihedralElement& x, Int k) {
  if (x.reflector) return (mod(k, 2) == 0) ? DihedralElement::identity(x.n) : x;
  return {x.n, false, mod(x.exponent * mod(k, x.n), x.n)};
}

DihedralElement commutator(const DihedralElement& x, const DihedralElement& y) {
  return multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
}

Int element_order(const DihedralElement& x) {
  if (x.reflector) return 2;
  return x.n / gcd(x.n, x.exponent);
}

std::vector<bool> generated_subgroup(Int n, const std::vector<DihedralElement>& gens) {
  require_group_parameter(n);
  std::vector<bool> in(static_cast<std::size_t>(2 * n), false);
  std::vector<DihedralElement> members{DihedralElement::identity(n)};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& g : gens) {
      if (g.n != n) fail(ErrorCode::InvalidArgument, "generator from a different dihedral group");
      DihedralElement p = multiply(members[i], g);
      if (!in[p.index()]) {
        in[p.index()] = true;
        members.push_back(p);
      }
    }
  }
  return in;
}

bool generates_group(Int n, const std::vector<DihedralElement>& gens) {
  auto in = generated_subgroup(n, gens);
  for (bool b : in)
    if (!b) return false;
  return true;
}

IrrepId IrrepId::psi(Int n, int j) {
  require_group_parameter(n);
  if (j < 1 || j > 4) fail(ErrorCode::InvalidArgument, "psi index must be 1..4");
  if (j > 2 && n % 2 != 0) fail(ErrorCode::InvalidArgument, "psi3 and psi4 exist only for even n");
  return {n, static_cast<IrrepKind>(j - 1), 0};
}

IrrepId IrrepId::rho(Int n, Int h) {
  require_group_parameter(n);
  if (h < 1 || h > rho_range(n)) fail(ErrorCode::InvalidArgument, "rho^" + std::to_string(h) + " is not an irreducible of D_" + std::to_string(n));
  return {n, IrrepKind::Rho, h};
}

Int rho_range(Int n) { return n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2; }

std::vector<IrrepId> irreducible_reps(Int n) {
  require_group_parameter(n);
  std::vector<IrrepId> out{IrrepId::psi(n, 1), IrrepId::psi(n, 2)};
  if (n % 2 == 0) {
    out.push_back(IrrepId::psi(n, 3));
    out.push_back(IrrepId::psi(n, 4));
  }
  for (Int h = 1; h <= rho_range(n); ++h) out.push_back(IrrepId::rho(n, h));
  return out;
}

namespace {

using Matrix = std::array<std::array<CyclotomicInt, 2>, 2>;

// Matrix of rho^h(g) with r -> diag(z^h, z^-h), s -> antidiagonal swap.
Matrix rho_matrix(Int n, Int h, const DihedralElement& g) {
  CyclotomicInt zero(n, 0);
  CyclotomicInt up = CyclotomicInt::zeta_power(n, h * g.exponent);
  CyclotomicInt down = CyclotomicInt::zeta_power(n, -h * g.exponent);
  if (!g.reflector) return Matrix{{{up, zero}, {zero, down}}};
  return Matrix{{{zero, down}, {up, zero}}};
}

int sign_value(const IrrepId& v, const DihedralElement& g) {
  const int parity = (g.exponent % 2 == 0) ? 1 : -1;
  switch (v.kind) {
    case IrrepKind::Psi1: return 1;
    case IrrepKind::Psi2: return g.reflector ? -1 : 1;
    case IrrepKind::Psi3: return parity;
    case IrrepKind::Psi4: return g.reflector ? -parity : parity;
    case IrrepKind::Rho: break;
  }
  fail(ErrorCode::Internal, "sign_value called on a degree-two irrep");
}

void check_pair(const IrrepId& v, const DihedralElement& g) {
  if (v.n != g.n) fail(ErrorCode::InvalidArgument, "irrep and element from different dihedral groups");
}

}  // namespace

CyclotomicInt character(const IrrepId& v, const DihedralElement& g) {
  check_pair(v, g);
  if (v.kind != IrrepKind::Rho) return CyclotomicInt(v.n, sign_value(v, g));
  Matrix m = rho_matrix(v.n, v.h, g);
  return m[0][0] + m[1][1];
}

std::vector<Int> eigen_exponents(const IrrepId& v, const DihedralElement& g) {
  check_pair(v, g);
  const Int n = v.n;
  const Int m = element_order(g);
  // exp(2 pi i a / m); m = 2 need not divide n.
  auto omega = [&](Int a) {
    if (n % m == 0) return CyclotomicInt::zeta_power(n, (n / m) * a);
    return CyclotomicInt(n, a % 2 == 0 ? 1 : -1);
  };
  if (v.kind != IrrepKind::Rho) {
    CyclotomicInt value(n, sign_value(v, g));
    for (Int a = 0; a < m; ++a)
      if (omega(a) == value) return {a};
    fail(ErrorCode::Internal, "no eigenvalue found for a degree-one irrep");
  }
  Matrix mat = rho_matrix(n, v.h, g);
  CyclotomicInt trace = mat[0][0] + mat[1][1];
  CyclotomicInt det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0];
  for (Int a = 0; a < m; ++a)
    for (Int b = a; b < m; ++b)
      if (omega(a) + omega(b) == trace && omega(a + b) == det) return {a, b};
  fail(ErrorCode::Internal, "no eigenvalue pair found for a degree-two irrep");
}

Rational n_function(const IrrepId& v, const DihedralElement& g) {
  const Int m = element_order(g);
  Rational sum(0);
  for (Int a : eigen_exponents(v, g)) {
    Int alpha = (a == 0) ? m : a;
    sum += Rational(m - alpha, m);
  }
  return sum;
}

Rational n_function_table(const IrrepId& v, const DihedralElement& g) {
  check_pair(v, g);
  const Int n = v.n;
  const Rational half(1, 2);
  if (v.kind == IrrepKind::Psi1) return 0;
  if (g.reflector) {
    const bool s_class = g.exponent % 2 == 0;
    switch (v.kind) {
      case IrrepKind::Psi3: return s_class ? Rational(0) : half;
      case IrrepKind::Psi4: return s_class ? half : Rational(0);
      default: return half;
    }
  }
  const Int q = element_order(g);
  switch (v.kind) {
    case IrrepKind::Psi2: return 0;
    case IrrepKind::Psi3:
    case IrrepKind::Psi4: return (n / q) % 2 != 0 ? half : Rational(0);  // delta = 0 iff 2q | n
    default: return v.h % q == 0 ? Rational(0) : Rational(1);
  }
}

std::vector<CyclotomicInt> character_table_row(const IrrepId& v) {
  std::vector<CyclotomicInt> row;
  for (const auto& g : all_elements(v.n)) row.push_back(character(v, g));
  return row;
}

Rational inner_product(Int n, const std::vector<CyclotomicInt>& f1, const std::vector<CyclotomicInt>& f2) {
  require_group_parameter(n);
  if (f1.size() != static_cast<std::size_t>(2 * n) || f2.size() != f1.size())
    fail(ErrorCode::InvalidArgument, "class functions must be tabulated on all 2n elements");
  CyclotomicInt sum(n, 0);
  for (std::size_t i = 0; i < f1.size(); ++i) sum += f1[i] * f2[i].conj();
  return Rational(sum.to_integer(), 2 * n);
}

std::vector<IrrepId> rational_irrep_of_divisor(Int n, Int q) {
  require_group_parameter(n);
  if (q < 3 || n % q != 0) fail(ErrorCode::InvalidArgument, "rational irrep index must be a divisor q >= 3 of n");
  std::vector<IrrepId> out;
  for (Int h = 1; h <= rho_range(n); ++h)
    if (gcd(n, h) == n / q) out.push_back(IrrepId::rho(n, h));
  return out;
}

Int divisor_of_rho(Int n, Int h) { return n / gcd(n, h); }

SubgroupId canonical_subgroup(const SubgroupId& h) {
  require_group_parameter(h.n);
  if (h.alpha < 1 || h.n % h.alpha != 0)
    fail(ErrorCode::InvalidArgument, "subgroup parameter alpha must divide n");
  SubgroupId out = h;
  if (out.family == SubgroupFamily::K && (h.n / h.alpha) % 2 != 0) out.family = SubgroupFamily::H;
  return out;
}

Int subgroup_order(const SubgroupId& h) {
  SubgroupId c = canonical_subgroup(h);
  return c.family == SubgroupFamily::C ? c.alpha : 2 * c.alpha;
}

std::vector<DihedralElement> subgroup_elements(const SubgroupId& h) {
  canonical_subgroup(h);
  const Int n = h.n;
  const Int step = n / h.alpha;
  std::vector<DihedralElement> out;
  for (Int k = 0; k < h.alpha; ++k) out.push_back({n, false, k * step});
  if (h.family != SubgroupFamily::C) {
    const Int shift = h.family == SubgroupFamily::K ? 1 : 0;
    for (Int k = 0; k < h.alpha; ++k) out.push_back({n, true, mod(shift + k * step, n)});
  }
  return out;
}

SubgroupId subgroup_normal_form(Int n, const std::vector<DihedralElement>& gens) {
  auto in = generated_subgroup(n, gens);
  Int d = n;
  Int reflection_exponent = -1;
  for (Int i = 0; i < 2 * n; ++i) {
    if (!in[i]) continue;
    if (i < n)
      d = gcd(d, i);
    else if (reflection_exponent < 0)
      reflection_exponent = i - n;
  }
  const Int alpha = n / d;
  if (reflection_exponent < 0) return {n, SubgroupFamily::C, alpha};
  // Conjugation moves reflection exponents by even shifts.
  if (d % 2 != 0 || reflection_exponent % 2 == 0) return {n, SubgroupFamily::H, alpha};
  return {n, SubgroupFamily::K, alpha};
}

std::vector<SubgroupId> subgroup_classes(Int n) {
  require_group_parameter(n);
  std::vector<SubgroupId> out;
  for (Int a : divisors(n)) {
    out.push_back({n, SubgroupFamily::C, a});
    out.push_back({n, SubgroupFamily::H, a});
    if ((n / a) % 2 == 0) out.push_back({n, SubgroupFamily::K, a});
  }
  return out;
}

bool is_subconjugate(const SubgroupId& h, const SubgroupId& k) {
  if (h.n != k.n) fail(ErrorCode::InvalidArgument, "subgroups of different dihedral groups");
  const Int n = h.n;
  std::vector<bool> in_k(static_cast<std::size_t>(2 * n), false);
  for (const auto& x : subgroup_elements(k)) in_k[x.index()] = true;
  const auto hs = subgroup_elements(h);
  for (const auto& g : all_elements(n)) {
    bool inside = true;
    for (const auto& x : hs) {
      if (!in_k[multiply(multiply(g, x), inverse(g)).index()]) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

bool are_conjugate(const DihedralElement& x, const DihedralElement& y) {
  check_same(x, y);
  for (const auto& g : all_elements(x.n))
    if (multiply(multiply(g, x), inverse(g)) == y) return true;
  return false;
}

Int fixed_dim(const IrrepId& v, const SubgroupId& sub) {
  if (v.n != sub.n) fail(ErrorCode::InvalidArgument, "irrep and subgroup from different dihedral groups");
  const SubgroupId h = canonical_subgroup(sub);
  const Int delta = (h.n / h.alpha) % 2 == 0 ? 1 : 0;
  const Int eps = (v.kind == IrrepKind::Rho && v.h % h.alpha == 0) ? 1 : 0;
  switch (v.kind) {
    case IrrepKind::Psi1: return 1;
    case IrrepKind::Psi2: return h.family == SubgroupFamily::C ? 1 : 0;
    case IrrepKind::Psi3: return h.family == SubgroupFamily::K ? 0 : delta;
    case IrrepKind::Psi4: return h.family == SubgroupFamily::H ? 0 : delta;
    case IrrepKind::Rho: return h.family == SubgroupFamily::C ? 2 * eps : eps;
  }
  return 0;
}

Int fixed_dim_by_character(const IrrepId& v, const SubgroupId& h) {
  const auto elems = subgroup_elements(h);
  CyclotomicInt sum(v.n, 0);
  for (const auto& x : elems) sum += character(v, x);
  Int total = sum.to_integer();
  if (total % static_cast<Int>(elems.size()) != 0) fail(ErrorCode::Internal, "character average is not an integer");
  return total / static_cast<Int>(elems.size());
}

}  // namespace dihedra
