#include "dihedra/correspondence.hpp"

#include <string>

#include "dihedra/error.hpp"

namespace dihedra {

AnalyticCharacter AnalyticCharacter::zero(Int n) {
  require_group_parameter(n);
  AnalyticCharacter v;
  v.n = n;
  v.psi.assign(n % 2 == 0 ? 4 : 2, 0);
  v.nu.assign(static_cast<std::size_t>(rho_range(n)), 0);
  return v;
}

Int AnalyticCharacter::mu(int j) const {
  if (j < 1 || j > static_cast<int>(psi.size())) fail(ErrorCode::InvalidArgument, "no psi" + std::to_string(j) + " for this n");
  return psi[j - 1];
}

Int AnalyticCharacter::rho(Int h) const {
  if (h < 1 || h > static_cast<Int>(nu.size())) fail(ErrorCode::InvalidArgument, "rho^" + std::to_string(h) + " out of range");
  return nu[h - 1];
}

Int AnalyticCharacter::multiplicity(const IrrepId& v) const {
  if (v.kind == IrrepKind::Rho) return rho(v.h);
  return mu(static_cast<int>(v.kind) + 1);
}

void AnalyticCharacter::set(const IrrepId& v, Int value) {
  if (v.n != n) fail(ErrorCode::InvalidArgument, "irrep from a different dihedral group");
  if (v.kind == IrrepKind::Rho)
    nu.at(v.h - 1) = value;
  else
    psi.at(static_cast<std::size_t>(v.kind)) = value;
}

Int AnalyticCharacter::dimension() const {
  Int d = 0;
  for (Int x : psi) d = checked_add(d, x);
  for (Int x : nu) d = checked_add(d, checked_mul(2, x));
  return d;
}

bool AnalyticCharacter::has_negative() const {
  for (Int x : psi)
    if (x < 0) return true;
  for (Int x : nu)
    if (x < 0) return true;
  return false;
}

namespace {

Int half_exact(Int x, const char* what) {
  if (x % 2 != 0) fail(ErrorCode::Parity, std::string(what) + " is odd; the multiplicity would not be an integer");
  return x / 2;
}

}  // namespace

AnalyticCharacter analytic_from_geosig(const GeometricSignature& input) {
  const GeometricSignature gs = canonical(input);
  const Int n = gs.n;
  genus(gs);
  const IntegerFunction hat = divisor_transform_table(signature_function_table(gs));
  const Int g1 = gs.gamma - 1;
  const Int half_t = half_exact(gs.t(), "the number of reflection stabilizers");
  AnalyticCharacter v = AnalyticCharacter::zero(n);
  v.psi[0] = gs.gamma;
  v.psi[1] = g1 + half_t;
  if (n % 2 == 0) {
    const Int diff = hat(n) - hat(n / 2);
    v.psi[2] = g1 + half_exact(gs.b + diff, "b + A");
    v.psi[3] = g1 + half_exact(gs.a + diff, "a + A");
  }
  for (Int h = 1; h <= rho_range(n); ++h) v.nu[h - 1] = 2 * g1 + half_t + hat(n) - hat(gcd(n, h));
  if (v.has_negative())
    fail(ErrorCode::NoAction, "the geometric signature yields a negative multiplicity; no action exists");
  return v;
}

Int presignature(const AnalyticCharacter& v, Int q) {
  const Int n = v.n;
  if (n < 3) fail(ErrorCode::UnsupportedScope, "the pre-signature function needs rho^1, which requires n >= 3");
  if (q < 1) fail(ErrorCode::InvalidArgument, "presignature argument must be positive");
  const Int d = gcd(n, q);
  const Int nu1 = v.rho(1);
  if (d == n) return nu1 - v.mu(1) - v.mu(2) + 1;
  if (n % 2 == 0 && d == n / 2) return nu1 - v.mu(3) - v.mu(4);
  return nu1 - v.rho(d);
}

IntegerFunction presignature_table(const AnalyticCharacter& v) {
  return IntegerFunction::tabulate(v.n, [&](Int q) { return presignature(v, q); });
}

GeometricSignature geosig_from_analytic(const AnalyticCharacter& v) {
  const Int n = v.n;
  if (n < 3) fail(ErrorCode::UnsupportedScope, "the inverse correspondence needs rho^1, which requires n >= 3");
  if (v.psi.size() != (n % 2 == 0 ? 4u : 2u) || v.nu.size() != static_cast<std::size_t>(rho_range(n)))
    fail(ErrorCode::InvalidArgument, "character has the wrong shape for D_" + std::to_string(n));
  if (v.has_negative()) fail(ErrorCode::NotAnalytic, "character has a negative multiplicity");
  const Int gamma = v.mu(1);
  Int a = 0, b = 0;
  if (n % 2 == 0) {
    a = v.mu(2) + v.mu(4) - v.mu(1) - v.mu(3) + 1;
    b = v.mu(2) + v.mu(3) - v.mu(1) - v.mu(4) + 1;
  } else {
    a = 2 * v.mu(2) - 2 * v.mu(1) + 2;
  }
  if (a < 0 || b < 0) fail(ErrorCode::NotAnalytic, "computed number of reflection stabilizers is negative");
  const IntegerFunction tilde = inverse_divisor_transform_table(presignature_table(v));
  std::vector<Int> periods;
  for (Int m : divisors(n)) {
    if (m == 1) continue;
    const Int l = tilde(m);
    if (l < 0) fail(ErrorCode::NotAnalytic, "computed multiplicity of period " + std::to_string(m) + " is negative");
    periods.insert(periods.end(), static_cast<std::size_t>(l), m);
  }
  GeometricSignature gs = make_geometric_signature(n, gamma, a, b, std::move(periods));
  AnalyticCharacter back;
  try {
    back = analytic_from_geosig(gs);
  } catch (const Error&) {
    fail(ErrorCode::NotAnalytic, "character does not come from a geometric signature");
  }
  if (!(back == v)) fail(ErrorCode::NotAnalytic, "character does not come from a geometric signature");
  return gs;
}

Int rational_rep_multiplicity(const GeometricSignature& gs, const IrrepId& v) {
  if (v.kind == IrrepKind::Psi1) return 2 * gs.gamma;
  const Int n = gs.n;
  const Int d = v.degree();
  Int total = 2 * d * (gs.gamma - 1);
  total += gs.a * (d - fixed_dim(v, {n, SubgroupFamily::H, 1}));
  total += gs.b * (d - fixed_dim(v, {n, SubgroupFamily::K, 1}));
  for (Int m : gs.periods) total += d - fixed_dim(v, {n, SubgroupFamily::C, m});
  return total;
}

}  // namespace dihedra
