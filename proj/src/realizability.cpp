#include "dihedra/realizability.hpp"

#include <string>

#include "dihedra/error.hpp"
#include "dihedra/ske_oracle.hpp"

namespace dihedra {

namespace {

Verdict yes() { return {true, {}}; }
Verdict no(const char* reason) { return {false, reason}; }

Verdict even_conditions(const GeometricSignature& gs) {
  const Int n = gs.n;
  const Int a = gs.a, b = gs.b;
  const Int A = count_A(gs);
  if ((a - b) % 2 != 0 || (a - A) % 2 != 0) return no(gs.gamma == 0 ? "even0.cond1.parity" : "evenpos.cond1.parity");
  if (gs.gamma == 0) {
    if (a + b < 2) return no("even0.cond2.reflections");
    if (a + b == 2 && lcm_of_periods(gs) != n) return no("even0.cond3.lcm");
    if (a + b > 2 && (a == 0 || b == 0) && A == 0) return no("even0.cond4.A");
    return yes();
  }
  if (gs.gamma == 1 && a == 0 && b == 0) {
    const Int l = lcm_of_periods(gs);
    if (l != n && l != n / 2) return no("evenpos.cond2.lcm");
    if (l == n / 2 && l != n && n % 4 == 0 && count_B(gs) % 2 == 0) return no("evenpos.cond2.B");
  }
  return yes();
}

Verdict odd_conditions(const GeometricSignature& gs) {
  const Int t = gs.t();
  if (t % 2 != 0) return no("odd.parity");
  if (gs.gamma == 0 && t == 0) return no("odd.reflections");
  if (((gs.gamma == 0 && t == 2) || (gs.gamma == 1 && t == 0)) && lcm_of_periods(gs) != gs.n) return no("odd.lcm");
  return yes();
}

}  // namespace

Verdict is_realizable(const GeometricSignature& input, bool allow_low_genus) {
  const GeometricSignature gs = canonical(input);
  const Int x = twice_genus_minus_two(gs);
  if (x % 2 != 0 || x < -2) return no("genus.invalid");
  Verdict v = gs.n % 2 == 0 ? even_conditions(gs) : odd_conditions(gs);
  if (!v) return v;
  if (!allow_low_genus && x / 2 + 1 < 2) return no("genus.low");
  return yes();
}

namespace {

using E = DihedralElement;

void append(std::vector<E>& out, const E& e, Int count) {
  for (Int i = 0; i < count; ++i) out.push_back(e);
}

void append_rotations(std::vector<E>& out, const GeometricSignature& gs) {
  for (Int m : gs.periods) out.push_back(E::rotation(gs.n, gs.n / m));
}

// x with 2x = value mod n, n odd.
Int half_mod(Int value, Int n) {
  value %= n;
  if (value < 0) value += n;
  return value % 2 == 0 ? value / 2 : (value + n) / 2;
}

// Applies s -> sr, r -> r.
GeneratingVector swap_reflection_classes(GeneratingVector v) {
  for (auto* list : {&v.hyperbolic, &v.elliptic})
    for (auto& e : *list)
      if (e.reflector) e = E::reflection(e.n, e.exponent + 1);
  return v;
}

GeneratingVector even_genus_zero(const GeometricSignature& gs) {
  const Int n = gs.n, a = gs.a, b = gs.b, x3 = xi3(gs);
  const E s = E::reflection(n, 0), sr = E::reflection(n, 1);
  GeneratingVector v{n, 0, {}, {}};
  auto& el = v.elliptic;
  if (a >= 2 && b >= 2 && a % 2 == 0 && b % 2 == 0) {
    append(el, s, a);
    append(el, sr, b - 1);
    el.push_back(E::reflection(n, 1 - x3));
  } else if (a >= 3 && b >= 1 && a % 2 != 0 && b % 2 != 0) {
    append(el, s, a - 1);
    el.push_back(E::reflection(n, 1 + x3));
    append(el, sr, b);
  } else if (a >= 4 && a % 2 == 0 && b == 0) {
    append(el, s, a - 2);
    el.push_back(E::reflection(n, 2));
    el.push_back(E::reflection(n, 2 - x3));
  } else if ((a == 2 && b == 0) || (a == 1 && b == 1)) {
    el.push_back(s);
    el.push_back(E::reflection(n, -x3));
  } else {
    GeometricSignature swapped = gs;
    std::swap(swapped.a, swapped.b);
    return swap_reflection_classes(even_genus_zero(swapped));
  }
  append_rotations(el, gs);
  return v;
}

GeneratingVector even_positive_genus(const GeometricSignature& gs) {
  const Int n = gs.n, a = gs.a, b = gs.b, x3 = xi3(gs);
  const E s = E::reflection(n, 0), sr = E::reflection(n, 1), r = E::rotation(n, 1);
  const Int x2 = b % 2;
  GeneratingVector v{n, gs.gamma, {}, {}};
  if (gs.gamma == 1 && a == 0 && b == 0) {
    for (Int delta = 0; delta <= 1; ++delta) {
      v.hyperbolic = {s, E::rotation(n, (delta * n + x3) / 2)};
      v.elliptic.clear();
      append_rotations(v.elliptic, gs);
      if (generates_group(n, v.all())) break;
    }
    return v;
  }
  if (gs.gamma == 1 && a == 0) {
    GeometricSignature swapped = gs;
    std::swap(swapped.a, swapped.b);
    return swap_reflection_classes(even_positive_genus(swapped));
  }
  v.hyperbolic = {gs.gamma >= 2 ? s : sr, E::rotation(n, (x2 + x3) / 2)};
  append(v.hyperbolic, r, 2 * gs.gamma - 2);
  append(v.elliptic, s, a);
  append(v.elliptic, sr, b);
  append_rotations(v.elliptic, gs);
  return v;
}

GeneratingVector odd_vector(const GeometricSignature& gs) {
  const Int n = gs.n, t = gs.t(), x3 = xi3(gs);
  const E s = E::reflection(n, 0), sr = E::reflection(n, 1), r = E::rotation(n, 1);
  GeneratingVector v{n, gs.gamma, {}, {}};
  auto& el = v.elliptic;
  if (gs.gamma == 0) {
    if (t == 2) {
      el.push_back(s);
      el.push_back(E::reflection(n, -x3));
    } else {
      append(el, s, t - 2);
      el.push_back(E::reflection(n, 2));
      el.push_back(E::reflection(n, 2 - x3));
    }
  } else {
    const E first = (gs.gamma == 1 && t != 0) ? sr : s;
    v.hyperbolic = {first, E::rotation(n, half_mod(x3, n))};
    append(v.hyperbolic, r, 2 * gs.gamma - 2);
    append(el, s, t);
  }
  append_rotations(el, gs);
  return v;
}

}  // namespace

GeneratingVector generating_vector(const GeometricSignature& input, bool allow_low_genus) {
  const GeometricSignature gs = canonical(input);
  Verdict verdict = is_realizable(gs, allow_low_genus);
  if (!verdict) fail(ErrorCode::NoAction, "geometric signature is not realizable (" + verdict.reason + ")");
  GeneratingVector v;
  if (gs.n % 2 != 0)
    v = odd_vector(gs);
  else if (gs.gamma == 0)
    v = even_genus_zero(gs);
  else
    v = even_positive_genus(gs);
  if (!verify_ske(v, plain_signature(gs)) || !(geosig_of_ske(v) == gs))
    fail(ErrorCode::Internal, "constructed tuple is not a generating vector for the signature");
  return v;
}

Verdict is_analytic_representation(const AnalyticCharacter& v, bool allow_low_genus) {
  const Int n = v.n;
  if (n < 3) fail(ErrorCode::UnsupportedScope, "analytic representation criteria need n >= 3");
  if (v.psi.size() != (n % 2 == 0 ? 4u : 2u) || v.nu.size() != static_cast<std::size_t>(rho_range(n)))
    fail(ErrorCode::InvalidArgument, "character has the wrong shape for D_" + std::to_string(n));
  if (v.has_negative()) return no("character.negative");
  const IntegerFunction phi = presignature_table(v);
  const IntegerFunction tilde = inverse_divisor_transform_table(phi);
  Int support_lcm = 1;
  bool tilde_ok = true;
  for (Int q : divisors(n)) {
    if (q == 1) continue;
    if (tilde(q) < 0) tilde_ok = false;
    if (tilde(q) > 0) support_lcm = lcm(support_lcm, q);
  }
  bool galois_ok = true;
  for (Int h = 1; h <= rho_range(n); ++h)
    if (v.rho(h) != v.rho(gcd(n, h))) galois_ok = false;

  const Int mu1 = v.mu(1), mu2 = v.mu(2);
  if (n % 2 != 0) {
    if (mu2 + 1 < mu1) return no("odd.cond1");
    if (!tilde_ok) return no("odd.cond2");
    if (!galois_ok) return no("odd.cond3");
    if (mu1 <= 1 && mu2 == 0 && support_lcm != n) return no("odd.cond4");
  } else {
    const Int mu3 = v.mu(3), mu4 = v.mu(4);
    const Int spread = mu3 > mu4 ? mu3 - mu4 : mu4 - mu3;
    if (mu2 + 1 < mu1 + spread) return no("even.cond1");
    if (!tilde_ok) return no("even.cond2");
    if (!galois_ok) return no("even.cond3");
    if (mu1 == 0 && mu2 == 0 && support_lcm != n) return no("even.cond4");
    if (mu1 == 0 && mu2 >= 1 && spread == mu2 + 1 && !(phi(n) > phi(n / 2))) return no("even.cond5");
    if (mu1 == 1 && mu2 == 0) {
      if (support_lcm != n && support_lcm != n / 2) return no("even.cond6");
      if (support_lcm == n / 2 && n % 4 == 0 && (phi(n / 2) - phi(n / 4)) % 2 == 0) return no("even.cond6");
    }
  }
  if (!allow_low_genus && v.dimension() < 2) return no("genus.low");
  return yes();
}

std::vector<std::pair<Int, GeometricSignature>> irreducible_analytic_cases() {
  // An irreducible analytic representation is rho^1 (it always occurs), and
  // rho^1 must be Galois-stable, so phi(n) = 2; that forces n <= 6.
  std::vector<std::pair<Int, GeometricSignature>> out;
  for (Int n = 3; n <= 6; ++n) {
    if (euler_phi(n) != 2) continue;
    AnalyticCharacter v = AnalyticCharacter::zero(n);
    v.nu[0] = 1;
    if (is_analytic_representation(v)) out.emplace_back(n, geosig_from_analytic(v));
  }
  return out;
}

}  // namespace dihedra
