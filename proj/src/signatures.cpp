#include "dihedra/signatures.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "dihedra/dihedral_core.hpp"
#include "dihedra/error.hpp"

namespace dihedra {

GeometricSignature make_geometric_signature(Int n, Int gamma, Int a, Int b, std::vector<Int> periods) {
  require_group_parameter(n);
  if (gamma < 0 || a < 0 || b < 0) fail(ErrorCode::InvalidArgument, "signature counts must be nonnegative");
  for (Int m : periods)
    if (m < 2 || n % m != 0)
      fail(ErrorCode::InvalidArgument, "cyclic period " + std::to_string(m) + " must be a divisor >= 2 of " + std::to_string(n));
  GeometricSignature gs{n, gamma, a, b, std::move(periods)};
  return canonical(gs);
}

GeometricSignature canonical(const GeometricSignature& gs) {
  GeometricSignature out = gs;
  if (out.n % 2 != 0) {
    out.a = checked_add(out.a, out.b);
    out.b = 0;
  }
  std::sort(out.periods.begin(), out.periods.end());
  return out;
}

PlainSignature make_plain_signature(Int gamma, std::vector<Int> periods) {
  if (gamma < 0) fail(ErrorCode::InvalidArgument, "signature genus must be nonnegative");
  for (Int m : periods)
    if (m < 2) fail(ErrorCode::InvalidArgument, "periods must be at least 2");
  std::sort(periods.begin(), periods.end());
  return {gamma, std::move(periods)};
}

PlainSignature plain_signature(const GeometricSignature& gs) {
  std::vector<Int> periods(static_cast<std::size_t>(gs.a + gs.b), 2);
  periods.insert(periods.end(), gs.periods.begin(), gs.periods.end());
  return make_plain_signature(gs.gamma, std::move(periods));
}

Int twice_genus_minus_two(const GeometricSignature& gs) {
  const Int n = gs.n;
  Int total = checked_mul(checked_mul(4, n), gs.gamma - 1);
  total = checked_add(total, checked_mul(gs.a + gs.b, n));
  for (Int m : gs.periods) total = checked_add(total, 2 * n - 2 * n / m);
  return total;
}

Int genus(const GeometricSignature& gs) {
  const Int x = twice_genus_minus_two(gs);
  if (x % 2 != 0) fail(ErrorCode::DegenerateSignature, "Riemann-Hurwitz gives a non-integral genus");
  if (x < -2) fail(ErrorCode::DegenerateSignature, "Riemann-Hurwitz gives a negative genus");
  return x / 2 + 1;
}

bool is_low_genus(const GeometricSignature& gs) { return genus(gs) < 2; }

Int signature_function(const GeometricSignature& gs, Int q) {
  return static_cast<Int>(std::count(gs.periods.begin(), gs.periods.end(), q));
}

IntegerFunction signature_function_table(const GeometricSignature& gs) {
  return IntegerFunction::tabulate(gs.n, [&](Int q) { return signature_function(gs, q); });
}

Int hat_signature_function(const GeometricSignature& gs, Int q) {
  return divisor_transform(signature_function_table(gs), q);
}

Int count_A(const GeometricSignature& gs) {
  if (gs.n % 2 != 0) fail(ErrorCode::InvalidArgument, "count_A requires even n");
  Int c = 0;
  for (Int m : gs.periods)
    if ((gs.n / m) % 2 != 0) ++c;
  return c;
}

Int count_B(const GeometricSignature& gs) {
  if (gs.n % 4 != 0) fail(ErrorCode::InvalidArgument, "count_B requires n divisible by 4");
  Int c = 0;
  for (Int m : gs.periods)
    if ((gs.n / m) % 2 == 0 && (gs.n / m / 2) % 2 != 0) ++c;
  return c;
}

Int lcm_of_periods(const GeometricSignature& gs) {
  Int l = 1;
  for (Int m : gs.periods) l = lcm(l, m);
  return l;
}

Int xi3(const GeometricSignature& gs) {
  Int x = 0;
  for (Int m : gs.periods) x = checked_add(x, gs.n / m);
  return x;
}

std::vector<GeometricSignature> enumerate_geometric_signatures(Int n, Int max_genus) {
  require_group_parameter(n);
  if (max_genus < 0) return {};
  // Every branch datum contributes at least n to 2g - 2 + 4n.
  const Int budget = checked_add(2 * max_genus - 2, 4 * n);
  std::vector<Int> cyclic;
  for (Int d : divisors(n))
    if (d >= 2) cyclic.push_back(d);

  std::vector<GeometricSignature> out;
  std::vector<Int> periods;
  for (Int gamma = 0; 4 * n * gamma <= budget; ++gamma) {
    const Int after_gamma = budget - 4 * n * gamma;
    for (Int a = 0; a * n <= after_gamma; ++a) {
      const Int b_max = (n % 2 == 0) ? (after_gamma - a * n) / n : 0;
      for (Int b = 0; b <= b_max; ++b) {
        const Int left = after_gamma - (a + b) * n;
        std::function<void(std::size_t, Int)> rec = [&](std::size_t from, Int remaining) {
          GeometricSignature gs{n, gamma, a, b, periods};
          const Int x = twice_genus_minus_two(gs);
          if (x % 2 == 0 && x >= -2 && x / 2 + 1 <= max_genus) out.push_back(gs);
          for (std::size_t i = from; i < cyclic.size(); ++i) {
            const Int c = 2 * n - 2 * n / cyclic[i];
            if (c > remaining) break;
            periods.push_back(cyclic[i]);
            rec(i, remaining - c);
            periods.pop_back();
          }
        };
        rec(0, left);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const GeometricSignature& x, const GeometricSignature& y) {
    const Int gx = genus(x), gy = genus(y);
    if (gx != gy) return gx < gy;
    return x < y;
  });
  return out;
}

std::vector<PlainSignature> enumerate_plain_signatures(Int n, Int max_generators) {
  require_group_parameter(n);
  std::vector<Int> cyclic;
  for (Int d : divisors(n))
    if (d >= 2) cyclic.push_back(d);
  std::vector<PlainSignature> out;
  std::vector<Int> periods;
  for (Int gamma = 0; 2 * gamma <= max_generators; ++gamma) {
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      out.push_back({gamma, periods});
      if (2 * gamma + static_cast<Int>(periods.size()) >= max_generators) return;
      for (std::size_t i = from; i < cyclic.size(); ++i) {
        periods.push_back(cyclic[i]);
        rec(i);
        periods.pop_back();
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dihedra
