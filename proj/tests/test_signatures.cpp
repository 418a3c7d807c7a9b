#include <doctest.h>

#include <functional>

#include "dihedra/error.hpp"
#include "dihedra/signatures.hpp"
#include "oracles.hpp"

using namespace dihedra;

namespace {

GeometricSignature gs(Int n, Int gamma, Int a, Int b, std::vector<Int> periods) {
  return make_geometric_signature(n, gamma, a, b, std::move(periods));
}

std::vector<Int> full_periods(const GeometricSignature& g) {
  std::vector<Int> out(static_cast<std::size_t>(g.t()), 2);
  out.insert(out.end(), g.periods.begin(), g.periods.end());
  return out;
}

}  // namespace

TEST_CASE("plain signatures") {
  CHECK(plain_signature(gs(4, 0, 1, 1, {2, 4})) == make_plain_signature(0, {2, 2, 2, 4}));
  CHECK(plain_signature(gs(3, 0, 2, 0, {3, 3})) == make_plain_signature(0, {2, 2, 3, 3}));
  CHECK(plain_signature(gs(6, 1, 0, 0, {})) == make_plain_signature(1, {}));
}

TEST_CASE("genus by Riemann-Hurwitz") {
  CHECK(genus(gs(3, 0, 2, 0, {3, 3})) == 2);
  CHECK(genus(gs(45, 0, 2, 0, {5, 9})) == 32);
  CHECK(genus(gs(3, 2, 0, 0, {})) == 7);
  try {
    genus(gs(4, 0, 1, 0, {4}));
    FAIL("expected a degenerate signature");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSignature);
  }
}

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(gs(4, 0, 1, 1, {3}), Error);
  CHECK_THROWS_AS(gs(6, 0, 1, 1, {1}), Error);
  CHECK_THROWS_AS(gs(6, -1, 1, 1, {2}), Error);
  // Odd n has one reflection class.
  CHECK(gs(5, 0, 1, 1, {5}) == gs(5, 0, 2, 0, {5}));
  // Periods are stored sorted.
  CHECK(gs(12, 0, 1, 1, {6, 2, 4}).periods == std::vector<Int>{2, 4, 6});
}

TEST_CASE("signature functions") {
  const auto d45 = gs(45, 0, 2, 0, {5, 9});
  CHECK(signature_function(d45, 5) == 1);
  CHECK(signature_function(d45, 3) == 0);
  const auto d6 = gs(6, 0, 1, 1, {2, 3});
  CHECK(signature_function(d6, 2) == 1);
  CHECK(hat_signature_function(d6, 6) == 2);
  CHECK(hat_signature_function(d6, 3) == 1);
  CHECK(hat_signature_function(d6, 1) == 0);
  // The hat function counts periods dividing q.
  for (const auto& g : enumerate_geometric_signatures(12, 9))
    for (Int q : oracle::divisors(12)) {
      Int count = 0;
      for (Int m : g.periods)
        if (q % m == 0) ++count;
      CHECK(hat_signature_function(g, q) == count);
    }
}

TEST_CASE("period counts") {
  const auto g = gs(12, 0, 1, 1, {2, 3, 4, 6, 12});
  // n/m = 6, 4, 3, 2, 1
  CHECK(count_A(g) == 2);
  CHECK(count_B(g) == 2);
  CHECK(xi3(g) == 16);
  CHECK(lcm_of_periods(g) == 12);
  CHECK_THROWS_AS(count_A(gs(5, 0, 2, 0, {5})), Error);
  CHECK_THROWS_AS(count_B(gs(6, 0, 1, 1, {3})), Error);
}

TEST_CASE("enumeration is exactly the Riemann-Hurwitz solutions") {
  for (Int n = 2; n <= 12; ++n) {
    const Int max_genus = 9;
    const auto listed = enumerate_geometric_signatures(n, max_genus);
    std::set<GeometricSignature> seen(listed.begin(), listed.end());
    CHECK(seen.size() == listed.size());
    for (std::size_t i = 1; i < listed.size(); ++i) CHECK(genus(listed[i - 1]) <= genus(listed[i]));
    for (const auto& g : listed) {
      const Int rh = oracle::rh_genus(n, g.gamma, full_periods(g));
      CHECK(rh == genus(g));
      CHECK(rh <= max_genus);
    }
    std::size_t brute = 0;
    std::vector<Int> cyclic;
    for (Int d : oracle::divisors(n))
      if (d >= 2) cyclic.push_back(d);
    // 2g - 2 only grows with each datum, so stop once it exceeds the bound.
    auto twice = [&](Int gamma, Int t, const std::vector<Int>& ps) {
      Int x = 2 * n * (2 * gamma - 2) + t * n;
      for (Int m : ps) x += 2 * n - 2 * n / m;
      return x;
    };
    const Int cap = 2 * max_genus - 2;
    for (Int gamma = 0; twice(gamma, 0, {}) <= cap; ++gamma)
      for (Int a = 0; twice(gamma, a, {}) <= cap; ++a)
        for (Int b = 0; twice(gamma, a + b, {}) <= cap && (n % 2 == 0 || b == 0); ++b) {
          std::function<void(std::size_t, std::vector<Int>&)> rec = [&](std::size_t from, std::vector<Int>& ps) {
            if (twice(gamma, a + b, ps) > cap) return;
            std::vector<Int> all(static_cast<std::size_t>(a + b), 2);
            all.insert(all.end(), ps.begin(), ps.end());
            const Int g = oracle::rh_genus(n, gamma, all);
            if (g >= 0) ++brute;
            for (std::size_t i = from; i < cyclic.size(); ++i) {
              ps.push_back(cyclic[i]);
              rec(i, ps);
              ps.pop_back();
            }
          };
          std::vector<Int> ps;
          rec(0, ps);
        }
    CHECK(brute == listed.size());
  }
}

TEST_CASE("Hurwitz bound") {
  // |G| <= 84 (g - 1) for every action in genus g >= 2.
  for (Int n = 2; n <= 60; ++n)
    for (const auto& g : enumerate_geometric_signatures(n, 12)) {
      const Int genus_value = genus(g);
      if (genus_value >= 2) CHECK(2 * n <= 84 * (genus_value - 1));
    }
}

TEST_CASE("plain signature enumeration") {
  const auto sigs = enumerate_plain_signatures(4, 3);
  for (const auto& s : sigs) CHECK(2 * s.gamma + static_cast<Int>(s.periods.size()) <= 3);
  CHECK(std::find(sigs.begin(), sigs.end(), make_plain_signature(0, {2, 2, 4})) != sigs.end());
  CHECK(std::find(sigs.begin(), sigs.end(), make_plain_signature(1, {4})) != sigs.end());
}
