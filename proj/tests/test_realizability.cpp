#include <doctest.h>

#include <functional>
#include <map>

#include "dihedra/correspondence.hpp"
#include "dihedra/error.hpp"
#include "dihedra/realizability.hpp"
#include "oracles.hpp"

using namespace dihedra;

namespace {

GeometricSignature gs(Int n, Int gamma, Int a, Int b, std::vector<Int> periods) {
  return make_geometric_signature(n, gamma, a, b, std::move(periods));
}

std::vector<oracle::Perm> perms(const std::vector<DihedralElement>& xs) {
  std::vector<oracle::Perm> out;
  for (const auto& x : xs) out.push_back(oracle::element(x.n, x.reflector, x.exponent));
  return out;
}

// Geometric signature read off a tuple in the permutation model.
GeometricSignature classify(Int n, Int gamma, const std::vector<oracle::Perm>& elliptic) {
  Int a = 0, b = 0;
  std::vector<Int> periods;
  for (const auto& c : elliptic) {
    if (oracle::is_reflection(c))
      (n % 2 == 0 && oracle::exponent(c) % 2 != 0 ? b : a) += 1;
    else
      periods.push_back(oracle::order(c));
  }
  return make_geometric_signature(n, gamma, a, b, periods);
}

bool valid_vector(const GeneratingVector& v, const GeometricSignature& g) {
  const Int n = g.n;
  auto ell = perms(v.elliptic), hyp = perms(v.hyperbolic);
  if (static_cast<Int>(hyp.size()) != 2 * g.gamma) return false;
  oracle::Perm prod = oracle::identity(n);
  for (std::size_t i = 0; i + 1 < hyp.size(); i += 2) {
    const auto& x = hyp[i];
    const auto& y = hyp[i + 1];
    prod = oracle::compose(prod, oracle::compose(oracle::compose(x, y), oracle::compose(oracle::inv(x), oracle::inv(y))));
  }
  for (const auto& c : ell) prod = oracle::compose(prod, c);
  auto all = perms(v.all());
  return prod == oracle::identity(n) && oracle::closure(n, all).size() == static_cast<std::size_t>(2 * n) &&
         classify(n, g.gamma, ell) == g;
}

}  // namespace

TEST_CASE("realizability examples") {
  CHECK(is_realizable(gs(4, 0, 1, 1, {2, 4})));
  const auto v1 = is_realizable(gs(4, 0, 2, 0, {4}), true);
  CHECK_FALSE(v1);
  CHECK(v1.reason == "even0.cond1.parity");
  CHECK(is_realizable(gs(4, 1, 0, 0, {2})));
  const auto v2 = is_realizable(gs(3, 0, 2, 0, {3}));
  CHECK_FALSE(v2);
  CHECK(v2.reason == "genus.low");
  CHECK_FALSE(is_realizable(gs(4, 1, 0, 0, {}), true));
}

TEST_CASE("generating vector examples") {
  const auto v = generating_vector(gs(4, 0, 1, 1, {2, 4}));
  CHECK(v.elliptic == std::vector<DihedralElement>{DihedralElement::reflection(4, 0), DihedralElement::reflection(4, 1),
                                                    DihedralElement::rotation(4, 2), DihedralElement::rotation(4, 1)});
  const auto w = generating_vector(gs(4, 1, 0, 0, {2}));
  CHECK(valid_vector(w, gs(4, 1, 0, 0, {2})));
  const auto u = generating_vector(gs(3, 0, 2, 0, {3, 3}));
  CHECK(valid_vector(u, gs(3, 0, 2, 0, {3, 3})));
  try {
    generating_vector(gs(4, 0, 2, 0, {4}), true);
    FAIL("expected no action");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoAction);
  }
}

TEST_CASE("every realizable signature gets a valid vector") {
  for (Int n = 2; n <= 24; ++n)
    for (const auto& g : enumerate_geometric_signatures(n, 14)) {
      if (!is_realizable(g, true)) continue;
      CHECK(valid_vector(generating_vector(g, true), g));
    }
}

TEST_CASE("realizability matches exhaustive search") {
  for (Int n = 2; n <= 8; ++n) {
    std::vector<Int> cyclic{2};
    for (Int d : oracle::divisors(n))
      if (d > 2) cyclic.push_back(d);
    for (Int gamma = 0; gamma <= 1; ++gamma) {
      const std::size_t max_v = gamma == 0 ? 4 : 2;
      std::vector<Int> periods;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        std::set<GeometricSignature> found;
        for (const auto& t : oracle::skes(n, gamma, periods)) {
          std::vector<oracle::Perm> ell(t.begin() + 2 * gamma, t.end());
          found.insert(classify(n, gamma, ell));
        }
        // Candidates: each period 2 is a reflection (either class) or r^{n/2}.
        Int twos = std::count(periods.begin(), periods.end(), 2);
        std::vector<Int> rest(periods.begin() + twos, periods.end());
        for (Int a = 0; a <= twos; ++a)
          for (Int b = 0; a + b <= twos; ++b) {
            if (n % 2 != 0 && (b > 0 || a != twos)) continue;
            std::vector<Int> ps(static_cast<std::size_t>(twos - a - b), 2);
            ps.insert(ps.end(), rest.begin(), rest.end());
            const Int x = 2 * n * (2 * gamma - 2) + (a + b) * n + [&] {
              Int s = 0;
              for (Int m : ps) s += 2 * n - 2 * n / m;
              return s;
            }();
            if (x % 2 != 0 || x < -2) continue;
            if (n % 2 != 0 && std::find(ps.begin(), ps.end(), 2) != ps.end()) continue;
            const auto cand = gs(n, gamma, a, b, ps);
            CHECK_MESSAGE(static_cast<bool>(is_realizable(cand, true)) == (found.count(cand) > 0), "n=", n, " gamma=", gamma,
                          " a=", a, " b=", b);
          }
        if (periods.size() >= max_v) return;
        for (std::size_t i = from; i < cyclic.size(); ++i) {
          periods.push_back(cyclic[i]);
          rec(i);
          periods.pop_back();
        }
      };
      rec(0);
    }
  }
}

TEST_CASE("analytic representation criteria") {
  auto rho1 = [](Int n) {
    AnalyticCharacter v = AnalyticCharacter::zero(n);
    v.set(IrrepId::rho(n, 1), 1);
    return v;
  };
  CHECK(is_analytic_representation(rho1(3)));
  CHECK_FALSE(is_analytic_representation(rho1(5)));
  CHECK(is_analytic_representation(rho1(5)).reason == "odd.cond3");
  AnalyticCharacter trivial = AnalyticCharacter::zero(3);
  trivial.set(IrrepId::psi(3, 1), 1);
  CHECK_FALSE(is_analytic_representation(trivial, true));
}

TEST_CASE("analytic criteria match the image of the correspondence") {
  // All characters of dimension <= 4 against analytic images of realizable signatures.
  for (Int n = 3; n <= 12; ++n) {
    const Int max_dim = 4;
    std::set<std::vector<Int>> image;
    for (const auto& g : enumerate_geometric_signatures(n, max_dim)) {
      if (!is_realizable(g, true)) continue;
      auto v = analytic_from_geosig(g);
      std::vector<Int> key = v.psi;
      key.insert(key.end(), v.nu.begin(), v.nu.end());
      image.insert(key);
    }
    const auto irr = irreducible_reps(n);
    std::vector<Int> mult(irr.size(), 0);
    std::size_t accepted = 0;
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int dim) {
      if (i == irr.size()) {
        AnalyticCharacter v = AnalyticCharacter::zero(n);
        for (std::size_t j = 0; j < irr.size(); ++j) v.set(irr[j], mult[j]);
        const bool ok = static_cast<bool>(is_analytic_representation(v, true));
        CHECK_MESSAGE(ok == (image.count(mult) > 0), "n=", n);
        if (ok) ++accepted;
        return;
      }
      for (Int m = 0; dim + m * irr[i].degree() <= max_dim; ++m) {
        mult[i] = m;
        rec(i + 1, dim + m * irr[i].degree());
      }
      mult[i] = 0;
    };
    rec(0, 0);
    CHECK(accepted == image.size());
  }
}

TEST_CASE("irreducible analytic representations") {
  std::vector<Int> ns;
  for (const auto& [n, g] : irreducible_analytic_cases()) {
    ns.push_back(n);
    CHECK(genus(g) == 2);
  }
  CHECK(ns == std::vector<Int>{3, 4, 6});
}
