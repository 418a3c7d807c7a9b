#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dihedra/correspondence.hpp"
#include "dihedra/divisor_lattice.hpp"
#include "dihedra/error.hpp"
#include "dihedra/jacobian_decomposition.hpp"
#include "dihedra/realizability.hpp"
#include "dihedra/serialization.hpp"
#include "dihedra/ske_oracle.hpp"
#include "oracles.hpp"

#ifndef DIHEDRA_GOLDEN_DIR
#define DIHEDRA_GOLDEN_DIR "tests/golden"
#endif

using namespace dihedra;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    ok = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// Runs body(i) for i in [0, count) on a small thread pool.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers(); ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

std::vector<Int> flat(const AnalyticCharacter& v) {
  std::vector<Int> out = v.psi;
  out.insert(out.end(), v.nu.begin(), v.nu.end());
  return out;
}

std::vector<oracle::Perm> perms(const std::vector<DihedralElement>& xs) {
  std::vector<oracle::Perm> out;
  for (const auto& x : xs) out.push_back(oracle::element(x.n, x.reflector, x.exponent));
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

// Realizable geometric signatures with 3 <= n <= 24 and genus <= 60.
const std::vector<GeometricSignature>& corpus() {
  static const std::vector<GeometricSignature> all = [] {
    std::vector<GeometricSignature> out;
    for (Int n = 3; n <= 24; ++n)
      for (const auto& g : enumerate_geometric_signatures(n, 60))
        if (is_realizable(g)) out.push_back(g);
    return out;
  }();
  return all;
}

// Geometric signatures over D_n refining a plain signature.
std::vector<GeometricSignature> refinements(Int n, const PlainSignature& sig) {
  const Int twos = std::count(sig.periods.begin(), sig.periods.end(), Int{2});
  std::vector<Int> rest;
  for (Int m : sig.periods)
    if (m != 2) rest.push_back(m);
  std::vector<GeometricSignature> out;
  for (Int a = 0; a <= twos; ++a)
    for (Int b = 0; a + b <= twos; ++b) {
      if (n % 2 != 0 && (b > 0 || a != twos)) continue;
      std::vector<Int> ps(static_cast<std::size_t>(twos - a - b), 2);
      ps.insert(ps.end(), rest.begin(), rest.end());
      const Int x = 2 * n * (2 * sig.gamma - 2) + (a + b) * n + [&] {
        Int s = 0;
        for (Int m : ps) s += 2 * n - 2 * n / m;
        return s;
      }();
      if (x % 2 != 0 || x < -2) continue;
      out.push_back(make_geometric_signature(n, sig.gamma, a, b, ps));
    }
  return out;
}

// Subgroup in the permutation model: H = <s, r^(n/alpha)>, K = <sr, r^(n/alpha)>, C = <r^(n/alpha)>.
std::set<oracle::Perm> perm_subgroup(const SubgroupId& h) {
  const Int n = h.n;
  std::vector<oracle::Perm> gens{oracle::element(n, false, n / h.alpha)};
  if (h.family == SubgroupFamily::H) gens.push_back(oracle::element(n, true, 0));
  if (h.family == SubgroupFamily::K) gens.push_back(oracle::element(n, true, 1));
  return oracle::closure(n, gens);
}

// Riemann-Hurwitz for S/H -> S/G: each branch value contributes
// [G:H] minus the number of cycles of its generator on the cosets G/H.
Int riemann_hurwitz_quotient_genus(const GeneratingVector& v, const std::set<oracle::Perm>& h) {
  const Int n = v.n;
  std::vector<std::set<oracle::Perm>> cosets;
  std::map<oracle::Perm, std::size_t> coset_of;
  for (const auto& g : oracle::group(n)) {
    if (coset_of.count(g)) continue;
    std::set<oracle::Perm> c;
    for (const auto& x : h) c.insert(oracle::compose(g, x));
    for (const auto& x : c) coset_of[x] = cosets.size();
    cosets.push_back(std::move(c));
  }
  const Int d = static_cast<Int>(cosets.size());
  Int twice = d * (2 * v.gamma - 2);
  for (const auto& c : perms(v.elliptic)) {
    std::vector<bool> seen(cosets.size(), false);
    Int cycles = 0;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j];) {
        seen[j] = true;
        j = coset_of.at(oracle::compose(c, *cosets[j].begin()));
      }
    }
    twice += d - cycles;
  }
  return twice / 2 + 1;
}

std::map<std::pair<int, Int>, Int> weights(const IsogenyDecomposition& d) {
  std::map<std::pair<int, Int>, Int> out;
  for (const auto& f : d.factors) out[{static_cast<int>(f.kind), f.q}] += f.multiplicity;
  return out;
}

Outcome bijection() {
  Outcome o;
  for (const auto& g : corpus()) {
    const auto v = analytic_from_geosig(g);
    if (!is_analytic_representation(v)) o.fail("rejected character of " + to_string(g));
    if (!(geosig_from_analytic(v) == g)) o.fail("round trip moved " + to_string(g));
  }
  o.detail = std::to_string(corpus().size()) + " signatures";
  return o;
}

struct OracleTally {
  std::atomic<Int> skes{0}, cw_mismatch{0}, realizability_mismatch{0}, signatures{0};
  std::mutex mu;
  Outcome cw, real;
};

OracleTally& oracle_corpus() {
  static OracleTally* tally = [] {
    auto* t = new OracleTally;
    std::vector<std::pair<Int, PlainSignature>> jobs;
    for (Int n : {3, 4, 5, 6, 8, 10, 12})
      for (const auto& sig : enumerate_plain_signatures(n, 6)) jobs.push_back({n, sig});
    OracleOptions opts;
    opts.max_group_order = 24;
    opts.max_generators = 6;
    parallel_for(jobs.size(), [&](std::size_t i) {
      const auto& [n, sig] = jobs[i];
      std::set<GeometricSignature> realized;
      std::map<GeometricSignature, AnalyticCharacter> closed;
      Int count = 0;
      for_each_ske(n, sig, opts, [&](const GeneratingVector& v) {
        ++count;
        const auto ell = perms(v.elliptic);
        const auto gs = geosig_of_ske(v);
        realized.insert(gs);
        auto it = closed.find(gs);
        if (it == closed.end()) it = closed.emplace(gs, analytic_from_geosig(gs)).first;
        const auto cw = chevalley_weil(v);
        if (!(cw == it->second) || flat(cw) != oracle::chevalley_weil(n, v.gamma, ell)) {
          ++t->cw_mismatch;
          std::lock_guard lock(t->mu);
          t->cw.fail(to_string(v) + " in D" + std::to_string(n));
        }
      });
      t->skes += count;
      ++t->signatures;
      for (const auto& gs : refinements(n, sig)) {
        if (static_cast<bool>(is_realizable(gs, true)) != (realized.count(gs) > 0)) {
          ++t->realizability_mismatch;
          std::lock_guard lock(t->mu);
          t->real.fail(to_string(gs));
        }
      }
    });
    return t;
  }();
  return *tally;
}

Outcome oracle_equivalence() {
  auto& t = oracle_corpus();
  Outcome o = t.cw;
  o.detail = std::to_string(t.signatures.load()) + " plain signatures, " + std::to_string(t.skes.load()) + " skes, " +
             std::to_string(t.cw_mismatch.load()) + " mismatches";
  return o;
}

Outcome realizability_equivalence() {
  auto& t = oracle_corpus();
  Outcome o = t.real;
  o.detail = std::to_string(t.realizability_mismatch.load()) + " mismatches";
  return o;
}

Outcome constructive_soundness() {
  Outcome o;
  Int checked = 0;
  for (const auto& g : corpus()) {
    const auto v = generating_vector(g);
    ++checked;
    if (!verify_ske(v, plain_signature(g))) o.fail("verify_ske rejects " + to_string(v) + " for " + to_string(g));
    if (!(geosig_of_ske(v) == g)) o.fail(to_string(v) + " does not reproduce " + to_string(g));
    if (oracle::closure(g.n, perms(v.all())).size() != static_cast<std::size_t>(2 * g.n))
      o.fail(to_string(v) + " does not generate D" + std::to_string(g.n));
  }
  o.detail = std::to_string(checked) + " vectors";
  return o;
}

Outcome golden(const std::string& name, const std::vector<std::string>& actual) {
  Outcome o;
  const auto expected = read_lines(std::string(DIHEDRA_GOLDEN_DIR) + "/" + name);
  if (expected.empty()) o.fail("cannot read " + name);
  for (std::size_t i = 0; i < std::max(expected.size(), actual.size()); ++i) {
    const std::string e = i < expected.size() ? expected[i] : "<missing>";
    const std::string a = i < actual.size() ? actual[i] : "<missing>";
    if (e != a) o.fail(name + " row " + std::to_string(i + 1) + ": expected " + e + " got " + a);
  }
  return o;
}

Outcome complete_table() {
  std::vector<std::string> lines;
  std::map<Int, std::size_t> sizes;
  for (Int n = 3; n <= 12; ++n) {
    const auto rows = classify_complete(n, workers());
    sizes[n] = rows.size();
    for (const auto& row : rows) lines.push_back(to_json(row).dump());
  }
  Outcome o = golden("complete.jsonl", lines);
  const std::map<Int, std::size_t> table{{3, 4}, {4, 9}, {6, 14}};
  for (const auto& [n, size] : sizes) {
    const auto it = table.find(n);
    if (size != (it == table.end() ? 0 : it->second)) o.fail("D" + std::to_string(n) + " has " + std::to_string(size) + " rows");
  }
  o.detail = std::to_string(lines.size()) + " rows (D3 " + std::to_string(sizes[3]) + ", D4 " + std::to_string(sizes[4]) +
             ", D6 " + std::to_string(sizes[6]) + ")";
  return o;
}

struct Family {
  Int n, a, b;
  std::vector<Int> periods;
  std::string decomposition;
};

// Instances of the k-decomposition families for 1 <= m <= 4.
std::vector<Family> kdec_families() {
  std::vector<Family> out;
  auto rep = [](Int m, Int count) { return std::vector<Int>(static_cast<std::size_t>(count), m); };
  auto cat = [](std::vector<Int> x, const std::vector<Int>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  for (Int m = 1; m <= 4; ++m) {
    if (m >= 2) {
      out.push_back({3, 2, 0, rep(3, m + 1), "B(3)^2"});
      out.push_back({3, 2 * m + 2, 0, {3}, "B_2 x B(3)^2"});
      out.push_back({4, 1, 1, cat(rep(2, m), {4}), "B(4)^2"});
      out.push_back({4, 1, 2 * m + 1, {4}, "B_2 x B_3 x B(4)^2"});
      out.push_back({4, 2 * m + 1, 1, {4}, "B_2 x B_4 x B(4)^2"});
      out.push_back({6, 1, 1, cat(rep(3, m), {6}), "B(3)^2 x B(6)^2"});
      out.push_back({6, 1, 2 * m + 1, {6}, "B_2 x B_3 x B(3)^2 x B(6)^2"});
      out.push_back({6, 2 * m + 1, 1, {6}, "B_2 x B_4 x B(3)^2 x B(6)^2"});
    }
    out.push_back({5, 2, 0, rep(5, m + 1), "B(5)^2"});
    out.push_back({7, 2, 0, rep(7, m + 1), "B(7)^2"});
    out.push_back({9, 2, 0, cat(rep(3, m), {9}), "B(9)^2"});
    out.push_back({25, 2, 0, cat(rep(5, m), {25}), "B(25)^2"});
    out.push_back({8, 1, 1, cat(rep(2, m), {8}), "B(8)^2"});
    out.push_back({16, 1, 1, cat(rep(2, m), {16}), "B(16)^2"});
    out.push_back({10, 1, 1, cat(rep(5, m), {10}), "B(5)^2 x B(10)^2"});
    out.push_back({14, 1, 1, cat(rep(7, m), {14}), "B(7)^2 x B(14)^2"});
  }
  out.push_back({5, 6, 0, {}, "B_2 x B(5)^2"});
  out.push_back({15, 2, 0, {3, 5}, "B(15)^2"});
  out.push_back({10, 1, 1, {2, 5}, "B(10)^2"});
  out.push_back({14, 1, 1, {2, 7}, "B(14)^2"});
  return out;
}

Outcome kdec_table() {
  std::vector<std::string> lines;
  for (Int n : {3, 4, 5, 6, 8, 10})
    for (const auto& row : classify_k_decompositions(n, 2, 12, workers())) lines.push_back(to_json(row, 2).dump());
  Outcome o = golden("kdec2.jsonl", lines);
  const auto families = kdec_families();
  std::map<std::pair<Int, Int>, std::pair<Int, std::vector<Family>>> by_nk;
  for (const auto& f : families) {
    const auto gs = make_geometric_signature(f.n, 0, f.a, f.b, f.periods);
    const Int g = genus(gs);
    // k is the genus over the number of factors, each ^2 counting a second copy.
    const Int k = g / static_cast<Int>(std::count(f.decomposition.begin(), f.decomposition.end(), 'B') +
                                       std::count(f.decomposition.begin(), f.decomposition.end(), '^'));
    auto& slot = by_nk[{f.n, k}];
    slot.first = std::max(slot.first, g);
    slot.second.push_back(f);
  }
  for (const auto& [nk, slot] : by_nk) {
    const auto rows = classify_k_decompositions(nk.first, nk.second, slot.first, workers());
    for (const auto& f : slot.second) {
      const auto gs = make_geometric_signature(f.n, 0, f.a, f.b, f.periods);
      const auto it = std::find_if(rows.begin(), rows.end(), [&](const ClassificationRow& r) { return r.geosig == gs; });
      if (it == rows.end())
        o.fail(to_string(gs) + " missing for k=" + std::to_string(nk.second));
      else if (to_string(it->decomposition) != f.decomposition)
        o.fail(to_string(gs) + " decomposes as " + to_string(it->decomposition));
    }
  }
  o.detail = "13 golden rows, " + std::to_string(families.size()) + " family instances";
  return o;
}

Outcome prym_affordability() {
  Outcome o;
  for (Int n = 3; n <= 200; ++n)
    if (is_prym_affordable_group(n) != oracle::is_prime_power(n)) o.fail("n=" + std::to_string(n));
  const auto gs = make_geometric_signature(45, 0, 2, 0, {5, 9});
  const auto d = full_decomposition(gs);
  if (to_string(d) != "B(15)^2 x B(45)^2") o.fail("D45 decomposition " + to_string(d));
  std::map<Int, Int> dims;
  for (const auto& f : component_dimensions(gs))
    if (f.kind == FactorKind::Bq) dims[f.q] = f.dim;
  if (dims[15] != 4 || dims[45] != 12) o.fail("D45 dimensions");
  if (genus(gs) != 32 || d.total_dimension() != 32) o.fail("D45 genus");
  const std::map<Int, std::pair<std::string, std::string>> witnesses{{45, {"H(1)", "H(3)"}}, {15, {"H(3)", "H(45)"}}};
  for (const auto& [q, pair] : witnesses) {
    const auto w = prym_realization(gs, q);
    if (!w || to_string(w->cover) != pair.first || to_string(w->base) != pair.second) {
      o.fail("witness for B(" + std::to_string(q) + ")");
      continue;
    }
    if (to_string(prym_decomposition(gs, w->cover, w->base)) != "B(" + std::to_string(q) + ")")
      o.fail("witness for B(" + std::to_string(q) + ") does not isolate it");
  }
  o.detail = "n <= 200, D45 dims (4, 12), genus 32";
  return o;
}

Outcome divisor_transforms() {
  Outcome o;
  std::mt19937_64 rng(20241015);
  std::uniform_int_distribution<Int> modulus(1, 2000), value(-1000000, 1000000);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 10000; ++trial) {
    const Int n = modulus(rng);
    const auto psi = IntegerFunction::tabulate(n, [&](Int) { return value(rng); });
    const auto sigma = divisor_transform_table(psi);
    const auto back = inverse_divisor_transform_table(sigma);
    if (!(back == psi)) o.fail("round trip at n=" + std::to_string(n));
    for (Int q : oracle::divisors(n)) {
      Int s = 0, mob = 0;
      for (Int d : oracle::divisors(q)) {
        s += psi(d);
        mob += oracle::mobius(q / d) * sigma(d);
      }
      if (sigma(q) != s || inverse_divisor_transform(sigma, q) != mob || divisor_transform(psi, q) != s)
        o.fail("transform mismatch at n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << "10000 functions in " << secs << " s";
  o.detail = s.str();
  return o;
}

Outcome genus_identities() {
  Outcome o;
  const auto& all = corpus();
  std::mutex mu;
  std::atomic<Int> checks{0};
  parallel_for(all.size(), [&](std::size_t i) {
    const auto& g = all[i];
    std::vector<std::string> bad;
    Int local = 0;
    if (full_decomposition(g).total_dimension() != genus(g)) bad.push_back("full " + to_string(g));
    const auto v = generating_vector(g);
    const auto classes = subgroup_classes(g.n);
    std::map<std::size_t, Int> qg;
    for (std::size_t a = 0; a < classes.size(); ++a) {
      const Int rh = riemann_hurwitz_quotient_genus(v, perm_subgroup(classes[a]));
      qg[a] = rh;
      ++local;
      if (quotient_genus(g, classes[a]) != rh || quotient_decomposition(g, classes[a]).total_dimension() != rh)
        bad.push_back("quotient " + to_string(classes[a]) + " of " + to_string(g));
    }
    for (std::size_t a = 0; a < classes.size(); ++a)
      for (std::size_t b = 0; b < classes.size(); ++b) {
        if (a == b || !is_subconjugate(classes[a], classes[b])) continue;
        ++local;
        const auto p = prym_decomposition(g, classes[a], classes[b]);
        if (p.total_dimension() != qg[a] - qg[b])
          bad.push_back("prym " + to_string(classes[a]) + " < " + to_string(classes[b]) + " of " + to_string(g));
        if (classes[a].family != SubgroupFamily::C || classes[b].family != SubgroupFamily::C) continue;
        // P(C_a -> C_b) splits into the H and K Pryms of the same levels.
        auto split = weights(prym_decomposition(g, canonical_subgroup({g.n, SubgroupFamily::H, classes[a].alpha}),
                                                canonical_subgroup({g.n, SubgroupFamily::H, classes[b].alpha})));
        for (const auto& [key, w] : weights(prym_decomposition(g, canonical_subgroup({g.n, SubgroupFamily::K, classes[a].alpha}),
                                                                canonical_subgroup({g.n, SubgroupFamily::K, classes[b].alpha}))))
          split[key] += w;
        if (weights(p) != split) bad.push_back("prym split " + to_string(classes[a]) + " < " + to_string(classes[b]) + " of " + to_string(g));
      }
    checks += local;
    if (!bad.empty()) {
      std::lock_guard lock(mu);
      for (const auto& b : bad) o.fail(b);
    }
  });
  o.detail = std::to_string(all.size()) + " signatures, " + std::to_string(checks.load()) + " identities";
  return o;
}

Outcome irreducible_cases() {
  Outcome o;
  std::set<Int> found;
  Int characters = 0;
  for (Int n = 3; n <= 30; ++n) {
    const auto irr = irreducible_reps(n);
    // Every character of dimension <= 2: at most two one-dimensional
    // summands, or a single two-dimensional one.
    std::vector<AnalyticCharacter> candidates{AnalyticCharacter::zero(n)};
    for (std::size_t i = 0; i < irr.size(); ++i) {
      AnalyticCharacter v = AnalyticCharacter::zero(n);
      v.set(irr[i], 1);
      candidates.push_back(v);
      if (irr[i].degree() != 1) continue;
      for (std::size_t j = i; j < irr.size(); ++j) {
        if (irr[j].degree() != 1) continue;
        AnalyticCharacter w = v;
        w.set(irr[j], w.multiplicity(irr[j]) + 1);
        candidates.push_back(w);
      }
    }
    for (const auto& v : candidates) {
      ++characters;
      if (!is_analytic_representation(v)) continue;
      const auto gs = geosig_from_analytic(v);
      if (genus(gs) != v.dimension()) o.fail("genus of " + to_string(gs));
      Int nonzero = 0;
      for (const auto& x : irr) nonzero += v.multiplicity(x);
      if (nonzero == 1) {
        found.insert(n);
        if (genus(gs) != 2) o.fail("irreducible case of genus " + std::to_string(genus(gs)));
      }
    }
  }
  if (found != std::set<Int>{3, 4, 6}) o.fail("irreducible cases differ");
  std::set<Int> listed;
  for (const auto& [n, gs] : irreducible_analytic_cases()) listed.insert(n);
  if (listed != found) o.fail("irreducible_analytic_cases disagrees with the search");
  o.detail = std::to_string(characters) + " characters, irreducible for n in {3, 4, 6}";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bijection on realizable signatures", bijection},
      {"Chevalley-Weil equals the closed formulas", oracle_equivalence},
      {"realizability equals ske existence", realizability_equivalence},
      {"generating vectors are sound", constructive_soundness},
      {"complete decomposition table", complete_table},
      {"k-decomposition table and families", kdec_table},
      {"Prym affordability", prym_affordability},
      {"divisor transform inversion", divisor_transforms},
      {"genus-sum identities", genus_identities},
      {"irreducible analytic representations", irreducible_cases},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::printf("%s %2zu %s: %s [%.1f s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(), secs);
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
