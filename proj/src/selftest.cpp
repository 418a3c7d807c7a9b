#include "dihedra/selftest.hpp"

#include <fstream>
#include <map>
#include <set>

#include "dihedra/error.hpp"
#include "dihedra/realizability.hpp"
#include "dihedra/serialization.hpp"
#include "dihedra/ske_oracle.hpp"

#ifndef DIHEDRA_GOLDEN_DIR
#define DIHEDRA_GOLDEN_DIR "tests/golden"
#endif

namespace dihedra {

std::string default_golden_dir() { return DIHEDRA_GOLDEN_DIR; }

std::vector<std::string> compare_golden(const std::string& path, const std::vector<std::string>& actual) {
  std::ifstream in(path);
  if (!in) return {"cannot open golden file " + path};
  std::vector<std::string> expected;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) expected.push_back(line);
  std::vector<std::string> diffs;
  const std::size_t rows = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string e = i < expected.size() ? expected[i] : "<missing>";
    const std::string a = i < actual.size() ? actual[i] : "<missing>";
    if (e != a) diffs.push_back(path + " row " + std::to_string(i + 1) + ": expected " + e + " got " + a);
  }
  return diffs;
}

std::vector<std::string> complete_table_lines(Int n_min, Int n_max, int jobs) {
  std::vector<std::string> out;
  for (Int n = n_min; n <= n_max; ++n)
    for (const auto& row : classify_complete(n, jobs)) out.push_back(to_json(row).dump());
  return out;
}

std::vector<std::string> kdec_table_lines(const std::vector<Int>& ns, Int k, Int genus_bound, int jobs) {
  std::vector<std::string> out;
  for (Int n : ns)
    for (const auto& row : classify_k_decompositions(n, k, genus_bound, jobs)) out.push_back(to_json(row, k).dump());
  return out;
}

namespace {

// Geometric signatures over D_n whose plain signature is sig.
std::vector<GeometricSignature> refinements(Int n, const PlainSignature& sig) {
  Int twos = 0;
  std::vector<Int> others;
  for (Int m : sig.periods) {
    if (m == 2)
      ++twos;
    else
      others.push_back(m);
  }
  std::vector<GeometricSignature> out;
  if (n % 2 != 0) {
    out.push_back({n, sig.gamma, twos, 0, others});
    return out;
  }
  for (Int a = 0; a <= twos; ++a)
    for (Int b = 0; a + b <= twos; ++b) {
      std::vector<Int> periods(static_cast<std::size_t>(twos - a - b), 2);
      periods.insert(periods.end(), others.begin(), others.end());
      out.push_back(canonical({n, sig.gamma, a, b, periods}));
    }
  return out;
}

bool valid_genus(const GeometricSignature& gs) {
  const Int x = twice_genus_minus_two(gs);
  return x % 2 == 0 && x >= -2;
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opts) {
  SelftestReport report;
  auto record = [&](bool ok, const std::string& line) {
    report.lines.push_back((ok ? "PASS " : "FAIL ") + line);
    if (!ok) report.passed = false;
  };

  OracleOptions oracle;
  oracle.max_group_order = 2 * std::max<Int>(opts.max_n, 12);
  oracle.max_generators = opts.max_generators;
  for (Int n : {3, 4, 5, 6, 8, 10, 12}) {
    if (n > opts.max_n) continue;
    Int skes = 0, cw_mismatch = 0, real_mismatch = 0;
    std::vector<std::string> firsts;
    std::map<GeometricSignature, AnalyticCharacter> closed;
    for (const auto& sig : enumerate_plain_signatures(n, opts.max_generators)) {
      std::set<GeometricSignature> realized;
      for_each_ske(n, sig, oracle, [&](const GeneratingVector& v) {
        ++skes;
        const GeometricSignature gs = geosig_of_ske(v);
        realized.insert(gs);
        auto it = closed.find(gs);
        if (it == closed.end()) it = closed.emplace(gs, analytic_from_geosig(gs)).first;
        if (!(chevalley_weil(v) == it->second)) {
          if (cw_mismatch++ == 0) firsts.push_back("Chevalley-Weil differs for " + to_string(v) + " in D" + std::to_string(n));
        }
      });
      for (const auto& gs : refinements(n, sig)) {
        if (!valid_genus(gs)) {
          if (realized.count(gs)) {
            ++real_mismatch;
            firsts.push_back("ske found for " + to_string(gs) + " with non-integral genus");
          }
          continue;
        }
        const bool predicted = is_realizable(gs, true).ok;
        if (predicted != (realized.count(gs) > 0)) {
          if (real_mismatch++ == 0) firsts.push_back("realizability differs for " + to_string(gs));
        }
      }
    }
    std::string detail = "oracle-equivalence D" + std::to_string(n) + " skes=" + std::to_string(skes) +
                         " cw_mismatches=" + std::to_string(cw_mismatch) + " realizability_mismatches=" + std::to_string(real_mismatch);
    for (const auto& f : firsts) detail += "; " + f;
    record(cw_mismatch == 0 && real_mismatch == 0, detail);
  }

  const std::string dir = opts.golden_dir.empty() ? default_golden_dir() : opts.golden_dir;
  auto golden = [&](const std::string& name, const std::vector<std::string>& actual) {
    auto diffs = compare_golden(dir + "/" + name, actual);
    std::string detail = "golden " + name + " rows=" + std::to_string(actual.size());
    for (const auto& d : diffs) detail += "; " + d;
    record(diffs.empty(), detail);
  };
  golden("complete.jsonl", complete_table_lines(3, 12, opts.jobs));
  golden("kdec2.jsonl", kdec_table_lines({3, 4, 5, 6, 8, 10}, 2, 12, opts.jobs));
  return report;
}

}  // namespace dihedra
