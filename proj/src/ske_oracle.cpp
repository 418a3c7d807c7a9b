#include "dihedra/ske_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>

#include "dihedra/error.hpp"

namespace dihedra {

DihedralElement long_relation(const GeneratingVector& v) {
  if (static_cast<Int>(v.hyperbolic.size()) != 2 * v.gamma)
    fail(ErrorCode::InvalidArgument, "generating vector needs 2*gamma hyperbolic entries");
  DihedralElement p = DihedralElement::identity(v.n);
  for (std::size_t i = 0; i + 1 < v.hyperbolic.size(); i += 2)
    p = multiply(p, commutator(v.hyperbolic[i], v.hyperbolic[i + 1]));
  for (const auto& c : v.elliptic) p = multiply(p, c);
  return p;
}

bool verify_ske(const GeneratingVector& v, const PlainSignature& sig) {
  if (v.gamma != sig.gamma) return false;
  if (static_cast<Int>(v.hyperbolic.size()) != 2 * v.gamma) return false;
  if (v.elliptic.size() != sig.periods.size()) return false;
  for (const auto& x : v.all())
    if (x.n != v.n) return false;
  if (!long_relation(v).is_identity()) return false;
  for (std::size_t j = 0; j < v.elliptic.size(); ++j)
    if (element_order(v.elliptic[j]) != sig.periods[j]) return false;
  return generates_group(v.n, v.all());
}

GeometricSignature geosig_of_ske(const GeneratingVector& v) {
  Int a = 0, b = 0;
  std::vector<Int> periods;
  for (const auto& c : v.elliptic) {
    if (c.reflector) {
      if (v.n % 2 == 0 && c.exponent % 2 != 0)
        ++b;
      else
        ++a;
    } else {
      if (c.is_identity()) fail(ErrorCode::InvalidArgument, "elliptic generator maps to the identity");
      periods.push_back(element_order(c));
    }
  }
  return make_geometric_signature(v.n, v.gamma, a, b, std::move(periods));
}

namespace {

struct NTable {
  std::vector<IrrepId> irreps;
  std::vector<Rational> values;  // irrep-major, then element index
};

std::shared_ptr<const NTable> n_table(Int n) {
  static std::mutex mutex;
  static std::map<Int, std::shared_ptr<const NTable>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<NTable>();
  table->irreps = irreducible_reps(n);
  for (const auto& v : table->irreps)
    for (const auto& g : all_elements(n)) table->values.push_back(n_function(v, g));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace

AnalyticCharacter chevalley_weil(const GeneratingVector& v) {
  const auto table = n_table(v.n);
  const Int order = 2 * v.n;
  AnalyticCharacter out = AnalyticCharacter::zero(v.n);
  out.psi[0] = v.gamma;
  for (std::size_t k = 1; k < table->irreps.size(); ++k) {
    const IrrepId& irrep = table->irreps[k];
    Rational sum(irrep.degree() * (v.gamma - 1));
    for (const auto& c : v.elliptic) sum += table->values[k * order + c.index()];
    if (sum.denominator() != 1) fail(ErrorCode::Internal, "Chevalley-Weil multiplicity is not an integer");
    out.set(irrep, sum.numerator());
  }
  return out;
}

namespace {

struct GroupTables {
  int size = 0;
  std::vector<int> mul;
  std::vector<int> inv;
  std::vector<int> comm;
  std::vector<Int> order;

  explicit GroupTables(Int n) : size(static_cast<int>(2 * n)) {
    const auto elems = all_elements(n);
    mul.resize(static_cast<std::size_t>(size) * size);
    comm.resize(mul.size());
    for (int i = 0; i < size; ++i) {
      inv.push_back(static_cast<int>(inverse(elems[i]).index()));
      order.push_back(element_order(elems[i]));
      for (int j = 0; j < size; ++j) {
        mul[i * size + j] = static_cast<int>(multiply(elems[i], elems[j]).index());
        comm[i * size + j] = static_cast<int>(commutator(elems[i], elems[j]).index());
      }
    }
  }
};

class Enumerator {
 public:
  Enumerator(Int n, const PlainSignature& sig, const OracleOptions& opts) : n_(n), sig_(sig), t_(n) {
    if (2 * n > opts.max_group_order)
      fail(ErrorCode::Budget, "group order " + std::to_string(2 * n) + " exceeds the oracle budget of " + std::to_string(opts.max_group_order));
    positions_ = static_cast<int>(2 * sig.gamma + static_cast<Int>(sig.periods.size()));
    if (positions_ > opts.max_generators)
      fail(ErrorCode::Budget, "2*gamma + v = " + std::to_string(positions_) + " exceeds the oracle budget of " + std::to_string(opts.max_generators));
    hyper_ = static_cast<int>(2 * sig.gamma);
    for (int p = 0; p < positions_; ++p) {
      std::vector<int> c;
      for (int e = 0; e < t_.size; ++e)
        if (p < hyper_ || t_.order[e] == sig.periods[p - hyper_]) c.push_back(e);
      candidates_.push_back(std::move(c));
    }
  }

  int positions() const { return positions_; }
  const std::vector<int>& outer_candidates() const { return candidates_.at(0); }

  // Visits tuples whose first entry is `first` (or all tuples if first < 0).
  // visit returns false to stop.
  template <class Visit>
  void run(int first, Visit&& visit) {
    if (positions_ == 0) return;  // trivial group image
    tuple_.assign(static_cast<std::size_t>(positions_), 0);
    stop_ = false;
    rec(0, 0, first, visit);
  }

  GeneratingVector to_vector(const std::vector<int>& tuple) const {
    GeneratingVector v{n_, sig_.gamma, {}, {}};
    for (int p = 0; p < positions_; ++p) {
      auto e = element_at(n_, tuple[p]);
      (p < hyper_ ? v.hyperbolic : v.elliptic).push_back(e);
    }
    return v;
  }

 private:
  bool generates() {
    if (t_.size <= 64) {
      std::uint64_t key = 0;
      for (int e : tuple_) key |= std::uint64_t{1} << e;
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
      bool g = closure_generates();
      memo_.emplace(key, g);
      return g;
    }
    return closure_generates();
  }

  bool closure_generates() {
    std::vector<char> in(static_cast<std::size_t>(t_.size), 0);
    std::vector<int> members{0};
    in[0] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int g : tuple_) {
        int p = t_.mul[members[i] * t_.size + g];
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    return static_cast<int>(members.size()) == t_.size;
  }

  template <class Visit>
  void leaf(Visit& visit) {
    if (!generates()) return;
    if (!visit(tuple_)) stop_ = true;
  }

  template <class Visit>
  void rec(int pos, int prefix, int first, Visit& visit) {
    if (stop_) return;
    const int last = positions_ - 1;
    if (pos == last && pos >= hyper_) {
      // The final elliptic entry is forced by the long relation.
      int c = t_.inv[prefix];
      if (t_.order[c] != sig_.periods[pos - hyper_]) return;
      if (pos == 0 && first >= 0 && c != first) return;
      tuple_[pos] = c;
      leaf(visit);
      return;
    }
    for (int e : candidates_[pos]) {
      if (pos == 0 && first >= 0 && e != first) continue;
      tuple_[pos] = e;
      if (pos < hyper_) {
        if (pos % 2 == 0) {
          rec(pos + 1, prefix, first, visit);
        } else {
          int next = t_.mul[prefix * t_.size + t_.comm[tuple_[pos - 1] * t_.size + e]];
          if (pos == last) {
            if (next == 0) leaf(visit);
          } else {
            rec(pos + 1, next, first, visit);
          }
        }
      } else {
        rec(pos + 1, t_.mul[prefix * t_.size + e], first, visit);
      }
      if (stop_) return;
    }
  }

  Int n_;
  PlainSignature sig_;
  GroupTables t_;
  int positions_ = 0;
  int hyper_ = 0;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> tuple_;
  std::unordered_map<std::uint64_t, bool> memo_;
  bool stop_ = false;
};

PlainSignature validated(const PlainSignature& sig) { return make_plain_signature(sig.gamma, sig.periods); }

}  // namespace

void for_each_ske(Int n, const PlainSignature& sig, const OracleOptions& opts,
                  const std::function<void(const GeneratingVector&)>& visit) {
  require_group_parameter(n);
  Enumerator en(n, validated(sig), opts);
  en.run(-1, [&](const std::vector<int>& t) {
    visit(en.to_vector(t));
    return true;
  });
}

bool ske_exists(Int n, const PlainSignature& sig, const OracleOptions& opts) {
  require_group_parameter(n);
  Enumerator en(n, validated(sig), opts);
  bool found = false;
  en.run(-1, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<SkeRecord> enumerate_skes(Int n, const PlainSignature& sig_in, const OracleOptions& opts) {
  require_group_parameter(n);
  const PlainSignature sig = validated(sig_in);
  Enumerator probe(n, sig, opts);
  if (probe.positions() == 0) return {};
  const std::vector<int> outer = probe.outer_candidates();
  std::vector<std::vector<SkeRecord>> shards(outer.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      Enumerator en(n, sig, opts);
      for (std::size_t i = next++; i < outer.size(); i = next++) {
        en.run(outer[i], [&](const std::vector<int>& t) {
          SkeRecord rec;
          rec.vector = en.to_vector(t);
          rec.geosig = geosig_of_ske(rec.vector);
          rec.analytic = chevalley_weil(rec.vector);
          shards[i].push_back(std::move(rec));
          return true;
        });
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<SkeRecord> out;
  for (auto& s : shards)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::vector<GeometricSignature> realized_geosigs(Int n, const PlainSignature& sig, const OracleOptions& opts) {
  std::set<GeometricSignature> seen;
  for_each_ske(n, sig, opts, [&](const GeneratingVector& v) { seen.insert(geosig_of_ske(v)); });
  return {seen.begin(), seen.end()};
}

}  // namespace dihedra
