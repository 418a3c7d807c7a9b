#include "dihedra/jacobian_decomposition.hpp"

#include <algorithm>
#include <functional>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "dihedra/error.hpp"
#include "dihedra/realizability.hpp"

namespace dihedra {

Int IsogenyDecomposition::total_dimension() const {
  Int total = 0;
  for (const auto& f : factors) total = checked_add(total, checked_mul(f.dim, f.multiplicity));
  return total;
}

namespace {

void require_action(const GeometricSignature& gs) {
  if (gs.n < 3) fail(ErrorCode::UnsupportedScope, "decompositions are defined for n >= 3");
  Verdict v = is_realizable(gs, true);
  if (!v) fail(ErrorCode::NoAction, "geometric signature is not realizable (" + v.reason + ")");
}

// Irreducible representative of each rational component, with its factor kind.
struct Component {
  FactorKind kind;
  Int q;
  IrrepId irrep;
};

std::vector<Component> components(Int n) {
  std::vector<Component> out{{FactorKind::JQuotient, 0, IrrepId::psi(n, 1)}, {FactorKind::B2, 0, IrrepId::psi(n, 2)}};
  if (n % 2 == 0) {
    out.push_back({FactorKind::B3, 0, IrrepId::psi(n, 3)});
    out.push_back({FactorKind::B4, 0, IrrepId::psi(n, 4)});
  }
  for (Int q : divisors(n))
    if (q >= 3) out.push_back({FactorKind::Bq, q, IrrepId::rho(n, n / q)});
  return out;
}

Int component_dim(const Component& c, const AnalyticCharacter& v) {
  if (c.kind == FactorKind::Bq) return euler_phi(c.q) / 2 * v.multiplicity(c.irrep);
  return v.multiplicity(c.irrep);
}

IsogenyDecomposition weighted(const GeometricSignature& gs, const std::function<Int(const IrrepId&)>& weight) {
  require_action(gs);
  const AnalyticCharacter v = analytic_from_geosig(gs);
  IsogenyDecomposition out{gs.n, {}};
  for (const auto& c : components(gs.n)) {
    const Int dim = component_dim(c, v);
    const Int mult = weight(c.irrep);
    if (mult < 0) fail(ErrorCode::Internal, "negative factor multiplicity");
    if (dim > 0 && mult > 0) out.factors.push_back({c.kind, c.q, dim, mult});
  }
  return out;
}

}  // namespace

std::vector<Factor> component_dimensions(const GeometricSignature& gs) {
  require_action(gs);
  const AnalyticCharacter v = analytic_from_geosig(gs);
  std::vector<Factor> out;
  for (const auto& c : components(gs.n))
    out.push_back({c.kind, c.q, component_dim(c, v), c.kind == FactorKind::Bq ? 2 : 1});
  return out;
}

IsogenyDecomposition full_decomposition(const GeometricSignature& gs) {
  return weighted(gs, [](const IrrepId& v) -> Int { return v.kind == IrrepKind::Rho ? 2 : 1; });
}

IsogenyDecomposition quotient_decomposition(const GeometricSignature& gs, const SubgroupId& h) {
  if (h.n != gs.n) fail(ErrorCode::InvalidArgument, "subgroup of a different dihedral group");
  const SubgroupId hc = canonical_subgroup(h);
  return weighted(gs, [&](const IrrepId& v) { return fixed_dim(v, hc); });
}

IsogenyDecomposition prym_decomposition(const GeometricSignature& gs, const SubgroupId& h, const SubgroupId& k) {
  if (h.n != gs.n || k.n != gs.n) fail(ErrorCode::InvalidArgument, "subgroup of a different dihedral group");
  const SubgroupId hc = canonical_subgroup(h), kc = canonical_subgroup(k);
  if (!is_subconjugate(hc, kc)) fail(ErrorCode::InvalidArgument, "the first subgroup is not contained in the second up to conjugacy");
  return weighted(gs, [&](const IrrepId& v) { return fixed_dim(v, hc) - fixed_dim(v, kc); });
}

Int quotient_genus(const GeometricSignature& gs, const SubgroupId& h) {
  const Int n = gs.n;
  if (h.n != n) fail(ErrorCode::InvalidArgument, "subgroup of a different dihedral group");
  genus(gs);
  const Int size = 2 * n;
  std::vector<bool> in_h(static_cast<std::size_t>(size), false);
  for (const auto& x : subgroup_elements(h)) in_h[x.index()] = true;
  // coset[g] = id of the left coset gH.
  std::vector<Int> coset(static_cast<std::size_t>(size), -1);
  Int cosets = 0;
  for (const auto& g : all_elements(n)) {
    if (coset[g.index()] >= 0) continue;
    for (Int i = 0; i < size; ++i)
      if (in_h[i]) coset[multiply(g, element_at(n, i)).index()] = cosets;
    ++cosets;
  }
  std::vector<DihedralElement> reps(cosets, DihedralElement::identity(n));
  std::vector<bool> seen(cosets, false);
  for (const auto& g : all_elements(n))
    if (!seen[coset[g.index()]]) {
      seen[coset[g.index()]] = true;
      reps[coset[g.index()]] = g;
    }
  auto orbits = [&](const DihedralElement& c) {
    std::vector<bool> done(cosets, false);
    Int count = 0;
    for (Int i = 0; i < cosets; ++i) {
      if (done[i]) continue;
      ++count;
      DihedralElement g = reps[i];
      Int j = i;
      while (!done[j]) {
        done[j] = true;
        g = multiply(c, g);
        j = coset[g.index()];
      }
    }
    return count;
  };
  Int total = checked_mul(cosets, 2 * gs.gamma - 2);
  total += gs.a * (cosets - orbits(DihedralElement::reflection(n, 0)));
  total += gs.b * (cosets - orbits(DihedralElement::reflection(n, 1)));
  for (Int m : gs.periods) total += cosets - orbits(DihedralElement::rotation(n, n / m));
  if (total % 2 != 0 || total < -2) fail(ErrorCode::Internal, "intermediate quotient has a non-integral genus");
  return total / 2 + 1;
}

Int L_function(const std::set<Int>& Q, Int q) {
  if (q < 1) fail(ErrorCode::InvalidArgument, "L_Q is defined on positive integers");
  Int l = 1;
  for (Int x : Q)
    if (x != q && x >= 1 && q % x == 0) l = lcm(l, x);
  return l;
}

std::set<Int> q_theta(const AnalyticCharacter& v) {
  if (v.n < 3) fail(ErrorCode::UnsupportedScope, "Q_theta needs n >= 3");
  std::set<Int> out;
  for (Int t : divisors(v.n))
    if (t >= 3 && v.rho(v.n / t) >= 1) out.insert(t);
  return out;
}

std::optional<PrymRealization> prym_realization(const GeometricSignature& gs, Int q) {
  require_action(gs);
  const Int n = gs.n;
  const bool power_of_two = (n & (n - 1)) == 0;
  if (n % 2 == 0 && !power_of_two)
    fail(ErrorCode::UnsupportedScope, "Prym realization is implemented for odd n and for powers of 2 only");
  const std::set<Int> Q = q_theta(analytic_from_geosig(gs));
  if (!Q.count(q)) fail(ErrorCode::InvalidArgument, "B(" + std::to_string(q) + ") is zero-dimensional for this action");
  PrymRealization out;
  out.q = q;
  if (n % 2 != 0) {
    const Int L = L_function(Q, q);
    if (L == q) return std::nullopt;
    out.cover = {n, SubgroupFamily::H, n / q};
    out.base = {n, SubgroupFamily::H, n / L};
  } else {
    out.cover = {n, SubgroupFamily::H, n / q};
    out.base = {n, SubgroupFamily::H, 2 * n / q};
  }
  const IsogenyDecomposition p = prym_decomposition(gs, out.cover, out.base);
  if (p.factors.size() != 1 || p.factors[0].kind != FactorKind::Bq || p.factors[0].q != q || p.factors[0].multiplicity != 1)
    fail(ErrorCode::Internal, "Prym witness does not isolate B(q)");
  return out;
}

bool is_prym_affordable_group(Int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "Prym-affordability is stated for n >= 3");
  return is_prime_power(n);
}

Int complete_decomposition_genus_bound(Int n) {
  Int count = 0;
  for (Int q : divisors(n))
    if (q >= 3) ++count;
  // gamma, mu2, mu3, mu4 <= 1 and each B(q) contributes 2.
  return 4 + 2 * count;
}

namespace {

std::vector<ClassificationRow> classify(Int n, Int genus_bound, int jobs, const std::function<bool(const IsogenyDecomposition&)>& accept) {
  require_group_parameter(n);
  if (n < 3) fail(ErrorCode::InvalidArgument, "classifications are stated for n >= 3");
  const auto candidates = enumerate_geometric_signatures(n, genus_bound);
  std::vector<std::optional<ClassificationRow>> rows(candidates.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < candidates.size(); i = next++) {
        const auto& gs = candidates[i];
        if (!is_realizable(gs)) continue;
        IsogenyDecomposition d = full_decomposition(gs);
        if (accept(d)) rows[i] = ClassificationRow{genus(gs), gs, std::move(d)};
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<ClassificationRow> out;
  for (auto& r : rows)
    if (r) out.push_back(std::move(*r));
  return out;
}

}  // namespace

std::vector<ClassificationRow> classify_complete(Int n, int jobs) {
  return classify(n, complete_decomposition_genus_bound(n), jobs, [](const IsogenyDecomposition& d) {
    return std::all_of(d.factors.begin(), d.factors.end(), [](const Factor& f) { return f.dim == 1; });
  });
}

std::vector<ClassificationRow> classify_k_decompositions(Int n, Int k, Int genus_bound, int jobs) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
  require_group_parameter(n);
  if (n < 3) fail(ErrorCode::InvalidArgument, "classifications are stated for n >= 3");
  // dim B(n) is a positive multiple of phi(n)/2 and must equal k.
  if (k % (euler_phi(n) / 2) != 0) return {};
  return classify(n, genus_bound, jobs, [k](const IsogenyDecomposition& d) {
    return std::all_of(d.factors.begin(), d.factors.end(), [k](const Factor& f) { return f.dim == k; });
  });
}

}  // namespace dihedra
