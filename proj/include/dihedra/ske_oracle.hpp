#pragma once

// Brute-force surface-kernel epimorphisms onto D_n.

#include <functional>
#include <vector>

#include "dihedra/correspondence.hpp"
#include "dihedra/generating_vector.hpp"
#include "dihedra/signatures.hpp"

namespace dihedra {

struct SkeRecord {
  GeneratingVector vector;
  GeometricSignature geosig;
  AnalyticCharacter analytic;
};

struct OracleOptions {
  Int max_group_order = 24;  // 2n
  Int max_generators = 7;    // 2 gamma + v
  int jobs = 1;
};

bool verify_ske(const GeneratingVector& v, const PlainSignature& sig);

GeometricSignature geosig_of_ske(const GeneratingVector& v);

/// Chevalley-Weil multiplicities from eigenvalue data of each generator image.
AnalyticCharacter chevalley_weil(const GeneratingVector& v);

/// Calls visit for every ske in lexicographic order. Single-threaded.
void for_each_ske(Int n, const PlainSignature& sig, const OracleOptions& opts,
                  const std::function<void(const GeneratingVector&)>& visit);

/// All skes as records, in lexicographic order. Honors opts.jobs.
std::vector<SkeRecord> enumerate_skes(Int n, const PlainSignature& sig, const OracleOptions& opts = {});

/// Whether at least one ske exists (stops at the first one).
bool ske_exists(Int n, const PlainSignature& sig, const OracleOptions& opts = {});

/// Distinct geometric signatures realized by skes with plain signature sig.
std::vector<GeometricSignature> realized_geosigs(Int n, const PlainSignature& sig, const OracleOptions& opts = {});

}  // namespace dihedra
