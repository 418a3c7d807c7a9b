#pragma once

#include <vector>

#include "dihedra/dihedral_core.hpp"

namespace dihedra {

/// Images (a_1, b_1, ..., a_gamma, b_gamma; c_1, ..., c_v) of the canonical
/// Fuchsian generators.
struct GeneratingVector {
  Int n = 2;
  Int gamma = 0;
  std::vector<DihedralElement> hyperbolic;  // 2 * gamma entries
  std::vector<DihedralElement> elliptic;

  std::vector<DihedralElement> all() const {
    std::vector<DihedralElement> out = hyperbolic;
    out.insert(out.end(), elliptic.begin(), elliptic.end());
    return out;
  }

  friend bool operator==(const GeneratingVector&, const GeneratingVector&) = default;
};

/// prod [a_i, b_i] * prod c_j
DihedralElement long_relation(const GeneratingVector& v);

}  // namespace dihedra
