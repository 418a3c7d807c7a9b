#pragma once

// Text and JSON forms of every public value type.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dihedra/jacobian_decomposition.hpp"
#include "dihedra/ske_oracle.hpp"

namespace dihedra {

using Json = nlohmann::ordered_json;

std::string to_string(const DihedralElement& e);
/// Accepts 1, e, r, r^i, s, s*r, s*r^i, sr, sr^i (negative i allowed).
DihedralElement parse_element(Int n, std::string_view text);

std::string to_string(const IrrepId& v);

std::string to_string(const SubgroupId& h);
/// H(alpha), K(alpha), C(alpha).
SubgroupId parse_subgroup(Int n, std::string_view text);

/// D4(0; s, sr, 2, 4), D3(0; 2^2, 3^2), D6(1; -).
std::string to_string(const GeometricSignature& gs);
/// Geometric form Dn(...), or plain form (gamma; ...) when n is supplied and odd.
GeometricSignature parse_geometric_signature(std::string_view text, std::optional<Int> n = std::nullopt);

std::string to_string(const PlainSignature& sig);
PlainSignature parse_plain_signature(std::string_view text);

/// 2*psi1 + psi2 + rho^1; "0" for the zero character.
std::string to_string(const AnalyticCharacter& v);

/// (a1, b1, ...; c1, ...), or (c1, ...) when gamma = 0.
std::string to_string(const GeneratingVector& v);

/// JS_D4 x B_2 x B(4)^2; "0" when empty.
std::string to_string(const IsogenyDecomposition& d);
std::string to_string(const Factor& f, Int n);

Json to_json(const GeometricSignature& gs);
GeometricSignature geosig_from_json(const Json& j);

Json to_json(const PlainSignature& sig);

Json to_json(const AnalyticCharacter& v);
AnalyticCharacter character_from_json(const Json& j);

Json to_json(const GeneratingVector& v);
GeneratingVector genvec_from_json(const Json& j);

Json to_json(const SkeRecord& r);
Json to_json(const IsogenyDecomposition& d);
Json to_json(const SubgroupId& h);
Json to_json(const PrymRealization& p);
/// With k set, the row records the common factor dimension of a k-decomposition.
Json to_json(const ClassificationRow& row, std::optional<Int> k = std::nullopt);

}  // namespace dihedra
