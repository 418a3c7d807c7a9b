#include "dihedra/serialization.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "dihedra/error.hpp"

namespace dihedra {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

// Maps typographic brackets, dashes and subscript digits onto ASCII.
std::string normalize(std::string_view text) {
  std::string s(text);
  s = replace_all(s, "⟨", "<");
  s = replace_all(s, "⟩", ">");
  s = replace_all(s, "—", "-");
  s = replace_all(s, "–", "-");
  static const char* const subscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  for (int d = 0; d < 10; ++d) s = replace_all(s, subscripts[d], std::string(1, static_cast<char>('0' + d)));
  return s;
}

[[noreturn]] void parse_fail(const std::string& what, std::string_view text) {
  fail(ErrorCode::Parse, what + ": '" + std::string(text) + "'");
}

Int parse_int(std::string_view text) {
  std::string t = trim(text);
  Int value = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && t[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc() || ptr != last) parse_fail("expected an integer", text);
  return value;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '<' || c == '(') ++depth;
    if (c == '>' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

// "base^k" -> (base, k); bracketed bases keep their inner exponent.
std::pair<std::string, Int> split_power(const std::string& item) {
  std::size_t search_from = 0;
  if (!item.empty() && item[0] == '<') {
    auto close = item.find('>');
    if (close == std::string::npos) parse_fail("unbalanced angle bracket", item);
    search_from = close;
  }
  auto caret = item.find('^', search_from);
  if (caret == std::string::npos) return {item, 1};
  Int k = parse_int(std::string_view(item).substr(caret + 1));
  if (k < 0) parse_fail("negative repetition count", item);
  return {trim(std::string_view(item).substr(0, caret)), k};
}

struct Body {
  Int gamma = 0;
  std::vector<std::string> items;
};

// "(gamma; item, item, ...)" with the parentheses already located.
Body parse_body(std::string_view inner, std::string_view whole) {
  auto semi = inner.find(';');
  if (semi == std::string_view::npos) parse_fail("missing ';' after the quotient genus", whole);
  Body body;
  body.gamma = parse_int(inner.substr(0, semi));
  if (body.gamma < 0) parse_fail("negative quotient genus", whole);
  for (auto& item : split(inner.substr(semi + 1), ','))
    if (!item.empty() && item != "-") body.items.push_back(item);
  return body;
}

std::string_view strip_parens(std::string_view s, std::string_view whole) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') parse_fail("expected a parenthesized signature", whole);
  return s.substr(1, s.size() - 2);
}

std::string grouped(Int value, Int count) {
  std::string s = std::to_string(value);
  if (count > 1) s += "^" + std::to_string(count);
  return s;
}

void append_grouped_periods(std::vector<std::string>& parts, const std::vector<Int>& periods) {
  for (std::size_t i = 0; i < periods.size();) {
    std::size_t j = i;
    while (j < periods.size() && periods[j] == periods[i]) ++j;
    parts.push_back(grouped(periods[i], static_cast<Int>(j - i)));
    i = j;
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string to_string(const DihedralElement& e) {
  std::string rot;
  if (e.exponent == 1)
    rot = "r";
  else if (e.exponent != 0)
    rot = "r^" + std::to_string(e.exponent);
  if (!e.reflector) return rot.empty() ? "1" : rot;
  return rot.empty() ? "s" : "s*" + rot;
}

DihedralElement parse_element(Int n, std::string_view text) {
  std::string t;
  for (char c : trim(text))
    if (c != '*' && !std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "1" || t == "e") return DihedralElement::identity(n);
  bool reflector = false;
  std::string_view rest = t;
  if (!rest.empty() && rest[0] == 's') {
    reflector = true;
    rest.remove_prefix(1);
  }
  Int exponent = 0;
  if (!rest.empty()) {
    if (rest[0] != 'r') parse_fail("unrecognized dihedral element", text);
    rest.remove_prefix(1);
    if (rest.empty())
      exponent = 1;
    else if (rest[0] == '^')
      exponent = parse_int(rest.substr(1));
    else
      parse_fail("unrecognized dihedral element", text);
  } else if (!reflector) {
    parse_fail("empty dihedral element", text);
  }
  return reflector ? DihedralElement::reflection(n, exponent) : DihedralElement::rotation(n, exponent);
}

std::string to_string(const IrrepId& v) {
  switch (v.kind) {
    case IrrepKind::Psi1: return "psi1";
    case IrrepKind::Psi2: return "psi2";
    case IrrepKind::Psi3: return "psi3";
    case IrrepKind::Psi4: return "psi4";
    case IrrepKind::Rho: return "rho^" + std::to_string(v.h);
  }
  return "?";
}

std::string to_string(const SubgroupId& h) {
  const char* f = h.family == SubgroupFamily::H ? "H" : h.family == SubgroupFamily::K ? "K" : "C";
  return std::string(f) + "(" + std::to_string(h.alpha) + ")";
}

SubgroupId parse_subgroup(Int n, std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 4 || t[1] != '(' || t.back() != ')') parse_fail("expected H(alpha), K(alpha) or C(alpha)", text);
  SubgroupId h{n, SubgroupFamily::C, parse_int(std::string_view(t).substr(2, t.size() - 3))};
  switch (t[0]) {
    case 'H': h.family = SubgroupFamily::H; break;
    case 'K': h.family = SubgroupFamily::K; break;
    case 'C': h.family = SubgroupFamily::C; break;
    default: parse_fail("unknown subgroup family", text);
  }
  canonical_subgroup(h);
  return h;
}

std::string to_string(const GeometricSignature& gs) {
  std::vector<std::string> parts;
  if (gs.n % 2 == 0) {
    if (gs.a == 1) parts.push_back("s");
    if (gs.a > 1) parts.push_back("s^" + std::to_string(gs.a));
    if (gs.b == 1) parts.push_back("sr");
    if (gs.b > 1) parts.push_back("sr^" + std::to_string(gs.b));
  } else if (gs.t() > 0) {
    parts.push_back(grouped(2, gs.t()));
  }
  append_grouped_periods(parts, gs.periods);
  if (parts.empty()) parts.push_back("-");
  return "D" + std::to_string(gs.n) + "(" + std::to_string(gs.gamma) + "; " + join(parts, ", ") + ")";
}

GeometricSignature parse_geometric_signature(std::string_view raw, std::optional<Int> n_hint) {
  const std::string text = trim(normalize(raw));
  Int n = 0;
  std::string body_owner;
  std::string_view body_text;
  bool plain = false;
  if (!text.empty() && text[0] == 'D') {
    auto open = text.find('(');
    if (open == std::string::npos) parse_fail("expected Dn(gamma; ...)", raw);
    n = parse_int(std::string_view(text).substr(1, open - 1));
    if (n_hint && *n_hint != n) fail(ErrorCode::InvalidArgument, "signature group D" + std::to_string(n) + " disagrees with --n " + std::to_string(*n_hint));
    body_owner = trim(std::string_view(text).substr(open));
    body_text = strip_parens(body_owner, raw);
  } else if (!text.empty() && text[0] == '(') {
    if (!n_hint) parse_fail("a plain signature needs the group parameter n", raw);
    n = *n_hint;
    plain = true;
    body_text = strip_parens(text, raw);
  } else {
    parse_fail("expected Dn(gamma; ...) or (gamma; ...)", raw);
  }
  require_group_parameter(n);
  if (plain && n % 2 == 0)
    fail(ErrorCode::InvalidArgument,
         "a plain signature is ambiguous for even n; write D" + std::to_string(n) + "(gamma; s^a, sr^b, m1, ...) to split the reflections into <s> and <sr> classes");
  const Body body = parse_body(body_text, raw);
  Int a = 0, b = 0;
  std::vector<Int> periods;
  for (const auto& item : body.items) {
    auto [base, k] = split_power(item);
    std::string inner = base;
    if (inner.size() >= 2 && inner.front() == '<' && inner.back() == '>') inner = trim(inner.substr(1, inner.size() - 2));
    if (inner == "s") {
      a += k;
    } else if (inner == "sr" || inner == "s*r") {
      (n % 2 == 0 ? b : a) += k;
    } else if (!inner.empty() && inner[0] == 'r') {
      if (plain) parse_fail("plain signatures list periods only", item);
      DihedralElement e = parse_element(n, inner);
      if (e.is_identity()) parse_fail("trivial stabilizer", item);
      periods.insert(periods.end(), static_cast<std::size_t>(k), element_order(e));
    } else {
      Int m = parse_int(inner);
      if (n % 2 != 0 && m == 2)
        a += k;
      else
        periods.insert(periods.end(), static_cast<std::size_t>(k), m);
    }
  }
  return make_geometric_signature(n, body.gamma, a, b, std::move(periods));
}

std::string to_string(const PlainSignature& sig) {
  std::vector<std::string> parts;
  append_grouped_periods(parts, sig.periods);
  if (parts.empty()) parts.push_back("-");
  return "(" + std::to_string(sig.gamma) + "; " + join(parts, ", ") + ")";
}

PlainSignature parse_plain_signature(std::string_view raw) {
  const std::string text = trim(normalize(raw));
  const Body body = parse_body(strip_parens(text, raw), raw);
  std::vector<Int> periods;
  for (const auto& item : body.items) {
    auto [base, k] = split_power(item);
    periods.insert(periods.end(), static_cast<std::size_t>(k), parse_int(base));
  }
  return make_plain_signature(body.gamma, std::move(periods));
}

std::string to_string(const AnalyticCharacter& v) {
  std::vector<std::string> parts;
  auto term = [&](Int mult, const std::string& name) {
    if (mult == 0) return;
    if (mult == 1)
      parts.push_back(name);
    else if (mult > 0)
      parts.push_back(std::to_string(mult) + "*" + name);
    else
      parts.push_back("(" + std::to_string(mult) + ")*" + name);
  };
  for (std::size_t j = 0; j < v.psi.size(); ++j) term(v.psi[j], "psi" + std::to_string(j + 1));
  for (std::size_t h = 0; h < v.nu.size(); ++h) term(v.nu[h], "rho^" + std::to_string(h + 1));
  return parts.empty() ? "0" : join(parts, " + ");
}

std::string to_string(const GeneratingVector& v) {
  std::vector<std::string> hyp, ell;
  for (const auto& e : v.hyperbolic) hyp.push_back(to_string(e));
  for (const auto& e : v.elliptic) ell.push_back(to_string(e));
  if (v.gamma == 0) return "(" + join(ell, ", ") + ")";
  return "(" + join(hyp, ", ") + "; " + (ell.empty() ? std::string("-") : join(ell, ", ")) + ")";
}

std::string to_string(const Factor& f, Int n) {
  std::string s;
  switch (f.kind) {
    case FactorKind::JQuotient: s = "JS_D" + std::to_string(n); break;
    case FactorKind::B2: s = "B_2"; break;
    case FactorKind::B3: s = "B_3"; break;
    case FactorKind::B4: s = "B_4"; break;
    case FactorKind::Bq: s = "B(" + std::to_string(f.q) + ")"; break;
  }
  if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
  return s;
}

std::string to_string(const IsogenyDecomposition& d) {
  std::vector<std::string> parts;
  for (const auto& f : d.factors) parts.push_back(to_string(f, d.n));
  return parts.empty() ? "0" : join(parts, " x ");
}

namespace {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const char* kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::JQuotient: return "J";
    case FactorKind::B2: return "B2";
    case FactorKind::B3: return "B3";
    case FactorKind::B4: return "B4";
    case FactorKind::Bq: return "B";
  }
  return "?";
}

}  // namespace

Json to_json(const GeometricSignature& gs) {
  Json j;
  j["n"] = gs.n;
  j["gamma"] = gs.gamma;
  j["a"] = gs.a;
  j["b"] = gs.b;
  j["periods"] = gs.periods;
  return j;
}

GeometricSignature geosig_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) fail(ErrorCode::Parse, "geometric signature JSON must be an object");
    return make_geometric_signature(j.at("n").get<Int>(), j.value("gamma", Int{0}), j.value("a", Int{0}), j.value("b", Int{0}),
                                    j.value("periods", std::vector<Int>{}));
  });
}

Json to_json(const PlainSignature& sig) {
  Json j;
  j["gamma"] = sig.gamma;
  j["periods"] = sig.periods;
  return j;
}

Json to_json(const AnalyticCharacter& v) {
  Json j;
  j["n"] = v.n;
  j["psi"] = v.psi;
  Json rho = Json::object();
  for (std::size_t h = 0; h < v.nu.size(); ++h)
    if (v.nu[h] != 0) rho[std::to_string(h + 1)] = v.nu[h];
  j["rho"] = rho;
  return j;
}

AnalyticCharacter character_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) fail(ErrorCode::Parse, "character JSON must be an object");
    const Int n = j.at("n").get<Int>();
    AnalyticCharacter v = AnalyticCharacter::zero(n);
    auto psi = j.value("psi", std::vector<Int>{});
    if (psi.size() != v.psi.size())
      fail(ErrorCode::Parse, "\"psi\" must list " + std::to_string(v.psi.size()) + " multiplicities for n = " + std::to_string(n));
    v.psi = psi;
    if (j.contains("rho")) {
      for (const auto& [key, value] : j.at("rho").items()) {
        Int h = parse_int(key);
        if (h < 1 || h > rho_range(n)) fail(ErrorCode::Parse, "rho^" + key + " is not an irreducible of D_" + std::to_string(n));
        v.nu[h - 1] = value.get<Int>();
      }
    }
    return v;
  });
}

Json to_json(const GeneratingVector& v) {
  Json j;
  j["n"] = v.n;
  j["gamma"] = v.gamma;
  Json hyp = Json::array(), ell = Json::array();
  for (const auto& e : v.hyperbolic) hyp.push_back(to_string(e));
  for (const auto& e : v.elliptic) ell.push_back(to_string(e));
  j["hyperbolic"] = hyp;
  j["elliptic"] = ell;
  return j;
}

GeneratingVector genvec_from_json(const Json& j) {
  return guarded([&] {
    GeneratingVector v;
    v.n = j.at("n").get<Int>();
    require_group_parameter(v.n);
    v.gamma = j.value("gamma", Int{0});
    for (const auto& e : j.value("hyperbolic", std::vector<std::string>{})) v.hyperbolic.push_back(parse_element(v.n, e));
    for (const auto& e : j.value("elliptic", std::vector<std::string>{})) v.elliptic.push_back(parse_element(v.n, e));
    if (static_cast<Int>(v.hyperbolic.size()) != 2 * v.gamma) fail(ErrorCode::Parse, "\"hyperbolic\" must have 2*gamma entries");
    return v;
  });
}

Json to_json(const SkeRecord& r) {
  Json j;
  j["vector"] = to_json(r.vector);
  j["geosig"] = to_json(r.geosig);
  j["analytic"] = to_json(r.analytic);
  return j;
}

Json to_json(const IsogenyDecomposition& d) {
  Json j;
  j["n"] = d.n;
  j["genus"] = d.total_dimension();
  Json factors = Json::array();
  for (const auto& f : d.factors) {
    Json fj;
    fj["kind"] = kind_name(f.kind);
    if (f.kind == FactorKind::Bq) fj["q"] = f.q;
    fj["dim"] = f.dim;
    fj["mult"] = f.multiplicity;
    factors.push_back(fj);
  }
  j["factors"] = factors;
  return j;
}

Json to_json(const SubgroupId& h) {
  Json j;
  j["family"] = h.family == SubgroupFamily::H ? "H" : h.family == SubgroupFamily::K ? "K" : "C";
  j["alpha"] = h.alpha;
  return j;
}

Json to_json(const PrymRealization& p) {
  Json j;
  j["q"] = p.q;
  j["cover"] = to_string(p.cover);
  j["base"] = to_string(p.base);
  return j;
}

Json to_json(const ClassificationRow& row, std::optional<Int> k) {
  Json j;
  j["n"] = row.geosig.n;
  if (k) j["k"] = *k;
  j["genus"] = row.genus;
  j["geosig"] = to_string(row.geosig);
  j["decomposition"] = to_string(row.decomposition);
  return j;
}

}  // namespace dihedra
