// dihedra: command-line front end over the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>

#include "dihedra/dihedra.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct StringDeleter {
  void operator()(char* p) const { dihedra_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using GeosigPtr = std::unique_ptr<dihedra_geosig, HandleDeleter<dihedra_geosig, dihedra_geosig_free>>;
using CharacterPtr = std::unique_ptr<dihedra_character, HandleDeleter<dihedra_character, dihedra_character_free>>;
using GenvecPtr = std::unique_ptr<dihedra_genvec, HandleDeleter<dihedra_genvec, dihedra_genvec_free>>;
using DecompositionPtr = std::unique_ptr<dihedra_decomposition, HandleDeleter<dihedra_decomposition, dihedra_decomposition_free>>;
using SkeListPtr = std::unique_ptr<dihedra_ske_list, HandleDeleter<dihedra_ske_list, dihedra_ske_list_free>>;
using TablePtr = std::unique_ptr<dihedra_table, HandleDeleter<dihedra_table, dihedra_table_free>>;

// Thrown to unwind to main with a domain-error exit.
struct Failure {
  dihedra_status status;
  std::string message;
};

void check(dihedra_status status) {
  if (status != DIHEDRA_OK) throw Failure{status, dihedra_last_error()};
}

std::string take(char* s) {
  OwnedString owned(s);
  return s ? std::string(s) : std::string();
}

struct Options {
  bool json = false;
  int jobs = 1;
  bool allow_low_genus = false;
  long long n = 0;
};

GeosigPtr parse_geosig(const std::string& text, const Options& o) {
  dihedra_geosig* gs = nullptr;
  check(dihedra_geosig_parse(text.c_str(), o.n, &gs));
  return GeosigPtr(gs);
}

std::string geosig_text(const dihedra_geosig* gs) {
  char* s = nullptr;
  check(dihedra_geosig_to_string(gs, &s));
  return take(s);
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void print_decomposition(const dihedra_decomposition* d, const Options& o) {
  char* s = nullptr;
  if (o.json)
    check(dihedra_decomposition_to_json(d, &s));
  else
    check(dihedra_decomposition_to_string(d, &s));
  std::cout << take(s) << "\n";
}

int cmd_analytic(const std::string& gs_text, const Options& o) {
  auto gs = parse_geosig(gs_text, o);
  dihedra_character* v = nullptr;
  check(dihedra_analytic_from_geosig(gs.get(), &v));
  CharacterPtr owned(v);
  char* s = nullptr;
  check(o.json ? dihedra_character_to_json(v, &s) : dihedra_character_to_string(v, &s));
  std::cout << take(s) << "\n";
  return kExitOk;
}

int cmd_geosig(const std::string& json, const Options& o) {
  dihedra_character* v = nullptr;
  check(dihedra_character_from_json(json.c_str(), &v));
  CharacterPtr owned(v);
  dihedra_geosig* gs = nullptr;
  check(dihedra_geosig_from_analytic(v, &gs));
  GeosigPtr g(gs);
  char* s = nullptr;
  check(o.json ? dihedra_geosig_to_json(gs, &s) : dihedra_geosig_to_string(gs, &s));
  std::cout << take(s) << "\n";
  return kExitOk;
}

int cmd_realizable(const std::string& gs_text, const Options& o) {
  auto gs = parse_geosig(gs_text, o);
  int ok = 0;
  char* reason = nullptr;
  check(dihedra_is_realizable(gs.get(), o.allow_low_genus, &ok, &reason));
  const std::string why = take(reason);
  if (o.json) {
    std::cout << "{\"geosig\":" << json_quote(geosig_text(gs.get())) << ",\"realizable\":" << (ok ? "true" : "false")
              << ",\"reason\":" << (ok ? "null" : json_quote(why)) << "}\n";
  } else {
    std::cout << (ok ? "realizable" : "not realizable: " + why) << "\n";
  }
  return ok ? kExitOk : kExitDomain;
}

int cmd_genvec(const std::string& gs_text, const Options& o) {
  auto gs = parse_geosig(gs_text, o);
  dihedra_genvec* v = nullptr;
  check(dihedra_generating_vector(gs.get(), o.allow_low_genus, &v));
  GenvecPtr owned(v);
  char* s = nullptr;
  check(o.json ? dihedra_genvec_to_json(v, &s) : dihedra_genvec_to_string(v, &s));
  std::cout << take(s) << "\n";
  return kExitOk;
}

int cmd_oracle(long long n, const std::string& plain, long long max_order, long long max_generators, const Options& o) {
  dihedra_oracle_options opts;
  dihedra_oracle_default_options(&opts);
  if (max_order > 0) opts.max_group_order = max_order;
  if (max_generators > 0) opts.max_generators = max_generators;
  opts.jobs = o.jobs;
  dihedra_ske_list* list = nullptr;
  check(dihedra_oracle_enumerate(n, plain.c_str(), &opts, &list));
  SkeListPtr owned(list);
  size_t count = 0;
  check(dihedra_ske_list_size(list, &count));
  for (size_t i = 0; i < count; ++i) {
    char* s = nullptr;
    check(o.json ? dihedra_ske_list_record_json(list, i, &s) : dihedra_ske_list_record_string(list, i, &s));
    std::cout << take(s) << "\n";
  }
  if (!o.json) std::cout << count << " surface-kernel epimorphisms\n";
  return kExitOk;
}

int cmd_decompose(const std::string& gs_text, const Options& o) {
  auto gs = parse_geosig(gs_text, o);
  dihedra_decomposition* d = nullptr;
  check(dihedra_full_decomposition(gs.get(), &d));
  DecompositionPtr owned(d);
  print_decomposition(d, o);
  return kExitOk;
}

int cmd_quotient(const std::string& gs_text, const std::string& h, const Options& o) {
  auto gs = parse_geosig(gs_text, o);
  dihedra_decomposition* d = nullptr;
  check(dihedra_quotient_decomposition(gs.get(), h.c_str(), &d));
  DecompositionPtr owned(d);
  print_decomposition(d, o);
  return kExitOk;
}

int cmd_prym(const std::string& gs_text, const std::string& h, const std::string& k, std::optional<long long> realize, const Options& o) {
  auto gs = parse_geosig(gs_text, o);
  if (realize) {
    int found = 0;
    char* s = nullptr;
    check(dihedra_prym_realization(gs.get(), *realize, &found, &s));
    const std::string witness = take(s);
    if (o.json)
      std::cout << (found ? witness : "{\"q\":" + std::to_string(*realize) + ",\"cover\":null,\"base\":null}") << "\n";
    else if (found) {
      const auto j = nlohmann::json::parse(witness);
      std::cout << "B(" << *realize << ") ~ P(S/" << j.at("cover").get<std::string>() << " -> S/" << j.at("base").get<std::string>() << ")\n";
    }
    else
      std::cout << "B(" << *realize << ") is not the Prym variety of an intermediate cover\n";
    return kExitOk;
  }
  if (h.empty() || k.empty()) throw CLI::ValidationError("prym", "expects <H> <K> or --realize <q>");
  dihedra_decomposition* d = nullptr;
  check(dihedra_prym_decomposition(gs.get(), h.c_str(), k.c_str(), &d));
  DecompositionPtr owned(d);
  print_decomposition(d, o);
  return kExitOk;
}

int cmd_affordable(long long n, const Options& o) {
  int yes = 0;
  check(dihedra_is_prym_affordable_group(n, &yes));
  if (o.json)
    std::cout << "{\"n\":" << n << ",\"prym_affordable\":" << (yes ? "true" : "false") << "}\n";
  else
    std::cout << "D" << n << (yes ? " is" : " is not") << " Prym-affordable\n";
  return kExitOk;
}

int print_table(dihedra_table* table, const Options& o) {
  TablePtr owned(table);
  size_t count = 0;
  check(dihedra_table_size(table, &count));
  for (size_t i = 0; i < count; ++i) {
    if (o.json) {
      char* s = nullptr;
      check(dihedra_table_row_json(table, i, &s));
      std::cout << take(s) << "\n";
    } else {
      long long g = 0;
      char* gs = nullptr;
      char* dec = nullptr;
      check(dihedra_table_row(table, i, &g, &gs, &dec));
      std::string gs_s = take(gs), dec_s = take(dec);
      std::cout << "g=" << g << "  " << gs_s << "  " << dec_s << "\n";
    }
  }
  if (!o.json) std::cout << count << " rows\n";
  return kExitOk;
}

int cmd_selftest(const std::string& golden_dir, long long max_n, const Options& o) {
  int passed = 0;
  char* report = nullptr;
  check(dihedra_selftest(golden_dir.empty() ? nullptr : golden_dir.c_str(), max_n, o.jobs, &passed, &report));
  std::cout << take(report);
  std::cout << (passed ? "selftest passed" : "selftest FAILED") << "\n";
  return passed ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral group actions on compact Riemann surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON (JSON lines for tables)");
  app.add_option("--jobs", o.jobs, "Worker threads for enumerations")->check(CLI::PositiveNumber);
  app.add_flag("--allow-low-genus", o.allow_low_genus, "Accept signatures of genus 0 or 1");
  app.add_option("--n", o.n, "Group parameter for plain (gamma; m1, ...) signatures");

  std::string gs_text, text2, text3, golden_dir;
  long long n_arg = 0, k_arg = 0, genus_bound = 0, max_order = 0, max_generators = 0, max_n = 0;
  std::optional<long long> realize;
  std::function<int()> action;

  auto* analytic = app.add_subcommand("analytic", "Analytic representation of a geometric signature");
  analytic->add_option("signature", gs_text)->required();
  analytic->callback([&] { action = [&] { return cmd_analytic(gs_text, o); }; });

  auto* geosig = app.add_subcommand("geosig", "Geometric signature of an analytic character given as JSON");
  geosig->add_option("character", gs_text)->required();
  geosig->callback([&] { action = [&] { return cmd_geosig(gs_text, o); }; });

  auto* realizable = app.add_subcommand("realizable", "Decide whether a geometric signature is realized");
  realizable->add_option("signature", gs_text)->required();
  realizable->callback([&] { action = [&] { return cmd_realizable(gs_text, o); }; });

  auto* genvec = app.add_subcommand("genvec", "Explicit generating vector");
  genvec->add_option("signature", gs_text)->required();
  genvec->callback([&] { action = [&] { return cmd_genvec(gs_text, o); }; });

  auto* oracle = app.add_subcommand("oracle", "Enumerate surface-kernel epimorphisms by brute force");
  oracle->add_option("n", n_arg)->required();
  oracle->add_option("signature", gs_text, "Plain signature (gamma; m1, ...)")->required();
  oracle->add_option("--max-order", max_order, "Largest group order 2n allowed");
  oracle->add_option("--max-generators", max_generators, "Largest 2*gamma + v allowed");
  oracle->callback([&] { action = [&] { return cmd_oracle(n_arg, gs_text, max_order, max_generators, o); }; });

  auto* decompose = app.add_subcommand("decompose", "Group algebra decomposition of JS");
  decompose->add_option("signature", gs_text)->required();
  decompose->callback([&] { action = [&] { return cmd_decompose(gs_text, o); }; });

  auto* quotient = app.add_subcommand("quotient", "Decomposition of the Jacobian of S/H");
  quotient->add_option("signature", gs_text)->required();
  quotient->add_option("H", text2, "Subgroup H(a), K(a) or C(a)")->required();
  quotient->callback([&] { action = [&] { return cmd_quotient(gs_text, text2, o); }; });

  auto* prym = app.add_subcommand("prym", "Prym variety of S/H -> S/K, or a Prym realization of B(q)");
  prym->add_option("signature", gs_text)->required();
  prym->add_option("H", text2);
  prym->add_option("K", text3);
  prym->add_option("--realize", realize, "Find H < K with B(q) ~ P(S/H -> S/K)");
  prym->callback([&] { action = [&] { return cmd_prym(gs_text, text2, text3, realize, o); }; });

  auto* affordable = app.add_subcommand("affordable", "Whether D_n is Prym-affordable");
  affordable->add_option("n", n_arg)->required();
  affordable->callback([&] { action = [&] { return cmd_affordable(n_arg, o); }; });

  auto* classify = app.add_subcommand("classify", "Classification tables");
  classify->require_subcommand(1);
  auto* complete = classify->add_subcommand("complete", "Actions giving a complete decomposition of JS");
  complete->add_option("n", n_arg)->required();
  complete->callback([&] {
    action = [&] {
      dihedra_table* t = nullptr;
      check(dihedra_classify_complete(n_arg, o.jobs, &t));
      return print_table(t, o);
    };
  });
  auto* kdec = classify->add_subcommand("kdec", "Actions giving a k-decomposition of JS");
  kdec->add_option("n", n_arg)->required();
  kdec->add_option("k", k_arg)->required();
  kdec->add_option("--genus-bound", genus_bound, "Largest genus enumerated")->required();
  kdec->callback([&] {
    action = [&] {
      dihedra_table* t = nullptr;
      check(dihedra_classify_kdec(n_arg, k_arg, genus_bound, o.jobs, &t));
      return print_table(t, o);
    };
  });

  auto* selftest = app.add_subcommand("selftest", "Oracle cross-checks and golden tables");
  selftest->add_option("--golden-dir", golden_dir, "Directory holding complete.jsonl and kdec2.jsonl");
  selftest->add_option("--max-n", max_n, "Largest n in the oracle corpus (default 8)");
  selftest->callback([&] { action = [&] { return cmd_selftest(golden_dir, max_n, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error[" << dihedra_status_name(f.status) << "]: " << f.message << "\n";
    return kExitDomain;
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  }
}
