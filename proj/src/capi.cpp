#include "dihedra/dihedra.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dihedra/error.hpp"
#include "dihedra/jacobian_decomposition.hpp"
#include "dihedra/realizability.hpp"
#include "dihedra/selftest.hpp"
#include "dihedra/serialization.hpp"
#include "dihedra/ske_oracle.hpp"

struct dihedra_geosig {
  dihedra::GeometricSignature value;
};
struct dihedra_character {
  dihedra::AnalyticCharacter value;
};
struct dihedra_genvec {
  dihedra::GeneratingVector value;
};
struct dihedra_decomposition {
  dihedra::IsogenyDecomposition value;
};
struct dihedra_ske_list {
  std::vector<dihedra::SkeRecord> records;
};
struct dihedra_table {
  std::vector<dihedra::ClassificationRow> rows;
  bool has_k = false;
  long long k = 0;
};

namespace {

thread_local std::string g_last_error;

dihedra_status set_error(dihedra_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
dihedra_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return DIHEDRA_OK;
  } catch (const dihedra::Error& e) {
    return set_error(static_cast<dihedra_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(DIHEDRA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(DIHEDRA_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(DIHEDRA_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw dihedra::Error(dihedra::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dihedra::SubgroupId subgroup(const dihedra_geosig* gs, const char* text) {
  require(text, "subgroup");
  return dihedra::parse_subgroup(gs->value.n, text);
}

dihedra::Json parse_json(const char* text) {
  require(text, "json");
  try {
    return dihedra::Json::parse(text);
  } catch (const dihedra::Json::exception& e) {
    throw dihedra::Error(dihedra::ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

#define DIHEDRA_NULL_CHECK(p)                                        \
  do {                                                               \
    if ((p) == nullptr) return set_error(DIHEDRA_ERR_NULL, #p " is NULL"); \
  } while (0)

extern "C" {

const char* dihedra_version(void) { return "1.0.0"; }

const char* dihedra_last_error(void) { return g_last_error.c_str(); }

const char* dihedra_status_name(dihedra_status status) {
  if (status == DIHEDRA_OK) return "ok";
  if (status == DIHEDRA_ERR_NULL) return "null-pointer";
  if (status >= DIHEDRA_ERR_INVALID_ARGUMENT && status <= DIHEDRA_ERR_INTERNAL)
    return dihedra::error_code_name(static_cast<dihedra::ErrorCode>(status));
  return "unknown";
}

void dihedra_string_free(char* s) { std::free(s); }

void dihedra_oracle_default_options(dihedra_oracle_options* opts) {
  if (!opts) return;
  dihedra::OracleOptions d;
  opts->max_group_order = d.max_group_order;
  opts->max_generators = d.max_generators;
  opts->jobs = d.jobs;
}

dihedra_status dihedra_geosig_parse(const char* text, long long n_hint, dihedra_geosig** out) {
  DIHEDRA_NULL_CHECK(text);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] {
    std::optional<dihedra::Int> hint;
    if (n_hint != 0) hint = n_hint;
    *out = new dihedra_geosig{dihedra::parse_geometric_signature(text, hint)};
  });
}

dihedra_status dihedra_geosig_from_json(const char* json, dihedra_geosig** out) {
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_geosig{dihedra::geosig_from_json(parse_json(json))}; });
}

void dihedra_geosig_free(dihedra_geosig* gs) { delete gs; }

dihedra_status dihedra_geosig_to_string(const dihedra_geosig* gs, char** out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_string(gs->value)); });
}

dihedra_status dihedra_geosig_to_json(const dihedra_geosig* gs, char** out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_json(gs->value).dump()); });
}

dihedra_status dihedra_geosig_plain_string(const dihedra_geosig* gs, char** out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_string(dihedra::plain_signature(gs->value))); });
}

dihedra_status dihedra_geosig_n(const dihedra_geosig* gs, long long* out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  *out = gs->value.n;
  return DIHEDRA_OK;
}

dihedra_status dihedra_geosig_genus(const dihedra_geosig* gs, long long* out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dihedra::genus(gs->value); });
}

dihedra_status dihedra_character_from_json(const char* json, dihedra_character** out) {
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_character{dihedra::character_from_json(parse_json(json))}; });
}

void dihedra_character_free(dihedra_character* v) { delete v; }

dihedra_status dihedra_character_to_string(const dihedra_character* v, char** out) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_string(v->value)); });
}

dihedra_status dihedra_character_to_json(const dihedra_character* v, char** out) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_json(v->value).dump()); });
}

dihedra_status dihedra_character_dimension(const dihedra_character* v, long long* out) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = v->value.dimension(); });
}

dihedra_status dihedra_analytic_from_geosig(const dihedra_geosig* gs, dihedra_character** out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_character{dihedra::analytic_from_geosig(gs->value)}; });
}

dihedra_status dihedra_geosig_from_analytic(const dihedra_character* v, dihedra_geosig** out) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_geosig{dihedra::geosig_from_analytic(v->value)}; });
}

dihedra_status dihedra_is_realizable(const dihedra_geosig* gs, int allow_low_genus, int* out_realizable, char** out_reason) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out_realizable);
  return guard([&] {
    auto v = dihedra::is_realizable(gs->value, allow_low_genus != 0);
    *out_realizable = v.ok ? 1 : 0;
    if (out_reason) *out_reason = v.ok ? nullptr : dup(v.reason);
  });
}

dihedra_status dihedra_is_analytic_representation(const dihedra_character* v, int allow_low_genus, int* out_ok, char** out_reason) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out_ok);
  return guard([&] {
    auto verdict = dihedra::is_analytic_representation(v->value, allow_low_genus != 0);
    *out_ok = verdict.ok ? 1 : 0;
    if (out_reason) *out_reason = verdict.ok ? nullptr : dup(verdict.reason);
  });
}

dihedra_status dihedra_generating_vector(const dihedra_geosig* gs, int allow_low_genus, dihedra_genvec** out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_genvec{dihedra::generating_vector(gs->value, allow_low_genus != 0)}; });
}

dihedra_status dihedra_genvec_from_json(const char* json, dihedra_genvec** out) {
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_genvec{dihedra::genvec_from_json(parse_json(json))}; });
}

void dihedra_genvec_free(dihedra_genvec* v) { delete v; }

dihedra_status dihedra_genvec_to_string(const dihedra_genvec* v, char** out) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_string(v->value)); });
}

dihedra_status dihedra_genvec_to_json(const dihedra_genvec* v, char** out) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_json(v->value).dump()); });
}

dihedra_status dihedra_verify_ske(const dihedra_genvec* v, const char* plain_signature, int* out_ok) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(plain_signature);
  DIHEDRA_NULL_CHECK(out_ok);
  return guard([&] { *out_ok = dihedra::verify_ske(v->value, dihedra::parse_plain_signature(plain_signature)) ? 1 : 0; });
}

dihedra_status dihedra_geosig_of_ske(const dihedra_genvec* v, dihedra_geosig** out) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_geosig{dihedra::geosig_of_ske(v->value)}; });
}

dihedra_status dihedra_chevalley_weil(const dihedra_genvec* v, dihedra_character** out) {
  DIHEDRA_NULL_CHECK(v);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_character{dihedra::chevalley_weil(v->value)}; });
}

dihedra_status dihedra_oracle_enumerate(long long n, const char* plain_signature, const dihedra_oracle_options* opts, dihedra_ske_list** out) {
  DIHEDRA_NULL_CHECK(plain_signature);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] {
    dihedra::OracleOptions o;
    if (opts) {
      o.max_group_order = opts->max_group_order;
      o.max_generators = opts->max_generators;
      o.jobs = opts->jobs;
    }
    auto records = dihedra::enumerate_skes(n, dihedra::parse_plain_signature(plain_signature), o);
    *out = new dihedra_ske_list{std::move(records)};
  });
}

void dihedra_ske_list_free(dihedra_ske_list* list) { delete list; }

dihedra_status dihedra_ske_list_size(const dihedra_ske_list* list, size_t* out) {
  DIHEDRA_NULL_CHECK(list);
  DIHEDRA_NULL_CHECK(out);
  *out = list->records.size();
  return DIHEDRA_OK;
}

dihedra_status dihedra_ske_list_record_json(const dihedra_ske_list* list, size_t index, char** out) {
  DIHEDRA_NULL_CHECK(list);
  DIHEDRA_NULL_CHECK(out);
  if (index >= list->records.size()) return set_error(DIHEDRA_ERR_INVALID_ARGUMENT, "record index out of range");
  return guard([&] { *out = dup(dihedra::to_json(list->records[index]).dump()); });
}

dihedra_status dihedra_ske_list_record_string(const dihedra_ske_list* list, size_t index, char** out) {
  DIHEDRA_NULL_CHECK(list);
  DIHEDRA_NULL_CHECK(out);
  if (index >= list->records.size()) return set_error(DIHEDRA_ERR_INVALID_ARGUMENT, "record index out of range");
  return guard([&] {
    const auto& r = list->records[index];
    *out = dup(dihedra::to_string(r.vector) + "  " + dihedra::to_string(r.geosig) + "  " + dihedra::to_string(r.analytic));
  });
}

dihedra_status dihedra_full_decomposition(const dihedra_geosig* gs, dihedra_decomposition** out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_decomposition{dihedra::full_decomposition(gs->value)}; });
}

dihedra_status dihedra_quotient_decomposition(const dihedra_geosig* gs, const char* sub, dihedra_decomposition** out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_decomposition{dihedra::quotient_decomposition(gs->value, subgroup(gs, sub))}; });
}

dihedra_status dihedra_prym_decomposition(const dihedra_geosig* gs, const char* cover, const char* base, dihedra_decomposition** out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] {
    *out = new dihedra_decomposition{dihedra::prym_decomposition(gs->value, subgroup(gs, cover), subgroup(gs, base))};
  });
}

void dihedra_decomposition_free(dihedra_decomposition* d) { delete d; }

dihedra_status dihedra_decomposition_to_string(const dihedra_decomposition* d, char** out) {
  DIHEDRA_NULL_CHECK(d);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_string(d->value)); });
}

dihedra_status dihedra_decomposition_to_json(const dihedra_decomposition* d, char** out) {
  DIHEDRA_NULL_CHECK(d);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dup(dihedra::to_json(d->value).dump()); });
}

dihedra_status dihedra_decomposition_dimension(const dihedra_decomposition* d, long long* out) {
  DIHEDRA_NULL_CHECK(d);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = d->value.total_dimension(); });
}

dihedra_status dihedra_quotient_genus(const dihedra_geosig* gs, const char* sub, long long* out) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dihedra::quotient_genus(gs->value, subgroup(gs, sub)); });
}

dihedra_status dihedra_prym_realization(const dihedra_geosig* gs, long long q, int* out_found, char** out_json) {
  DIHEDRA_NULL_CHECK(gs);
  DIHEDRA_NULL_CHECK(out_found);
  return guard([&] {
    auto w = dihedra::prym_realization(gs->value, q);
    *out_found = w ? 1 : 0;
    if (out_json) *out_json = w ? dup(dihedra::to_json(*w).dump()) : nullptr;
  });
}

dihedra_status dihedra_is_prym_affordable_group(long long n, int* out) {
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = dihedra::is_prym_affordable_group(n) ? 1 : 0; });
}

dihedra_status dihedra_classify_complete(long long n, int jobs, dihedra_table** out) {
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_table{dihedra::classify_complete(n, jobs), false, 0}; });
}

dihedra_status dihedra_classify_kdec(long long n, long long k, long long genus_bound, int jobs, dihedra_table** out) {
  DIHEDRA_NULL_CHECK(out);
  return guard([&] { *out = new dihedra_table{dihedra::classify_k_decompositions(n, k, genus_bound, jobs), true, k}; });
}

void dihedra_table_free(dihedra_table* t) { delete t; }

dihedra_status dihedra_table_size(const dihedra_table* t, size_t* out) {
  DIHEDRA_NULL_CHECK(t);
  DIHEDRA_NULL_CHECK(out);
  *out = t->rows.size();
  return DIHEDRA_OK;
}

dihedra_status dihedra_table_row(const dihedra_table* t, size_t index, long long* out_genus, char** out_geosig, char** out_decomposition) {
  DIHEDRA_NULL_CHECK(t);
  if (index >= t->rows.size()) return set_error(DIHEDRA_ERR_INVALID_ARGUMENT, "row index out of range");
  return guard([&] {
    const auto& row = t->rows[index];
    if (out_genus) *out_genus = row.genus;
    if (out_geosig) *out_geosig = dup(dihedra::to_string(row.geosig));
    if (out_decomposition) *out_decomposition = dup(dihedra::to_string(row.decomposition));
  });
}

dihedra_status dihedra_table_row_json(const dihedra_table* t, size_t index, char** out) {
  DIHEDRA_NULL_CHECK(t);
  DIHEDRA_NULL_CHECK(out);
  if (index >= t->rows.size()) return set_error(DIHEDRA_ERR_INVALID_ARGUMENT, "row index out of range");
  return guard([&] {
    std::optional<dihedra::Int> k;
    if (t->has_k) k = t->k;
    *out = dup(dihedra::to_json(t->rows[index], k).dump());
  });
}

dihedra_status dihedra_selftest(const char* golden_dir, long long max_n, int jobs, int* out_passed, char** out_report) {
  DIHEDRA_NULL_CHECK(out_passed);
  return guard([&] {
    dihedra::SelftestOptions o;
    if (golden_dir) o.golden_dir = golden_dir;
    if (max_n > 0) o.max_n = max_n;
    o.jobs = jobs;
    auto report = dihedra::run_selftest(o);
    *out_passed = report.passed ? 1 : 0;
    if (out_report) {
      std::string text;
      for (const auto& line : report.lines) text += line + "\n";
      *out_report = dup(text);
    }
  });
}

}  // extern "C"
