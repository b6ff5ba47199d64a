#include "trikite/trikite.h"

#include <cstring>
#include <string>

#include "core/artifacts.hpp"

using namespace trikite;

struct tk_shape {
  geometry::TriangleShape v;
};
struct tk_diagonal_set {
  enumeration::DiagonalSet v;
};
struct tk_table {
  enumeration::ComplexityTable v;
};
struct tk_partition {
  partitions::PartitionSequence v;
};
struct tk_poly {
  trigpoly::TrigPoly v;
};

namespace {

thread_local std::string g_last_error;

tk_status status_of(ErrorCode code) { return static_cast<tk_status>(static_cast<int>(code)); }

template <class Fn>
tk_status guarded(Fn&& fn) {
  try {
    fn();
    return TK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TK_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

enumeration::PrecisionConfig precision_of(const tk_precision* p) {
  if (!p) return {};
  enumeration::PrecisionConfig cfg;
  cfg.hit_tol = p->hit_tol;
  cfg.safe_band = p->safe_band;
  cfg.exact_tol = p->exact_tol;
  cfg.use_extended = p->use_extended != 0;
  return cfg;
}

std::string dir_of(const char* cache_dir) { return cache_dir ? cache_dir : ""; }

void require(bool cond, const char* message) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, message);
}

geometry::Combinatorics moves_of(const char* const* moves, size_t n) {
  require(moves != nullptr || n == 0, "moves must not be NULL");
  geometry::Combinatorics comb;
  for (size_t i = 0; i < n; ++i)
    comb.moves.push_back(geometry::move_from_string(moves[i]));
  return comb;
}

}  // namespace

extern "C" {

const char* tk_status_name(tk_status status) {
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* tk_last_error(void) { return g_last_error.c_str(); }

void tk_string_free(char* s) { delete[] s; }

const char* tk_version(void) { return kCodeVersion.data(); }

tk_status tk_shape_create(double alpha, double beta, double delta, tk_shape** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = new tk_shape{geometry::make_triangle(alpha, beta, delta)};
  });
}

void tk_shape_destroy(tk_shape* shape) { delete shape; }

tk_status tk_shape_angles(const tk_shape* shape, double* alpha, double* beta, double* delta) {
  return guarded([&] {
    require(shape != nullptr, "shape must not be NULL");
    if (alpha) *alpha = shape->v.alpha;
    if (beta) *beta = shape->v.beta;
    if (delta) *delta = shape->v.delta;
  });
}

void tk_precision_default(tk_precision* out) {
  if (!out) return;
  enumeration::PrecisionConfig cfg;
  out->hit_tol = cfg.hit_tol;
  out->safe_band = cfg.safe_band;
  out->exact_tol = cfg.exact_tol;
  out->use_extended = cfg.use_extended ? 1 : 0;
}

tk_status tk_enumerate(const tk_shape* shape, int start_vertex, int n_max,
                       const tk_precision* precision, tk_diagonal_set** out) {
  return guarded([&] {
    require(shape && out, "shape and out must not be NULL");
    *out = new tk_diagonal_set{
        enumeration::enumerate_diagonals(shape->v, start_vertex, n_max, precision_of(precision))};
  });
}

tk_status tk_enumerate_brute(const tk_shape* shape, int start_vertex, int n_max,
                             const tk_precision* precision, tk_diagonal_set** out) {
  return guarded([&] {
    require(shape && out, "shape and out must not be NULL");
    *out = new tk_diagonal_set{enumeration::brute_force_diagonals(shape->v, start_vertex, n_max,
                                                                  precision_of(precision))};
  });
}

void tk_diagonal_set_destroy(tk_diagonal_set* set) { delete set; }

size_t tk_diagonal_set_size(const tk_diagonal_set* set) {
  return set ? set->v.records.size() : 0;
}

tk_status tk_diagonal_set_get(const tk_diagonal_set* set, size_t index, tk_diagonal* out) {
  return guarded([&] {
    require(set && out, "set and out must not be NULL");
    require(index < set->v.records.size(), "record index out of range");
    const auto& r = set->v.records[index];
    out->direction = r.direction;
    out->end_direction = r.end_direction;
    out->length = r.geometric_length;
    out->reflections = r.reflections;
    out->start_vertex = r.start_vertex;
    out->end_vertex = r.end_vertex;
    out->warning = r.precision_warning ? 1 : 0;
  });
}

tk_status tk_diagonal_set_edges(const tk_diagonal_set* set, size_t index, int* buf, size_t cap,
                                size_t* out_len) {
  return guarded([&] {
    require(set && out_len, "set and out_len must not be NULL");
    require(index < set->v.records.size(), "record index out of range");
    const auto& edges = set->v.records[index].edges;
    *out_len = edges.size();
    require(buf != nullptr || cap == 0, "buf must not be NULL");
    for (size_t i = 0; i < edges.size() && i < cap; ++i) buf[i] = edges[i];
  });
}

tk_status tk_diagonal_set_to_json(const tk_diagonal_set* set, char** out_json) {
  return guarded([&] {
    require(set && out_json, "set and out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(artifacts::set_to_json(set->v)));
  });
}

tk_status tk_diagonal_set_from_json(const char* json_text, tk_diagonal_set** out) {
  return guarded([&] {
    require(json_text && out, "json_text and out must not be NULL");
    *out = new tk_diagonal_set{artifacts::set_from_json(artifacts::json::parse(json_text))};
  });
}

tk_status tk_diagonal_sets_compare(const tk_diagonal_set* a, const tk_diagonal_set* b,
                                   double tol, int* out_equal, double* out_max_gap) {
  return guarded([&] {
    require(a && b && out_equal, "a, b and out_equal must not be NULL");
    auto cmp = enumeration::compare_sets(a->v, b->v, tol);
    *out_equal = cmp.equal ? 1 : 0;
    if (out_max_gap) *out_max_gap = cmp.max_direction_gap;
  });
}

tk_status tk_table_per_vertex(const tk_diagonal_set* set, tk_table** out) {
  return guarded([&] {
    require(set && out, "set and out must not be NULL");
    *out = new tk_table{enumeration::per_vertex_table(set->v)};
  });
}

tk_status tk_table_global(const tk_diagonal_set* const* sets, size_t count, int n_max,
                          tk_table** out) {
  return guarded([&] {
    require(sets && out, "sets and out must not be NULL");
    std::vector<enumeration::DiagonalSet> all;
    for (size_t i = 0; i < count; ++i) {
      require(sets[i] != nullptr, "sets entries must not be NULL");
      all.push_back(sets[i]->v);
    }
    *out = new tk_table{enumeration::global_table(all, n_max)};
  });
}

tk_status tk_table_from_counts(const uint64_t* counts, size_t len, tk_table** out) {
  return guarded([&] {
    require(counts && out && len > 0, "counts must be a nonempty array");
    *out = new tk_table{
        enumeration::table_from_counts(std::span(counts, len), "caller-supplied")};
  });
}

void tk_table_destroy(tk_table* table) { delete table; }

size_t tk_table_len(const tk_table* table) { return table ? table->v.counts.size() : 0; }

uint64_t tk_table_count(const tk_table* table, size_t n) {
  if (!table || n >= table->v.counts.size()) return 0;
  return table->v.counts[n];
}

tk_status tk_trace_ray(const tk_shape* shape, int start_vertex, double direction,
                       int max_reflections, const tk_precision* precision,
                       tk_trace_status* out_status, int* out_vertex, int* out_reflections,
                       double* out_length) {
  return guarded([&] {
    require(shape && out_status, "shape and out_status must not be NULL");
    auto res = enumeration::trace_ray(shape->v, start_vertex, direction, max_reflections,
                                      precision_of(precision));
    *out_status = static_cast<tk_trace_status>(static_cast<int>(res.status));
    if (out_vertex) *out_vertex = res.vertex;
    if (out_reflections) *out_reflections = res.reflections;
    if (out_length) *out_length = res.length;
  });
}

tk_status tk_partition_build(const tk_diagonal_set* set, tk_partition** out) {
  return guarded([&] {
    require(set && out, "set and out must not be NULL");
    *out = new tk_partition{partitions::build_partition_sequence(set->v)};
  });
}

void tk_partition_destroy(tk_partition* partition) { delete partition; }

size_t tk_partition_size(const tk_partition* partition) {
  return partition ? partition->v.points.size() : 0;
}

size_t tk_partition_count_up_to(const tk_partition* partition, int index) {
  return partition ? partition->v.count_up_to(index) : 0;
}

tk_status tk_partition_csv(const tk_partition* partition, char** out_csv) {
  return guarded([&] {
    require(partition && out_csv, "partition and out_csv must not be NULL");
    *out_csv = copy_string(artifacts::partition_csv(partition->v));
  });
}

tk_status tk_good_triples_json(const tk_partition* partition, int lo, int hi, char** out_json) {
  return guarded([&] {
    require(partition && out_json, "partition and out_json must not be NULL");
    auto triples = partitions::find_good_triples(partition->v, lo, hi);
    artifacts::json arr = artifacts::json::array();
    for (const auto& t : triples) arr.push_back(artifacts::good_triple_to_json(t));
    *out_json = copy_string(artifacts::dump_artifact(arr));
  });
}

tk_status tk_close_good_triple_json(const tk_partition* partition, const tk_table* per_vertex,
                                    int n, int c, char** out_json) {
  return guarded([&] {
    require(partition && per_vertex && out_json,
            "partition, per_vertex and out_json must not be NULL");
    auto res = partitions::find_close_good_triple(partition->v, per_vertex->v, n, c);
    artifacts::json j{{"triple", artifacts::good_triple_to_json(res.triple)},
                      {"bound", res.bound},
                      {"interval_width", res.interval_width},
                      {"qualifying_intervals", res.qualifying_intervals}};
    *out_json = copy_string(artifacts::dump_artifact(j));
  });
}

tk_status tk_ratio_jump(const tk_table* table, int n, int c, int k, double mu, int* out_found,
                        int* out_jump_n, double* out_ratio) {
  return guarded([&] {
    require(table && out_found, "table and out_found must not be NULL");
    auto jump = partitions::find_ratio_jump(table->v, n, c, k, mu);
    *out_found = jump.found ? 1 : 0;
    if (out_jump_n) *out_jump_n = jump.jump_n;
    if (out_ratio) *out_ratio = jump.ratio;
  });
}

tk_status tk_poly_from_json(const char* json_text, tk_poly** out) {
  return guarded([&] {
    require(json_text && out, "json_text and out must not be NULL");
    *out = new tk_poly{artifacts::poly_from_json(artifacts::json::parse(json_text))};
  });
}

tk_status tk_poly_to_json(const tk_poly* poly, char** out_json) {
  return guarded([&] {
    require(poly && out_json, "poly and out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(artifacts::poly_to_json(poly->v)));
  });
}

void tk_poly_destroy(tk_poly* poly) { delete poly; }

int tk_poly_degree(const tk_poly* poly) { return poly ? poly->v.degree() : -1; }

tk_status tk_poly_mul(const tk_poly* a, const tk_poly* b, tk_poly** out) {
  return guarded([&] {
    require(a && b && out, "a, b and out must not be NULL");
    *out = new tk_poly{trigpoly::tp_mul(a->v, b->v)};
  });
}

tk_status tk_poly_eval(const tk_poly* poly, double alpha, double beta, double* out) {
  return guarded([&] {
    require(poly && out, "poly and out must not be NULL");
    *out = trigpoly::tp_eval(poly->v, alpha, beta);
  });
}

tk_status tk_symbolic_kite_json(const char* const* moves, size_t n_moves, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json must not be NULL");
    auto comb = moves_of(moves, n_moves);
    auto kite = symbolic::symbolic_unfold(comb);
    artifacts::json j{{"moves", artifacts::moves_to_json(comb)},
                      {"alpha_x", artifacts::poly_to_json(kite.alpha_x)},
                      {"alpha_y", artifacts::poly_to_json(kite.alpha_y)},
                      {"beta_x", artifacts::poly_to_json(kite.beta_x)},
                      {"beta_y", artifacts::poly_to_json(kite.beta_y)},
                      {"phi", {kite.phi.m, kite.phi.l}},
                      {"upper_freq", {kite.upper_freq().m, kite.upper_freq().l}},
                      {"lower_freq", {kite.lower_freq().m, kite.lower_freq().l}},
                      {"diagonal_degree", kite.diagonal_degree()}};
    *out_json = copy_string(artifacts::dump_artifact(j));
  });
}

tk_status tk_area_poly_from_moves(const char* const* moves, size_t n_moves,
                                  const int* kite_index, const int* choices, tk_poly** out) {
  return guarded([&] {
    require(kite_index && choices && out, "kite_index, choices and out must not be NULL");
    auto comb = moves_of(moves, n_moves);
    auto chain = symbolic::symbolic_unfold_chain(comb);
    std::array<symbolic::SymbolicVertex, 3> pts;
    for (int i = 0; i < 3; ++i) {
      require(kite_index[i] >= 0 && kite_index[i] < static_cast<int>(chain.size()),
              "kite_index out of range");
      require(choices[i] >= 0 && choices[i] <= 3, "choices must be in [0, 3]");
      pts[i] = symbolic::vertex_numerators(chain[kite_index[i]],
                                           static_cast<symbolic::VertexChoice>(choices[i]));
    }
    *out = new tk_poly{symbolic::area_polynomial(pts[0], pts[1], pts[2])};
  });
}

tk_status tk_sublevel_fraction(const tk_poly* poly, double eps, uint64_t seed, uint64_t samples,
                               int threads, double* out_fraction, double* out_standard_error) {
  return guarded([&] {
    require(poly && out_fraction, "poly and out_fraction must not be NULL");
    measure::SamplerConfig cfg{seed, samples, threads};
    auto est = measure::sublevel_fraction(poly->v, eps, cfg);
    *out_fraction = est.fraction;
    if (out_standard_error) *out_standard_error = est.standard_error;
  });
}

double tk_mu_star(void) { return analysis::solve_mu_star(); }

tk_status tk_feasibility(double mu, double epsilon, double gamma, int* out_feasible) {
  return guarded([&] {
    require(out_feasible != nullptr, "out_feasible must not be NULL");
    *out_feasible = analysis::check_feasibility({mu, epsilon, gamma}).feasible ? 1 : 0;
  });
}

tk_status tk_growth_exponent(const tk_table* table, int n_lo, int n_hi, double* out_exponent,
                             double* out_residual) {
  return guarded([&] {
    require(table && out_exponent, "table and out_exponent must not be NULL");
    auto fit = analysis::growth_exponent(table->v, n_lo, n_hi);
    *out_exponent = fit.exponent;
    if (out_residual) *out_residual = fit.residual;
  });
}

/* --- runs ------------------------------------------------------------------------ */

tk_status tk_run_enumerate(const tk_shape* shape, int n_max, const tk_precision* precision,
                           int with_oracle, const char* cache_dir, int threads,
                           char** out_json) {
  return guarded([&] {
    require(shape && out_json, "shape and out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(
        artifacts::run_enumerate(shape->v, n_max, precision_of(precision), with_oracle != 0,
                                 dir_of(cache_dir), threads)));
  });
}

tk_status tk_run_partitions(const tk_shape* shape, int n_max, int vertex,
                            const tk_precision* precision, const char* cache_dir,
                            char** out_json) {
  return guarded([&] {
    require(shape && out_json, "shape and out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(artifacts::run_partitions(
        shape->v, n_max, vertex, precision_of(precision), dir_of(cache_dir))));
  });
}

tk_status tk_run_good_triples(const tk_shape* shape, int n_max, int vertex, int lo, int hi,
                              const tk_precision* precision, const char* cache_dir,
                              char** out_json) {
  return guarded([&] {
    require(shape && out_json, "shape and out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(artifacts::run_good_triples(
        shape->v, n_max, vertex, lo, hi, precision_of(precision), dir_of(cache_dir))));
  });
}

tk_status tk_run_lemma22(const tk_shape* shape, int n_max, int vertex, const int* fixture_cs,
                         size_t n_fixtures, uint64_t seed, const tk_precision* precision,
                         const char* cache_dir, char** out_json) {
  return guarded([&] {
    require(shape && out_json, "shape and out_json must not be NULL");
    require(fixture_cs != nullptr || n_fixtures == 0, "fixture_cs must not be NULL");
    std::vector<int> cs(fixture_cs, fixture_cs + n_fixtures);
    *out_json = copy_string(artifacts::dump_artifact(artifacts::run_lemma22(
        shape->v, n_max, vertex, cs, seed, precision_of(precision), dir_of(cache_dir))));
  });
}

tk_status tk_run_symbolic_check(size_t count, int max_kites, int pairs, uint64_t seed,
                                char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "out_json must not be NULL");
    *out_json = copy_string(
        artifacts::dump_artifact(artifacts::run_symbolic_check(count, max_kites, pairs, seed)));
  });
}

tk_status tk_run_area_poly(const tk_shape* shape, int n_max, int vertex, size_t samples,
                           int max_moves, int pairs, uint64_t seed,
                           const tk_precision* precision, const char* cache_dir,
                           char** out_json) {
  return guarded([&] {
    require(shape && out_json, "shape and out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(
        artifacts::run_area_poly(shape->v, n_max, vertex, samples, max_moves, pairs, seed,
                                 precision_of(precision), dir_of(cache_dir))));
  });
}

tk_status tk_run_measure_decay(const int* degrees, size_t n_degrees, double rate, double c_ref,
                               size_t family_size, uint64_t samples, uint64_t seed, int threads,
                               char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "out_json must not be NULL");
    require(degrees != nullptr || n_degrees == 0, "degrees must not be NULL");
    std::vector<int> ds(degrees, degrees + n_degrees);
    *out_json = copy_string(artifacts::dump_artifact(
        artifacts::run_measure_decay(ds, rate, c_ref, family_size, samples, seed, threads)));
  });
}

tk_status tk_run_constants(char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(artifacts::run_constants()));
  });
}

tk_status tk_run_report(const tk_shape* shape, int n_max, double mu, double epsilon, int fit_lo,
                        int fit_hi, const tk_precision* precision, const char* cache_dir,
                        int threads, char** out_json) {
  return guarded([&] {
    require(shape && out_json, "shape and out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(
        artifacts::run_report(shape->v, n_max, mu, epsilon, fit_lo, fit_hi,
                              precision_of(precision), dir_of(cache_dir), threads)));
  });
}

tk_status tk_run_verify_lemma21(int c, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "out_json must not be NULL");
    *out_json = copy_string(artifacts::dump_artifact(artifacts::run_verify_lemma21(c)));
  });
}

}  // extern "C"
