#ifndef TRIKITE_CORE_ARTIFACTS_HPP
#define TRIKITE_CORE_ARTIFACTS_HPP

#include <json.hpp>

#include <cstdint>
#include <string>

#include "core/analysis.hpp"
#include "core/enumerate.hpp"
#include "core/geometry.hpp"
#include "core/measure.hpp"
#include "core/partition.hpp"
#include "core/symbolic.hpp"

namespace trikite::artifacts {

using json = nlohmann::json;

// --- serialization ------------------------------------------------------------

json shape_to_json(const geometry::TriangleShape& shape);
geometry::TriangleShape shape_from_json(const json& j);

json moves_to_json(const geometry::Combinatorics& comb);
geometry::Combinatorics moves_from_json(const json& j);

json kite_to_json(const geometry::KiteFrame& frame);

json set_to_json(const enumeration::DiagonalSet& set);
enumeration::DiagonalSet set_from_json(const json& j);

json poly_to_json(const trigpoly::TrigPoly& p);
trigpoly::TrigPoly poly_from_json(const json& j);

json table_to_json(const enumeration::ComplexityTable& table);

std::string partition_csv(const partitions::PartitionSequence& seq);

json good_triple_to_json(const partitions::GoodTriple& t);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_artifact(const json& body);

// --- enumeration cache ----------------------------------------------------------

std::uint64_t enumeration_cache_key(const geometry::TriangleShape& shape, int vertex, int n_max,
                                    const enumeration::PrecisionConfig& precision);

/// Reads the per-(shape, vertex, n_max) cache entry when every key field
/// (angles bit-exact, tolerances, code version) matches; enumerates and writes
/// the entry otherwise. Empty cache_dir disables caching.
enumeration::DiagonalSet load_or_enumerate(const geometry::TriangleShape& shape, int vertex,
                                           int n_max,
                                           const enumeration::PrecisionConfig& precision,
                                           const std::string& cache_dir,
                                           bool* cache_hit = nullptr);

// --- experiment runs --------------------------------------------------------------
// Each returns the artifact body; callers wrap it with run metadata.

json run_enumerate(const geometry::TriangleShape& shape, int n_max,
                   const enumeration::PrecisionConfig& precision, bool with_oracle,
                   const std::string& cache_dir, int threads);

json run_partitions(const geometry::TriangleShape& shape, int n_max, int vertex,
                    const enumeration::PrecisionConfig& precision, const std::string& cache_dir);

json run_good_triples(const geometry::TriangleShape& shape, int n_max, int vertex, int lo, int hi,
                      const enumeration::PrecisionConfig& precision, const std::string& cache_dir);

json run_lemma22(const geometry::TriangleShape& shape, int n_max, int vertex,
                 const std::vector<int>& fixture_cs, std::uint64_t seed,
                 const enumeration::PrecisionConfig& precision, const std::string& cache_dir);

json run_symbolic_check(std::size_t count, int max_kites, int pairs, std::uint64_t seed);

json run_area_poly(const geometry::TriangleShape& shape, int n_max, int vertex,
                   std::size_t samples, int max_moves, int pairs, std::uint64_t seed,
                   const enumeration::PrecisionConfig& precision, const std::string& cache_dir);

json run_measure_decay(const std::vector<int>& degrees, double rate, double c_ref,
                       std::size_t family_size, std::uint64_t samples, std::uint64_t seed,
                       int threads);

json run_constants();

json run_report(const geometry::TriangleShape& shape, int n_max, double mu, double epsilon,
                int fit_lo, int fit_hi, const enumeration::PrecisionConfig& precision,
                const std::string& cache_dir, int threads);

json run_verify_lemma21(int c);

}  // namespace trikite::artifacts

#endif  // TRIKITE_CORE_ARTIFACTS_HPP
