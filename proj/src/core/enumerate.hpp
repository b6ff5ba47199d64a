#ifndef TRIKITE_CORE_ENUMERATE_HPP
#define TRIKITE_CORE_ENUMERATE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/geometry.hpp"

namespace trikite::enumeration {

/// Tolerance policy for vertex-hit and window-membership decisions. All
/// margins are distance-scaled (radians times segment length). Events with a
/// margin inside [-safe_band, safe_band] are re-decided at extended precision
/// (>= 100-bit mantissa); an extended margin within exact_tol * depth of zero
/// is below the resolution floor (an exact or double-broken coincidence) and
/// counts as ambiguous rather than as a record.
struct PrecisionConfig {
  double hit_tol = 1e-12;    // scaled by corridor depth
  double safe_band = 1e-6;
  double exact_tol = 1e-12;  // extended-precision floor, scaled by depth
  bool use_extended = true;
};

/// One generalized diagonal from start_vertex: a billiard segment that leaves
/// the vertex, reflects `reflections` times and terminates at a vertex.
struct DiagonalRecord {
  int start_vertex;
  int end_vertex;
  double direction;         // local angle in the open sector at start_vertex
  double end_direction;     // local angle of the reversed traversal at end_vertex
  int reflections;          // discrete length, >= 1
  double geometric_length;
  std::vector<int> edges;   // crossed edges (labeled by opposite vertex), size == reflections
  bool precision_warning = false;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t extended_checks = 0;
  std::uint64_t ambiguous_events = 0;
  std::uint64_t near_misses = 0;
  std::uint64_t warnings = 0;
};

struct DiagonalSet {
  geometry::TriangleShape shape;
  int start_vertex = 0;
  int n_max = 0;
  PrecisionConfig precision;
  std::string method;  // "pruned" or "brute"
  std::vector<DiagonalRecord> records;  // sorted by direction
  EnumerationStats stats;
};

/// Corridor-pruned depth-first enumeration of all diagonals with
/// 1 <= reflections <= n_max from start_vertex.
DiagonalSet enumerate_diagonals(const geometry::TriangleShape& shape, int start_vertex,
                                int n_max, const PrecisionConfig& precision = {});

/// Unpruned oracle: walks every edge-reflection sequence and keeps the vertex
/// images visible from start_vertex through the whole unfolded corridor.
/// Throws BudgetExceeded for n_max > 12.
DiagonalSet brute_force_diagonals(const geometry::TriangleShape& shape, int start_vertex,
                                  int n_max, const PrecisionConfig& precision = {});

struct SetComparison {
  bool equal = false;
  std::size_t left_size = 0, right_size = 0;
  double max_direction_gap = 0.0;
  double max_length_gap = 0.0;
  std::string detail;  // empty when equal
};

/// Record-for-record comparison after sorting; directions must agree within
/// tol and combinatorics exactly.
SetComparison compare_sets(const DiagonalSet& a, const DiagonalSet& b, double tol);

// --- complexity tables -------------------------------------------------------

struct ComplexityTable {
  std::vector<std::uint64_t> counts;  // counts[n] = P_n for n = 0..n_max
  std::string convention;

  int n_max() const { return static_cast<int>(counts.size()) - 1; }
  std::uint64_t at(int n) const;
};

ComplexityTable per_vertex_table(const DiagonalSet& set);

/// Undirected global count: a diagonal found from both endpoints is
/// deduplicated by its unordered endpoint (vertex, direction) pair.
ComplexityTable global_table(std::span<const DiagonalSet> sets, int n_max);

ComplexityTable table_from_counts(std::span<const std::uint64_t> counts, std::string convention);

// --- physical ray tracing ----------------------------------------------------

enum class TraceStatus { Hit, Survived, Ambiguous };

struct TraceResult {
  TraceStatus status = TraceStatus::Ambiguous;
  int vertex = -1;       // hit vertex label
  int reflections = 0;   // reflections completed before the hit / survival count
  double length = 0.0;
  std::string note;
};

/// Steps the ray by physical reflection inside the fixed triangle.
/// Independent of the unfolding code path; used to validate records.
TraceResult trace_ray(const geometry::TriangleShape& shape, int start_vertex,
                      double direction, int max_reflections,
                      const PrecisionConfig& precision = {});

/// Count of records that re-trace to the claimed vertex at the claimed step.
struct RetraceStats {
  std::size_t checked = 0, passed = 0, ambiguous = 0;
};
RetraceStats retrace_records(const DiagonalSet& set, const PrecisionConfig& precision = {});

/// Random-direction orbit samples for the length-comparability diagnostic.
std::vector<geometry::OrbitSample> sample_orbits(const geometry::TriangleShape& shape,
                                                 std::size_t count, int max_reflections,
                                                 std::uint64_t seed);

// --- corridors ----------------------------------------------------------------

/// The unfolded corridor of a single direction, followed to `depth` edges.
struct Corridor {
  std::vector<geometry::TriangleFrame> frames;  // frames[0] = base copy
  std::vector<int> edges;
};

/// Follows the corridor windows containing `direction`; throws AmbiguousHit if
/// the direction meets a window boundary (a cutting point) before `depth`.
Corridor corridor_of_direction(const geometry::TriangleShape& shape, int start_vertex,
                               double direction, int depth,
                               const PrecisionConfig& precision = {});

/// Kite moves of a triangle corridor: one rotation per crossed non-fixed edge.
struct KitePath {
  geometry::Combinatorics moves;
  std::vector<int> kite_index;  // per frame: moves applied before that frame
};

KitePath kite_path(const geometry::TriangleShape& shape, const Corridor& corridor);

/// Which kite vertex the image of base vertex `label` is, inside a frame of
/// the given parity (+1 = even number of reflections).
int kite_vertex_choice(int label, int parity);

}  // namespace trikite::enumeration

#endif  // TRIKITE_CORE_ENUMERATE_HPP
