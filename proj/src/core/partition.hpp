#ifndef TRIKITE_CORE_PARTITION_HPP
#define TRIKITE_CORE_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/enumerate.hpp"

namespace trikite::partitions {

using enumeration::ComplexityTable;
using enumeration::DiagonalSet;

/// A direction at the vertex that terminates on a vertex after `index`
/// reflections. record_id points into the generating DiagonalSet.
struct CuttingPoint {
  double angle;       // local angle inside the sector
  double normalized;  // angle / sector width, in (0, 1)
  int index;          // discrete length of the generating diagonal
  int record_id;
};

/// The indexed partition family xi_n of the vertex sector: xi_n is cut by all
/// points of index <= n, so the family is the single sorted point list viewed
/// through an index filter. Refinement xi_{n-1} <= xi_n is by construction.
struct PartitionSequence {
  int vertex = 0;
  double sector_width = 0.0;
  int max_index = 0;
  std::vector<CuttingPoint> points;  // sorted by angle
  std::vector<std::string> duplicate_warnings;

  std::size_t count_up_to(int index) const;
};

PartitionSequence build_partition_sequence(const DiagonalSet& set);

struct GoodTriple {
  int p, q, r;                 // indices, p < q < r
  double x_p, x_q, x_r;        // angles (local)
  int id_p, id_q, id_r;        // positions in PartitionSequence::points
  double witness_lo, witness_hi;
  double max_pairwise;         // normalized units
};

/// Every triple of cutting points with distinct indices p < q < r in [lo, hi]
/// such that x_r lies strictly between x_p and x_q and the open interval they
/// bound contains no other point of index <= r.
std::vector<GoodTriple> find_good_triples(const PartitionSequence& seq, int lo, int hi);

/// Independent re-check of the two conditions for a specific point triple.
bool is_good_position(const PartitionSequence& seq, int id_p, int id_q, int id_r);

struct PartitionAudit {
  bool refinement_ok = true;
  bool property1_ok = true;
  std::vector<std::string> property1_violations;  // never silently dropped
  std::vector<double> max_interval_by_index;      // normalized; nonincreasing
  bool density_proxy_ok = true;
};

PartitionAudit audit_partition(const PartitionSequence& seq);

// --- abstract insertion model --------------------------------------------------

/// Exhaustive verification of the good-triple threshold in the abstract
/// insertion model: states are index sequences in position order; one step may
/// insert at most one point into each current interval. Configurations with a
/// good triple keep it (later points carry larger indices), so triple-free
/// outcomes are exactly the leaves of the triple-free search.
struct Lemma21Variant {
  std::string name;
  int threshold = 0;            // 4 + 2c
  int max_points_reachable = 0; // over all processes, triples allowed
  int max_triple_free = 0;      // largest triple-free outcome found
  std::uint64_t states_visited = 0;
  bool claim_holds = false;     // no triple-free outcome reaches the threshold
  bool vacuous = false;         // threshold exceeds every reachable size
  bool witness_found = false;   // a triple-free outcome with 3 + 2c points
  std::vector<int> witness;     // triple-free outcome of size max_triple_free
};

struct Lemma21Report {
  int c = 0;
  Lemma21Variant from_empty;  // interval starts with no points
  Lemma21Variant seeded;      // interval starts with 3 points of distinct lower indices
  bool holds = false;
};

/// c is capped at 3 (state space doubles per step).
Lemma21Report verify_lemma_2_1(int c);

// --- ratio jump ------------------------------------------------------------------

struct RatioJump {
  bool found = false;
  int jump_n = 0;      // N = n + l*c
  int block = 0;       // l
  double ratio = 0.0;  // P_{N+c} / P_N
  bool growth_gate = false;  // P_n > e^{n^mu}
};

/// Smallest N = n + l*c, 1 <= l <= k-1, with P_{N+c}/P_N >= 4 + 2c. Also
/// evaluates the stretched-exponential gate P_n > e^{n^mu}.
RatioJump find_ratio_jump(const ComplexityTable& table, int n, int c, int k, double mu);

// --- close good triples -----------------------------------------------------------

struct CloseTripleResult {
  GoodTriple triple;
  double interval_lo = 0, interval_hi = 0;  // the xi_n interval searched (normalized)
  double interval_width = 0;                // normalized
  double bound = 0;                         // e^c / P_n
  int qualifying_intervals = 0;
};

/// Searches the xi_n intervals holding at least 4+2c points of index in
/// (n, n+c] for a good triple with pairwise distances <= e^c/P_n. Throws
/// HypothesisNotMet when the preconditions fail and SearchFailed when they
/// hold but no triple turns up (which would falsify the bound on this data).
CloseTripleResult find_close_good_triple(const PartitionSequence& seq,
                                         const ComplexityTable& per_vertex, int n, int c);

/// Hypothesis scan: all (n, c) with c >= 4, e^c < P_n, P_{n+c} >= (4+2c) P_n.
std::vector<std::pair<int, int>> scan_lemma22_hypotheses(const ComplexityTable& per_vertex);

/// Synthetic partition + table satisfying the close-triple preconditions for
/// the given c >= 4 (used to exercise the search away from desk-scale data).
struct Lemma22Fixture {
  PartitionSequence seq;
  ComplexityTable table;
  int n = 0;
  int c = 0;
};

Lemma22Fixture make_lemma22_fixture(int c, std::uint64_t seed);

}  // namespace trikite::partitions

#endif  // TRIKITE_CORE_PARTITION_HPP
