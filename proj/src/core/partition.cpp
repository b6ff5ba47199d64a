#include "core/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace trikite::partitions {

std::size_t PartitionSequence::count_up_to(int index) const {
  std::size_t n = 0;
  for (const CuttingPoint& p : points)
    if (p.index <= index) n++;
  return n;
}

PartitionSequence build_partition_sequence(const DiagonalSet& set) {
  PartitionSequence seq;
  seq.vertex = set.start_vertex;
  seq.sector_width = set.shape.angle_at(set.start_vertex);
  seq.max_index = set.n_max;

  constexpr double kDupTol = 1e-12;
  for (std::size_t i = 0; i < set.records.size(); ++i) {
    const auto& r = set.records[i];
    CuttingPoint pt{r.direction, r.direction / seq.sector_width, r.reflections,
                    static_cast<int>(i)};
    if (!seq.points.empty() && pt.angle - seq.points.back().angle < kDupTol) {
      // Keep the lower index; flag the collision instead of dropping it silently.
      CuttingPoint& prev = seq.points.back();
      seq.duplicate_warnings.push_back(
          "angles collide within tolerance: index " + std::to_string(prev.index) + " and " +
          std::to_string(pt.index) + " at angle " + format_full(pt.angle));
      if (pt.index < prev.index) prev = pt;
      continue;
    }
    seq.points.push_back(pt);
  }
  return seq;
}

namespace {

/// Inside the open position range (i, j): the least index, whether it is
/// attained once, and its position.
struct InsideScan {
  bool any = false;
  int min_index = 0;
  bool unique_min = true;
  int min_pos = -1;
};

template <class IndexAt>
InsideScan scan_inside(int i, int j, IndexAt&& index_at) {
  InsideScan s;
  for (int k = i + 1; k < j; ++k) {
    int idx = index_at(k);
    if (!s.any || idx < s.min_index) {
      s.any = true;
      s.min_index = idx;
      s.unique_min = true;
      s.min_pos = k;
    } else if (idx == s.min_index) {
      s.unique_min = false;
    }
  }
  return s;
}

constexpr double kTieTol = 1e-12;

}  // namespace

std::vector<GoodTriple> find_good_triples(const PartitionSequence& seq, int lo, int hi) {
  std::vector<GoodTriple> out;
  const auto& pts = seq.points;
  int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    if (pts[i].index < lo || pts[i].index > hi) continue;
    for (int j = i + 2; j < n; ++j) {
      if (pts[j].index < lo || pts[j].index > hi) continue;
      if (pts[i].index == pts[j].index) continue;
      auto s = scan_inside(i, j, [&](int k) { return pts[k].index; });
      if (!s.any || !s.unique_min) continue;
      int p = std::min(pts[i].index, pts[j].index);
      int q = std::max(pts[i].index, pts[j].index);
      int r = s.min_index;
      if (r <= q || r < lo || r > hi) continue;
      const CuttingPoint& mid = pts[s.min_pos];
      if (mid.angle - pts[i].angle < kTieTol || pts[j].angle - mid.angle < kTieTol) continue;
      GoodTriple t;
      t.p = p;
      t.q = q;
      t.r = r;
      bool i_is_p = pts[i].index == p;
      t.x_p = i_is_p ? pts[i].angle : pts[j].angle;
      t.x_q = i_is_p ? pts[j].angle : pts[i].angle;
      t.x_r = mid.angle;
      t.id_p = i_is_p ? i : j;
      t.id_q = i_is_p ? j : i;
      t.id_r = s.min_pos;
      t.witness_lo = pts[i].angle;
      t.witness_hi = pts[j].angle;
      t.max_pairwise = (pts[j].angle - pts[i].angle) / seq.sector_width;
      out.push_back(t);
    }
  }
  return out;
}

bool is_good_position(const PartitionSequence& seq, int id_p, int id_q, int id_r) {
  const auto& pts = seq.points;
  int n = static_cast<int>(pts.size());
  if (id_p < 0 || id_q < 0 || id_r < 0 || id_p >= n || id_q >= n || id_r >= n) return false;
  const CuttingPoint& a = pts[id_p];
  const CuttingPoint& b = pts[id_q];
  const CuttingPoint& c = pts[id_r];
  if (!(a.index < b.index && b.index < c.index)) return false;
  double lo = std::min(a.angle, b.angle), hi = std::max(a.angle, b.angle);
  if (!(c.angle > lo + kTieTol && c.angle < hi - kTieTol)) return false;
  for (const CuttingPoint& other : pts) {
    if (&other == &c) continue;
    if (other.angle > lo + kTieTol && other.angle < hi - kTieTol && other.index <= c.index)
      return false;
  }
  return true;
}

PartitionAudit audit_partition(const PartitionSequence& seq) {
  PartitionAudit audit;
  const auto& pts = seq.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].angle <= 0 || pts[i].angle >= seq.sector_width) audit.refinement_ok = false;
    if (i > 0 && pts[i].angle < pts[i - 1].angle) audit.refinement_ok = false;
  }

  // Property (1): each interval of xi_{n-1} holds at most one index-n point.
  for (int n = 1; n <= seq.max_index; ++n) {
    int interval = 0;
    int count_here = 0;
    for (const CuttingPoint& p : pts) {
      if (p.index < n) {
        interval++;
        count_here = 0;
      } else if (p.index == n) {
        count_here++;
        if (count_here > 1) {
          audit.property1_ok = false;
          audit.property1_violations.push_back(
              "interval " + std::to_string(interval) + " of xi_" + std::to_string(n - 1) +
              " holds " + std::to_string(count_here) + " points of index " + std::to_string(n));
        }
      }
    }
  }

  // Density proxy: the largest xi_n interval shrinks (weakly) as n grows.
  audit.max_interval_by_index.resize(seq.max_index + 1);
  for (int n = 0; n <= seq.max_index; ++n) {
    double prev = 0.0, widest = 0.0;
    for (const CuttingPoint& p : pts) {
      if (p.index > n) continue;
      widest = std::max(widest, p.angle - prev);
      prev = p.angle;
    }
    widest = std::max(widest, seq.sector_width - prev);
    audit.max_interval_by_index[n] = widest / seq.sector_width;
    if (n > 0 && audit.max_interval_by_index[n] > audit.max_interval_by_index[n - 1] + 1e-15)
      audit.density_proxy_ok = false;
  }
  return audit;
}

// --- abstract insertion model ----------------------------------------------------

namespace {

using State = std::vector<int>;  // indices in position order

bool has_good_triple(const State& s) {
  int n = static_cast<int>(s.size());
  for (int i = 0; i + 2 < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (s[i] == s[j]) continue;
      auto scan = scan_inside(i, j, [&](int k) { return s[k]; });
      if (!scan.any || !scan.unique_min) continue;
      if (scan.min_index > std::max(s[i], s[j])) return true;
    }
  }
  return false;
}

/// All states reachable from `state` in one step: every subset of the
/// len+1 gaps may receive one point of index `step`.
void expand(const State& state, int step, std::set<State>& out) {
  int gaps = static_cast<int>(state.size()) + 1;
  for (std::uint32_t mask = 0; mask < (1u << gaps); ++mask) {
    State next;
    next.reserve(state.size() + gaps);
    for (int g = 0; g < gaps; ++g) {
      if (mask & (1u << g)) next.push_back(step);
      if (g < static_cast<int>(state.size())) next.push_back(state[g]);
    }
    out.insert(std::move(next));
  }
}

Lemma21Variant run_variant(std::string name, const std::vector<State>& initials,
                           int initial_points, int c, int first_step) {
  Lemma21Variant v;
  v.name = std::move(name);
  v.threshold = 4 + 2 * c;

  int reachable = initial_points;
  for (int t = 0; t < c; ++t) reachable = 2 * reachable + 1;
  v.max_points_reachable = reachable;
  v.vacuous = v.threshold > reachable;

  // Breadth-first over triple-free states only: a good triple survives all
  // later insertions, so triple-free outcomes have triple-free histories.
  std::set<State> level;
  for (const State& s : initials)
    if (!has_good_triple(s)) level.insert(s);
  auto note = [&](const State& s) {
    v.states_visited++;
    int size = static_cast<int>(s.size());
    if (size > v.max_triple_free) {
      v.max_triple_free = size;
      v.witness = s;
    }
  };
  for (const State& s : level) note(s);
  for (int t = 0; t < c; ++t) {
    std::set<State> expanded;
    for (const State& s : level) expand(s, first_step + t, expanded);
    std::set<State> next;
    for (const State& s : expanded) {
      if (s.size() > 10 * static_cast<std::size_t>(v.threshold)) continue;  // unreachable guard
      if (!has_good_triple(s)) next.insert(s);
    }
    for (const State& s : next)
      if (!level.contains(s)) note(s);
    level = std::move(next);
  }
  v.claim_holds = v.max_triple_free < v.threshold;
  v.witness_found = v.max_triple_free >= 3 + 2 * c;
  return v;
}

}  // namespace

Lemma21Report verify_lemma_2_1(int c) {
  if (c < 1 || c > 3)
    throw Error(ErrorCode::InvalidArgument,
                "exhaustive verification supports c in {1, 2, 3}");
  Lemma21Report report;
  report.c = c;

  report.from_empty = run_variant("from_empty", {State{}}, 0, c, 1);

  // Seeded variant: the interval already holds 3 points with distinct earlier
  // indices, in each of the 3! arrival orders.
  std::vector<State> seeds;
  State perm{1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do { seeds.push_back(perm); } while (std::next_permutation(perm.begin(), perm.end()));
  report.seeded = run_variant("seeded3", seeds, 3, c, 4);

  report.holds = report.from_empty.claim_holds && report.seeded.claim_holds &&
                 report.seeded.witness_found;
  return report;
}

// --- ratio jump -------------------------------------------------------------------

RatioJump find_ratio_jump(const ComplexityTable& table, int n, int c, int k, double mu) {
  if (n < 0 || c < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 0, c, k >= 1");
  if (n + k * c > table.n_max())
    throw Error(ErrorCode::InvalidArgument, "table must cover n + k*c");
  RatioJump jump;
  if (table.at(n) > 0)
    jump.growth_gate = std::log(static_cast<double>(table.at(n))) > std::pow(n, mu);
  double threshold = 4.0 + 2.0 * c;
  for (int l = 1; l <= k - 1; ++l) {
    int N = n + l * c;
    std::uint64_t p_n = table.at(N);
    std::uint64_t p_nc = table.at(N + c);
    if (p_n == 0) continue;  // ratio undefined on empty prefixes
    double ratio = static_cast<double>(p_nc) / static_cast<double>(p_n);
    if (ratio >= threshold) {
      jump.found = true;
      jump.jump_n = N;
      jump.block = l;
      jump.ratio = ratio;
      return jump;
    }
  }
  return jump;
}

// --- close good triples -------------------------------------------------------------

CloseTripleResult find_close_good_triple(const PartitionSequence& seq,
                                         const ComplexityTable& per_vertex, int n, int c) {
  if (c < 4)
    throw Error(ErrorCode::HypothesisNotMet, "requires c >= 4, got c = " + std::to_string(c));
  if (n < 0 || n + c > per_vertex.n_max())
    throw Error(ErrorCode::InvalidArgument, "table must cover n + c");
  double p_n = static_cast<double>(per_vertex.at(n));
  double p_nc = static_cast<double>(per_vertex.at(n + c));
  if (std::exp(c) >= p_n)
    throw Error(ErrorCode::HypothesisNotMet,
                "requires e^c < P_n: e^" + std::to_string(c) + " = " + format_full(std::exp(c)) +
                    " vs P_n = " + format_full(p_n));
  if (p_nc < (4.0 + 2.0 * c) * p_n)
    throw Error(ErrorCode::HypothesisNotMet,
                "requires P_{n+c} >= (4+2c) P_n: " + format_full(p_nc) + " < " +
                    format_full((4.0 + 2.0 * c) * p_n));

  double bound = std::exp(c) / p_n;

  // xi_n intervals and the (n, n+c]-indexed points inside them.
  struct Interval {
    int first = 0, last = 0;  // positions of inside points
    double lo = 0, hi = 0;
    int count = 0;
  };
  std::vector<Interval> qualifying;
  const auto& pts = seq.points;
  int total = static_cast<int>(pts.size());
  int need = 4 + 2 * c;
  int pos = 0;
  double prev_angle = 0.0;
  while (pos <= total) {
    Interval iv;
    iv.lo = prev_angle;
    iv.first = pos;
    while (pos < total && pts[pos].index > n) {
      if (pts[pos].index <= n + c) iv.count++;
      pos++;
    }
    iv.last = pos;
    iv.hi = pos < total ? pts[pos].angle : seq.sector_width;
    if (iv.count >= need) qualifying.push_back(iv);
    if (pos < total) prev_angle = pts[pos].angle;
    pos++;
  }

  std::sort(qualifying.begin(), qualifying.end(),
            [](const Interval& a, const Interval& b) { return a.hi - a.lo < b.hi - b.lo; });

  CloseTripleResult result;
  result.bound = bound;
  result.qualifying_intervals = static_cast<int>(qualifying.size());

  for (const Interval& iv : qualifying) {
    for (int i = iv.first; i < iv.last; ++i) {
      if (pts[i].index <= n || pts[i].index > n + c) continue;
      for (int j = i + 2; j < iv.last; ++j) {
        if (pts[j].index <= n || pts[j].index > n + c) continue;
        if (pts[i].index == pts[j].index) continue;
        auto s = scan_inside(i, j, [&](int k) { return pts[k].index; });
        if (!s.any || !s.unique_min) continue;
        int q = std::max(pts[i].index, pts[j].index);
        if (s.min_index <= q || s.min_index > n + c) continue;
        double spread = (pts[j].angle - pts[i].angle) / seq.sector_width;
        if (spread > bound) continue;
        bool i_is_p = pts[i].index < pts[j].index;
        result.triple.p = std::min(pts[i].index, pts[j].index);
        result.triple.q = q;
        result.triple.r = s.min_index;
        result.triple.x_p = i_is_p ? pts[i].angle : pts[j].angle;
        result.triple.x_q = i_is_p ? pts[j].angle : pts[i].angle;
        result.triple.x_r = pts[s.min_pos].angle;
        result.triple.id_p = i_is_p ? i : j;
        result.triple.id_q = i_is_p ? j : i;
        result.triple.id_r = s.min_pos;
        result.triple.witness_lo = pts[i].angle;
        result.triple.witness_hi = pts[j].angle;
        result.triple.max_pairwise = spread;
        result.interval_lo = iv.lo / seq.sector_width;
        result.interval_hi = iv.hi / seq.sector_width;
        result.interval_width = (iv.hi - iv.lo) / seq.sector_width;
        return result;
      }
    }
  }
  throw Error(ErrorCode::SearchFailed,
              "hypotheses hold (P_n = " + format_full(p_n) + ", P_{n+c} = " + format_full(p_nc) +
                  ", c = " + std::to_string(c) + ", " + std::to_string(qualifying.size()) +
                  " qualifying intervals) but no close good triple exists; "
                  "this falsifies the close-triple bound on this data");
}

std::vector<std::pair<int, int>> scan_lemma22_hypotheses(const ComplexityTable& per_vertex) {
  std::vector<std::pair<int, int>> hits;
  for (int n = 1; n <= per_vertex.n_max(); ++n) {
    double p_n = static_cast<double>(per_vertex.at(n));
    if (p_n <= 0) continue;
    for (int c = 4; n + c <= per_vertex.n_max(); ++c) {
      if (std::exp(c) >= p_n) break;  // e^c only grows with c
      if (static_cast<double>(per_vertex.at(n + c)) >= (4.0 + 2.0 * c) * p_n)
        hits.emplace_back(n, c);
    }
  }
  return hits;
}

Lemma22Fixture make_lemma22_fixture(int c, std::uint64_t seed) {
  if (c < 4) throw Error(ErrorCode::InvalidArgument, "fixture needs c >= 4");
  Lemma22Fixture fx;
  fx.c = c;
  fx.n = 10;
  int p_n = static_cast<int>(std::ceil(std::exp(c))) + 4;

  SplitMix64 rng(seed);
  std::vector<double> base;
  base.reserve(p_n);
  for (int i = 0; i < p_n; ++i) base.push_back(rng.next_double());
  std::sort(base.begin(), base.end());

  fx.seq.vertex = 0;
  fx.seq.sector_width = 1.0;
  fx.seq.max_index = fx.n + c;
  for (double x : base) fx.seq.points.push_back({x, x, fx.n, -1});

  // Fill intervals with midpoint insertions step by step until the count
  // condition P_{n+c} >= (4+2c) P_n holds with slack.
  long long want = static_cast<long long>(4 + 2 * c) * p_n + 8 - p_n;
  std::vector<long long> added_by_step(c + 1, 0);
  long long added = 0;
  auto& pts = fx.seq.points;
  for (std::size_t iv = 0; iv + 1 <= static_cast<std::size_t>(p_n) && added < want; ++iv) {
    // Interval between base point iv-1 and iv (positions shift as we insert).
    for (int step = 1; step <= c && added < want; ++step) {
      // One pass: insert a midpoint into every current sub-interval of this
      // base interval that has no point of the current step yet.
      std::vector<std::pair<double, int>> local;  // (angle, index) inside
      double lo = 0, hi = 0;
      // Recompute bounds: find the iv-th gap between index-n points.
      std::size_t seen = 0;
      std::size_t k = 0;
      lo = 0.0;
      for (; k < pts.size(); ++k) {
        if (pts[k].index != fx.n) continue;
        if (seen == iv) break;
        seen++;
      }
      if (k < pts.size()) {
        hi = pts[k].angle;
        lo = 0.0;
        for (std::size_t b = k; b-- > 0;) {
          if (pts[b].index == fx.n) {
            lo = pts[b].angle;
            break;
          }
        }
      } else {
        continue;
      }
      for (const auto& p : pts)
        if (p.angle > lo && p.angle < hi) local.emplace_back(p.angle, p.index);
      std::vector<double> cuts{lo};
      for (auto& [a, idx] : local) cuts.push_back(a);
      cuts.push_back(hi);
      for (std::size_t g = 0; g + 1 < cuts.size() && added < want; ++g) {
        double mid = 0.5 * (cuts[g] + cuts[g + 1]);
        pts.push_back({mid, mid, fx.n + step, -1});
        added++;
        added_by_step[step]++;
      }
      std::sort(pts.begin(), pts.end(),
                [](const CuttingPoint& a, const CuttingPoint& b) { return a.angle < b.angle; });
    }
  }

  std::vector<std::uint64_t> counts(fx.n + c + 1, 0);
  for (int m = fx.n; m <= fx.n + c; ++m) counts[m] = fx.seq.count_up_to(m);
  fx.table = enumeration::table_from_counts(counts, "synthetic-lemma22-fixture");
  return fx;
}

}  // namespace trikite::partitions
