#include "core/enumerate.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace trikite::enumeration {

using geometry::TriangleShape;
using geometry::Vertex;

namespace {

using ExtReal = boost::multiprecision::cpp_bin_float_50;

template <class R>
R pi_of() {
  using std::acos;
  static const R value = acos(R(-1));
  return value;
}

template <class R>
R wrap_pi_r(const R& a) {
  using std::floor;
  const R pi = pi_of<R>();
  R r = a - 2 * pi * floor((a + pi) / (2 * pi));
  if (r >= pi) r -= 2 * pi;
  return r;
}

/// Shape geometry instantiated at a given precision; angles are the exact
/// double values widened, so both precisions describe the same triangle.
template <class R>
struct ShapeData {
  R alpha, beta;
  std::array<Vec2T<R>, 3> verts;
  std::array<R, 3> sector_ref;
  std::array<R, 3> sector_width;

  explicit ShapeData(const TriangleShape& shape)
      : alpha(shape.alpha), beta(shape.beta) {
    using std::atan2;
    using std::cos;
    using std::sin;
    R s = sin(alpha + beta);
    R r = sin(beta) / s;
    verts[0] = {R(0), R(0)};
    verts[1] = {R(1), R(0)};
    verts[2] = {r * cos(alpha), r * sin(alpha)};
    R gamma = pi_of<R>() - alpha - beta;
    std::array<R, 3> widths{alpha, beta, gamma};
    for (int v = 0; v < 3; ++v) {
      Vec2T<R> d = verts[(v + 1) % 3] - verts[v];
      sector_ref[v] = atan2(d.y, d.x);
      sector_width[v] = widths[v];
    }
  }
};

template <class R>
struct FrameT {
  std::array<Vec2T<R>, 3> pos;
  int parity = 1;
  int entry = -1;

  FrameT reflected(int edge) const {
    FrameT next = *this;
    next.pos[edge] =
        reflect_across_line(pos[edge], pos[(edge + 1) % 3], pos[(edge + 2) % 3]);
    next.parity = -parity;
    next.entry = edge;
    return next;
  }
};

template <class R>
FrameT<R> base_frame_of(const ShapeData<R>& s) {
  return FrameT<R>{s.verts, 1, -1};
}

/// Intersect the open window (lo, hi) with the open arc of directions from
/// apex through the open segment (a, b). Returns false when empty. The arc is
/// the short way between the endpoint directions (an edge seen from an
/// external point subtends less than pi).
template <class R>
bool clip_window(R& lo, R& hi, const Vec2T<R>& apex, const Vec2T<R>& a, const Vec2T<R>& b) {
  using std::atan2;
  const R pi = pi_of<R>();
  Vec2T<R> da = a - apex, db = b - apex;
  R x = wrap_pi_r<R>(atan2(da.y, da.x) - lo);
  R y = wrap_pi_r<R>(atan2(db.y, db.x) - lo);
  R s_lo, s_hi;
  using std::abs;
  if (abs(x - y) < pi) {
    s_lo = x < y ? x : y;
    s_hi = x < y ? y : x;
  } else {  // arc wraps the branch cut opposite the window
    s_lo = x < y ? y : x;
    s_hi = (x < y ? x : y) + 2 * pi;
  }
  R width = hi - lo;
  R new_lo = s_lo > R(0) ? s_lo : R(0);
  R new_hi = s_hi < width ? s_hi : width;
  hi = lo + new_hi;
  lo = lo + new_lo;
  return hi > lo;
}

/// Distance-scaled margin of a candidate direction inside the window:
/// positive iff strictly interior, magnitude ~ miss distance.
template <class R>
R window_margin(const R& lo, const R& hi, const Vec2T<R>& apex, const Vec2T<R>& u) {
  using std::atan2;
  Vec2T<R> d = u - apex;
  R dist = norm(d);
  if (dist < R(1e-9)) return R(-1);  // image collapsed onto the apex
  R offset = wrap_pi_r<R>(atan2(d.y, d.x) - lo);
  R other = (hi - lo) - offset;
  R margin = offset < other ? offset : other;
  return margin * dist;
}

/// Re-derive the window chain of an edge path at extended precision and
/// return the margin of the final frame's new vertex. Windows that die on the
/// way mean the candidate is cleanly invisible.
double replay_window_margin(const TriangleShape& shape, int vertex, std::span<const int> edges) {
  ShapeData<ExtReal> s(shape);
  FrameT<ExtReal> frame = base_frame_of(s);
  ExtReal lo = s.sector_ref[vertex];
  ExtReal hi = lo + s.sector_width[vertex];
  for (int e : edges) {
    if (!clip_window(lo, hi, s.verts[vertex], frame.pos[(e + 1) % 3], frame.pos[(e + 2) % 3]))
      return -1.0;
    frame = frame.reflected(e);
  }
  ExtReal m = window_margin(lo, hi, s.verts[vertex], frame.pos[frame.entry]);
  return m.convert_to<double>();
}

enum class Decision { Accept, AcceptWarn, Reject, Ambiguous };

/// Split a double-precision margin against the tolerance bands, falling back
/// to an extended-precision replay for everything inside the band. Both
/// enumeration routes adjudicate their borderline events with the same
/// replay so exact ties resolve identically.
template <class Replay>
Decision classify_margin(double margin, int depth, const PrecisionConfig& cfg,
                         EnumerationStats& stats, Replay&& replay) {
  if (margin > cfg.safe_band) return Decision::Accept;
  if (margin < -cfg.safe_band) return Decision::Reject;
  if (!cfg.use_extended) {
    if (margin > 0) return Decision::AcceptWarn;
    stats.near_misses++;
    return Decision::Reject;
  }
  stats.extended_checks++;
  double floor = cfg.exact_tol * std::max(1, depth);
  double ext = replay();
  if (ext > floor) return Decision::AcceptWarn;
  if (ext < -floor) {
    if (ext > -cfg.safe_band) stats.near_misses++;
    return Decision::Reject;
  }
  stats.ambiguous_events++;
  return Decision::Ambiguous;
}

using Mat2 = std::array<double, 4>;  // row-major 2x2

Mat2 mat_identity() { return {1, 0, 0, 1}; }

Mat2 reflect_matrix(const Vec2& dir) {
  double n2 = dir.x * dir.x + dir.y * dir.y;
  double c = (dir.x * dir.x - dir.y * dir.y) / n2;
  double s = 2 * dir.x * dir.y / n2;
  return {c, s, s, -c};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Vec2 mat_transpose_apply(const Mat2& m, const Vec2& v) {
  return {m[0] * v.x + m[2] * v.y, m[1] * v.x + m[3] * v.y};
}

struct BuildContext {
  const TriangleShape& shape;
  const ShapeData<double>& s;
  int vertex;
  const PrecisionConfig& cfg;
  EnumerationStats& stats;
  std::vector<DiagonalRecord>& records;
};

/// Direction of the reversed traversal, as a local angle at the end vertex.
double end_direction_of(const BuildContext& ctx, const Mat2& orth, const Vec2& dir,
                        int end_vertex) {
  Vec2 back = mat_transpose_apply(orth, Vec2{-dir.x, -dir.y});
  return wrap_pi_r<double>(std::atan2(back.y, back.x) - ctx.s.sector_ref[end_vertex]);
}

void emit_record(BuildContext& ctx, const Vec2& u, int end_vertex, const Mat2& orth,
                 std::span<const int> edges, bool warn) {
  Vec2 d = u - ctx.s.verts[ctx.vertex];
  double dist = std::hypot(d.x, d.y);
  DiagonalRecord rec;
  rec.start_vertex = ctx.vertex;
  rec.end_vertex = end_vertex;
  rec.direction =
      wrap_pi_r<double>(std::atan2(d.y, d.x) - ctx.s.sector_ref[ctx.vertex]);
  rec.end_direction = end_direction_of(ctx, orth, Vec2{d.x / dist, d.y / dist}, end_vertex);
  rec.reflections = static_cast<int>(edges.size());
  rec.geometric_length = dist;
  rec.edges.assign(edges.begin(), edges.end());
  rec.precision_warning = warn;
  if (warn) ctx.stats.warnings++;
  ctx.records.push_back(std::move(rec));
}

// --- pruned DFS ---------------------------------------------------------------

struct PrunedSearch {
  BuildContext ctx;
  int n_max;
  std::vector<int> path;
  std::uint64_t node_budget = 100'000'000;

  void run() {
    FrameT<double> frame = base_frame_of(ctx.s);
    double lo = ctx.s.sector_ref[ctx.vertex];
    double hi = lo + ctx.s.sector_width[ctx.vertex];
    dfs(frame, lo, hi, mat_identity());
  }

  void dfs(const FrameT<double>& frame, double lo, double hi, const Mat2& orth) {
    if (ctx.stats.nodes++ > node_budget)
      throw Error(ErrorCode::Internal, "corridor search exceeded the node budget");
    int depth = static_cast<int>(path.size());
    if (depth >= 1) {
      const Vec2& u = frame.pos[frame.entry];
      double margin = window_margin(lo, hi, ctx.s.verts[ctx.vertex], u);
      Decision d = classify_margin(margin, depth, ctx.cfg, ctx.stats, [&] {
        return replay_window_margin(ctx.shape, ctx.vertex, path);
      });
      if (d == Decision::Accept || d == Decision::AcceptWarn)
        emit_record(ctx, u, frame.entry, orth, path, d == Decision::AcceptWarn);
    }
    if (depth == n_max) return;
    for (int e = 0; e < 3; ++e) {
      if (e == frame.entry) continue;
      if (depth == 0 && e != ctx.vertex) continue;  // rays from V first cross the opposite edge
      double clo = lo, chi = hi;
      if (!clip_window(clo, chi, ctx.s.verts[ctx.vertex], frame.pos[(e + 1) % 3],
                       frame.pos[(e + 2) % 3]))
        continue;
      Vec2 edge_dir = frame.pos[(e + 2) % 3] - frame.pos[(e + 1) % 3];
      path.push_back(e);
      dfs(frame.reflected(e), clo, chi, mat_mul(reflect_matrix(edge_dir), orth));
      path.pop_back();
    }
  }
};

// --- brute force ---------------------------------------------------------------

/// Margin of the exact segment-corridor test: the segment V -> u must cross
/// every stored edge strictly inside and in increasing order, ending past the
/// last edge.
template <class R>
R segment_margin(const Vec2T<R>& v, const Vec2T<R>& u,
                 std::span<const std::pair<Vec2T<R>, Vec2T<R>>> corridor) {
  Vec2T<R> d = u - v;
  R len = norm(d);
  if (len < R(1e-9)) return R(-1);
  R margin = len;  // cap; every constraint below is <= segment length
  R prev_t(0);
  for (const auto& [a, b] : corridor) {
    Vec2T<R> e = b - a;
    R denom = cross(d, e);
    if (denom == 0) return R(-1);
    Vec2T<R> av = a - v;
    R t = cross(av, e) / denom;
    R s = cross(av, d) / denom;
    R edge_len = norm(e);
    R m1 = s * edge_len;
    R m1b = (R(1) - s) * edge_len;
    if (m1b < m1) m1 = m1b;
    R m2 = (t - prev_t) * len;
    if (m1 < margin) margin = m1;
    if (m2 < margin) margin = m2;
    prev_t = t;
  }
  R m3 = (R(1) - prev_t) * len;
  if (m3 < margin) margin = m3;
  return margin;
}

struct BruteSearch {
  BuildContext ctx;
  int n_max;
  std::vector<int> path;
  std::vector<std::pair<Vec2, Vec2>> corridor;

  void run() { walk(base_frame_of(ctx.s), mat_identity()); }

  void walk(const FrameT<double>& frame, const Mat2& orth) {
    int depth = static_cast<int>(path.size());
    if (depth >= 1) {
      // Only the vertex off the last crossed edge can be visible through its
      // interior; the other two images lie on that edge.
      const Vec2& u = frame.pos[frame.entry];
      double margin =
          segment_margin<double>(ctx.s.verts[ctx.vertex], u, std::span(corridor));
      Decision d = classify_margin(margin, depth, ctx.cfg, ctx.stats, [&] {
        return replay_window_margin(ctx.shape, ctx.vertex, path);
      });
      if (d == Decision::Accept || d == Decision::AcceptWarn)
        emit_record(ctx, u, frame.entry, orth, path, d == Decision::AcceptWarn);
    }
    if (depth == n_max) return;
    for (int e = 0; e < 3; ++e) {
      if (e == frame.entry) continue;  // a segment cannot cross the same line twice
      if (depth == 0 && e != ctx.vertex) continue;  // edges through V have no interior crossing
      ctx.stats.nodes++;
      Vec2 a = frame.pos[(e + 1) % 3], b = frame.pos[(e + 2) % 3];
      path.push_back(e);
      corridor.emplace_back(a, b);
      walk(frame.reflected(e), mat_mul(reflect_matrix(b - a), orth));
      corridor.pop_back();
      path.pop_back();
    }
  }
};

void finish_set(DiagonalSet& set) {
  std::sort(set.records.begin(), set.records.end(),
            [](const DiagonalRecord& a, const DiagonalRecord& b) {
              return a.direction < b.direction;
            });
}

void check_vertex_arg(int vertex) {
  if (vertex < 0 || vertex > 2)
    throw Error(ErrorCode::InvalidArgument, "start vertex must be 0, 1 or 2");
}

}  // namespace

DiagonalSet enumerate_diagonals(const TriangleShape& shape, int start_vertex, int n_max,
                                const PrecisionConfig& precision) {
  check_vertex_arg(start_vertex);
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 0");
  DiagonalSet set{shape, start_vertex, n_max, precision, "pruned", {}, {}};
  ShapeData<double> s(shape);
  PrunedSearch search{
      BuildContext{shape, s, start_vertex, precision, set.stats, set.records}, n_max, {}};
  search.run();
  finish_set(set);
  return set;
}

DiagonalSet brute_force_diagonals(const TriangleShape& shape, int start_vertex, int n_max,
                                  const PrecisionConfig& precision) {
  check_vertex_arg(start_vertex);
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 0");
  if (n_max > 12)
    throw Error(ErrorCode::BudgetExceeded,
                "brute-force tree grows like 3^n; n_max is capped at 12");
  DiagonalSet set{shape, start_vertex, n_max, precision, "brute", {}, {}};
  ShapeData<double> s(shape);
  BruteSearch search{
      BuildContext{shape, s, start_vertex, precision, set.stats, set.records}, n_max, {}, {}};
  search.run();
  finish_set(set);
  return set;
}

SetComparison compare_sets(const DiagonalSet& a, const DiagonalSet& b, double tol) {
  SetComparison cmp;
  cmp.left_size = a.records.size();
  cmp.right_size = b.records.size();
  if (cmp.left_size != cmp.right_size) {
    cmp.detail = "sizes differ: " + std::to_string(cmp.left_size) + " vs " +
                 std::to_string(cmp.right_size);
    return cmp;
  }
  cmp.equal = true;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const DiagonalRecord& ra = a.records[i];
    const DiagonalRecord& rb = b.records[i];
    double dgap = std::abs(ra.direction - rb.direction);
    double lgap = std::abs(ra.geometric_length - rb.geometric_length);
    cmp.max_direction_gap = std::max(cmp.max_direction_gap, dgap);
    cmp.max_length_gap = std::max(cmp.max_length_gap, lgap);
    if (dgap > tol || ra.reflections != rb.reflections || ra.end_vertex != rb.end_vertex ||
        ra.edges != rb.edges) {
      cmp.equal = false;
      if (cmp.detail.empty())
        cmp.detail = "record " + std::to_string(i) + " differs (direction gap " +
                     format_full(dgap) + ")";
    }
  }
  return cmp;
}

std::uint64_t ComplexityTable::at(int n) const {
  if (n < 0 || n >= static_cast<int>(counts.size()))
    throw Error(ErrorCode::InvalidArgument, "table index out of range");
  return counts[n];
}

ComplexityTable per_vertex_table(const DiagonalSet& set) {
  ComplexityTable table;
  table.counts.assign(set.n_max + 1, 0);
  for (const DiagonalRecord& r : set.records)
    for (int n = r.reflections; n <= set.n_max; ++n) table.counts[n]++;
  table.convention = "directed-from-vertex-" + std::to_string(set.start_vertex);
  return table;
}

ComplexityTable global_table(std::span<const DiagonalSet> sets, int n_max) {
  struct Entry {
    int reflections;
    int v, w;
    double a1, a2;
  };
  std::vector<Entry> entries;
  for (const DiagonalSet& set : sets) {
    for (const DiagonalRecord& r : set.records) {
      if (r.reflections > n_max) continue;
      Entry e{r.reflections, r.start_vertex, r.end_vertex, r.direction, r.end_direction};
      if (e.w < e.v || (e.w == e.v && e.a2 < e.a1)) {
        std::swap(e.v, e.w);
        std::swap(e.a1, e.a2);
      }
      entries.push_back(e);
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.reflections, a.v, a.w, a.a1) < std::tie(b.reflections, b.v, b.w, b.a1);
  });
  constexpr double kMergeTol = 1e-9;
  ComplexityTable table;
  table.counts.assign(n_max + 1, 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) {
      const Entry& p = entries[i - 1];
      const Entry& e = entries[i];
      if (p.reflections == e.reflections && p.v == e.v && p.w == e.w &&
          std::abs(p.a1 - e.a1) <= kMergeTol && std::abs(p.a2 - e.a2) <= kMergeTol)
        continue;  // same undirected diagonal seen from the other endpoint
    }
    for (int n = entries[i].reflections; n <= n_max; ++n) table.counts[n]++;
  }
  table.convention = "undirected-global";
  return table;
}

ComplexityTable table_from_counts(std::span<const std::uint64_t> counts, std::string convention) {
  ComplexityTable t;
  t.counts.assign(counts.begin(), counts.end());
  t.convention = std::move(convention);
  return t;
}

// --- ray tracing ---------------------------------------------------------------

namespace {

enum class TraceCode { Hit, Survived, Banded, Lost };

template <class R>
struct TraceCore {
  TraceCode code = TraceCode::Lost;
  int vertex = -1;
  int reflections = 0;
  double length = 0.0;
};

template <class R>
TraceCore<R> trace_core(const ShapeData<R>& s, int vertex, const R& local_dir,
                        int max_reflections, double hit_scale, double safe_band) {
  using std::cos;
  using std::sin;
  TraceCore<R> out;
  Vec2T<R> p = s.verts[vertex];
  R theta = s.sector_ref[vertex] + local_dir;
  Vec2T<R> d{cos(theta), sin(theta)};
  R len(0);
  const R t_min(1e-12);
  int completed = 0;
  while (true) {
    R best_t(-1);
    int best_e = -1;
    for (int e = 0; e < 3; ++e) {
      const Vec2T<R>& a = s.verts[(e + 1) % 3];
      const Vec2T<R>& b = s.verts[(e + 2) % 3];
      Vec2T<R> ee = b - a;
      R denom = cross(d, ee);
      if (denom == 0) continue;
      Vec2T<R> ap = a - p;
      R t = cross(ap, ee) / denom;
      R sE = cross(ap, d) / denom;
      if (t > t_min && sE > R(-0.25) && sE < R(1.25) && (best_e < 0 || t < best_t)) {
        best_t = t;
        best_e = e;
      }
    }
    if (best_e < 0) {
      out.code = TraceCode::Lost;
      return out;
    }
    Vec2T<R> q{p.x + best_t * d.x, p.y + best_t * d.y};
    len += best_t;
    int va = (best_e + 1) % 3, vb = (best_e + 2) % 3;
    R da = norm(q - s.verts[va]);
    R db = norm(q - s.verts[vb]);
    int near_v = da < db ? va : vb;
    R mind = da < db ? da : db;
    double thr_hit = hit_scale * (completed + 1);
    if (mind < R(thr_hit)) {
      out.code = TraceCode::Hit;
      out.vertex = near_v;
      out.reflections = completed;
      out.length = static_cast<double>(len);
      return out;
    }
    if (mind < R(safe_band)) {
      out.code = TraceCode::Banded;
      out.reflections = completed;
      return out;
    }
    if (completed == max_reflections) {
      out.code = TraceCode::Survived;
      out.reflections = completed;
      out.length = static_cast<double>(len);
      return out;
    }
    // Reflect the direction across the edge and continue.
    Vec2T<R> ee = s.verts[vb] - s.verts[va];
    R n2 = dot(ee, ee);
    R proj = dot(d, ee) / n2;
    d = Vec2T<R>{2 * proj * ee.x - d.x, 2 * proj * ee.y - d.y};
    p = q;
    completed++;
  }
}

}  // namespace

TraceResult trace_ray(const TriangleShape& shape, int start_vertex, double direction,
                      int max_reflections, const PrecisionConfig& precision) {
  check_vertex_arg(start_vertex);
  TraceResult res;
  double width = shape.angle_at(start_vertex);
  if (direction < 1e-12 || direction > width - 1e-12) {
    res.status = TraceStatus::Ambiguous;
    res.note = "direction on or outside the sector boundary";
    return res;
  }
  ShapeData<double> s(shape);
  auto core = trace_core<double>(s, start_vertex, direction, max_reflections,
                                 precision.hit_tol, precision.safe_band);
  if (core.code == TraceCode::Banded && precision.use_extended) {
    ShapeData<ExtReal> se(shape);
    // At extended precision the residual uncertainty is the double rounding of
    // the direction itself, so the hit threshold floors at ~1e-13 per contact.
    auto ext = trace_core<ExtReal>(se, start_vertex, ExtReal(direction), max_reflections,
                                   1e-13, precision.safe_band);
    switch (ext.code) {
      case TraceCode::Hit:
        res.status = TraceStatus::Hit;
        res.vertex = ext.vertex;
        res.reflections = ext.reflections;
        res.length = ext.length;
        return res;
      case TraceCode::Survived:
        res.status = TraceStatus::Survived;
        res.reflections = ext.reflections;
        res.length = ext.length;
        return res;
      default:
        res.status = TraceStatus::Ambiguous;
        res.note = "vertex approach unresolved at extended precision (contact " +
                   std::to_string(ext.reflections + 1) + ")";
        return res;
    }
  }
  switch (core.code) {
    case TraceCode::Hit:
      res.status = TraceStatus::Hit;
      res.vertex = core.vertex;
      res.reflections = core.reflections;
      res.length = core.length;
      break;
    case TraceCode::Survived:
      res.status = TraceStatus::Survived;
      res.reflections = core.reflections;
      res.length = core.length;
      break;
    case TraceCode::Banded:
      res.status = TraceStatus::Ambiguous;
      res.note = "vertex approach inside the tolerance band (contact " +
                 std::to_string(core.reflections + 1) + ")";
      break;
    case TraceCode::Lost:
      res.status = TraceStatus::Ambiguous;
      res.note = "ray lost (degenerate geometry)";
      break;
  }
  return res;
}

RetraceStats retrace_records(const DiagonalSet& set, const PrecisionConfig& precision) {
  RetraceStats st;
  for (const DiagonalRecord& r : set.records) {
    st.checked++;
    TraceResult t = trace_ray(set.shape, r.start_vertex, r.direction, r.reflections, precision);
    if (t.status == TraceStatus::Ambiguous) {
      st.ambiguous++;
      continue;
    }
    if (t.status == TraceStatus::Hit && t.vertex == r.end_vertex &&
        t.reflections == r.reflections)
      st.passed++;
  }
  return st;
}

std::vector<geometry::OrbitSample> sample_orbits(const TriangleShape& shape, std::size_t count,
                                                 int max_reflections, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<geometry::OrbitSample> samples;
  samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    int vertex = static_cast<int>(rng.next_below(3));
    double width = shape.angle_at(vertex);
    double dir = width * (0.02 + 0.96 * rng.next_double());
    TraceResult t = trace_ray(shape, vertex, dir, max_reflections);
    if (t.status == TraceStatus::Ambiguous) continue;
    int n = t.status == TraceStatus::Hit ? t.reflections : max_reflections;
    if (n >= 1) samples.push_back({n, t.length});
  }
  return samples;
}

// --- corridors ------------------------------------------------------------------

Corridor corridor_of_direction(const TriangleShape& shape, int start_vertex, double direction,
                               int depth, const PrecisionConfig& precision) {
  check_vertex_arg(start_vertex);
  double width = shape.angle_at(start_vertex);
  if (direction <= 0 || direction >= width)
    throw Error(ErrorCode::InvalidArgument, "direction must lie inside the open sector");
  ShapeData<double> s(shape);
  double theta = s.sector_ref[start_vertex] + direction;

  Corridor corridor;
  FrameT<double> frame = base_frame_of(s);
  double lo = s.sector_ref[start_vertex];
  double hi = lo + width;
  auto push_frame = [&](const FrameT<double>& f) {
    geometry::TriangleFrame g;
    g.positions = f.pos;
    g.parity = f.parity;
    g.entry_edge = f.entry;
    corridor.frames.push_back(g);
  };
  push_frame(frame);
  for (int k = 0; k < depth; ++k) {
    int chosen = -1;
    double clo = 0, chi = 0;
    for (int e = 0; e < 3; ++e) {
      if (e == frame.entry) continue;
      if (k == 0 && e != start_vertex) continue;
      double wlo = lo, whi = hi;
      if (!clip_window(wlo, whi, s.verts[start_vertex], frame.pos[(e + 1) % 3],
                       frame.pos[(e + 2) % 3]))
        continue;
      if (theta > wlo && theta < whi) {
        double margin = std::min(theta - wlo, whi - theta);
        if (margin < precision.hit_tol * (k + 1))
          throw Error(ErrorCode::AmbiguousHit,
                      "direction meets a corridor boundary at depth " + std::to_string(k + 1));
        chosen = e;
        clo = wlo;
        chi = whi;
        break;
      }
    }
    if (chosen < 0)
      throw Error(ErrorCode::AmbiguousHit,
                  "direction leaves the corridor at depth " + std::to_string(k + 1) +
                      " (hits a cutting point)");
    frame = frame.reflected(chosen);
    lo = clo;
    hi = chi;
    corridor.edges.push_back(chosen);
    push_frame(frame);
  }
  return corridor;
}

KitePath kite_path(const TriangleShape& shape, const Corridor& corridor) {
  KitePath path;
  path.kite_index.reserve(corridor.frames.size());
  double phi = 0.0;
  int moves = 0;
  path.kite_index.push_back(0);
  for (std::size_t i = 0; i < corridor.edges.size(); ++i) {
    int e = corridor.edges[i];
    const auto& next = corridor.frames[i + 1].positions;
    if (e == geometry::kFixedEdge) {
      path.kite_index.push_back(moves);
      continue;
    }
    double phi_next = std::atan2(next[1].y - next[0].y, next[1].x - next[0].x);
    geometry::Vertex pivot = (e == 1) ? geometry::kVertexA : geometry::kVertexB;
    double amount = 2.0 * (pivot == geometry::kVertexA ? shape.alpha : shape.beta);
    double delta = wrap_pi_r<double>(phi_next - phi);
    double d_plus = std::abs(wrap_pi_r<double>(delta - amount));
    double d_minus = std::abs(wrap_pi_r<double>(delta + amount));
    int sign = d_plus <= d_minus ? 1 : -1;
    if (std::min(d_plus, d_minus) > 1e-6)
      throw Error(ErrorCode::Internal, "kite rotation does not match the corridor step");
    path.moves.moves.push_back(geometry::RotationLabel{pivot, sign});
    phi += sign * amount;
    moves++;
    path.kite_index.push_back(moves);
  }
  return path;
}

int kite_vertex_choice(int label, int parity) {
  switch (label) {
    case geometry::kVertexA: return 0;  // alpha vertex
    case geometry::kVertexB: return 1;  // beta vertex
    case geometry::kVertexC: return parity > 0 ? 2 : 3;  // upper / lower side vertex
  }
  throw Error(ErrorCode::InvalidArgument, "bad vertex label");
}

}  // namespace trikite::enumeration
