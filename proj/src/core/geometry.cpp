#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace trikite::geometry {

double TriangleShape::angle_at(int vertex) const {
  switch (vertex) {
    case kVertexA: return alpha;
    case kVertexB: return beta;
    case kVertexC: return gamma();
  }
  throw Error(ErrorCode::InvalidArgument, "vertex id must be 0, 1 or 2");
}

TriangleShape make_triangle(double alpha, double beta, double delta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(delta) || delta <= 0)
    throw Error(ErrorCode::InvalidArgument, "angles and delta must be finite, delta > 0");
  if (!(alpha > delta))
    throw Error(ErrorCode::Admissibility, "alpha = " + format_full(alpha) +
                                              " must exceed delta = " + format_full(delta));
  if (!(beta > delta))
    throw Error(ErrorCode::Admissibility, "beta = " + format_full(beta) +
                                              " must exceed delta = " + format_full(delta));
  if (!(alpha + beta < kPi - delta))
    throw Error(ErrorCode::Admissibility,
                "alpha + beta = " + format_full(alpha + beta) +
                    " must stay below pi - delta = " + format_full(kPi - delta));
  return TriangleShape{alpha, beta, delta};
}

std::array<Vec2, 3> base_vertices(const TriangleShape& shape) {
  double s = std::sin(shape.alpha + shape.beta);
  double r = std::sin(shape.beta) / s;  // |AC|
  return {Vec2{0.0, 0.0}, Vec2{1.0, 0.0},
          Vec2{r * std::cos(shape.alpha), r * std::sin(shape.alpha)}};
}

VertexSector vertex_sector(const TriangleShape& shape, int vertex) {
  auto v = base_vertices(shape);
  // Reference side points to the ccw-next vertex; the interior sector is swept
  // ccw from it by the interior angle.
  int next = (vertex + 1) % 3;
  Vec2 d = v[next] - v[vertex];
  return VertexSector{v[vertex], std::atan2(d.y, d.x), shape.angle_at(vertex)};
}

std::string move_to_string(const RotationLabel& move) {
  std::string s(1, move.pivot == kVertexA ? 'A' : 'B');
  s.push_back(move.sign > 0 ? '+' : '-');
  return s;
}

RotationLabel move_from_string(std::string_view text) {
  if (text.size() == 2 && (text[0] == 'A' || text[0] == 'B') &&
      (text[1] == '+' || text[1] == '-')) {
    return RotationLabel{text[0] == 'A' ? kVertexA : kVertexB, text[1] == '+' ? 1 : -1};
  }
  throw Error(ErrorCode::InvalidArgument,
              "move must be one of A+, A-, B+, B-: got '" + std::string(text) + "'");
}

double alpha_side_length(const TriangleShape& shape) {
  return std::sin(shape.beta) / std::sin(shape.alpha + shape.beta);
}

namespace {

/// Rebuild the dependent kite vertices from the diagonal endpoints and angle.
KiteFrame kite_from_diagonal(const TriangleShape& shape, Vec2 alpha_vertex, double kite_angle) {
  KiteFrame f;
  f.alpha_vertex = alpha_vertex;
  f.kite_angle = kite_angle;
  f.beta_vertex = {alpha_vertex.x + std::cos(kite_angle), alpha_vertex.y + std::sin(kite_angle)};
  double r = alpha_side_length(shape);
  f.upper_vertex = {alpha_vertex.x + r * std::cos(kite_angle + shape.alpha),
                    alpha_vertex.y + r * std::sin(kite_angle + shape.alpha)};
  f.lower_vertex = {alpha_vertex.x + r * std::cos(kite_angle - shape.alpha),
                    alpha_vertex.y + r * std::sin(kite_angle - shape.alpha)};
  return f;
}

}  // namespace

KiteFrame standard_kite(const TriangleShape& shape) {
  return kite_from_diagonal(shape, Vec2{0.0, 0.0}, 0.0);
}

KiteFrame unfold_step(const KiteFrame& frame, const RotationLabel& move,
                      const TriangleShape& shape) {
  double next_angle = frame.kite_angle + move.amount(shape);
  if (move.pivot == kVertexA) {
    // phi' = phi +- 2a; alpha-vertex fixed, beta-vertex = alpha + (cos phi', sin phi').
    return kite_from_diagonal(shape, frame.alpha_vertex, next_angle);
  }
  // Rotation about the beta-vertex: alpha-vertex = beta - (cos phi', sin phi').
  Vec2 alpha_vertex{frame.beta_vertex.x - std::cos(next_angle),
                    frame.beta_vertex.y - std::sin(next_angle)};
  return kite_from_diagonal(shape, alpha_vertex, next_angle);
}

std::vector<KiteFrame> unfold_sequence(const TriangleShape& shape, const Combinatorics& comb) {
  std::vector<KiteFrame> frames;
  frames.reserve(comb.moves.size() + 1);
  frames.push_back(standard_kite(shape));
  for (const RotationLabel& move : comb.moves)
    frames.push_back(unfold_step(frames.back(), move, shape));
  return frames;
}

TriangleFrame TriangleFrame::reflected(int edge) const {
  if (edge < 0 || edge > 2) throw Error(ErrorCode::InvalidArgument, "edge id must be 0, 1 or 2");
  TriangleFrame next = *this;
  int i = (edge + 1) % 3;
  int j = (edge + 2) % 3;
  next.positions[edge] = reflect_across_line(positions[edge], positions[i], positions[j]);
  next.parity = -parity;
  next.entry_edge = edge;
  return next;
}

TriangleFrame base_frame(const TriangleShape& shape) {
  return TriangleFrame{base_vertices(shape), 1, -1};
}

double length_comparability(std::span<const OrbitSample> samples, int min_reflections) {
  double best = 0.0;
  bool any = false;
  for (const OrbitSample& s : samples) {
    if (s.reflections < min_reflections || s.reflections <= 0) continue;
    if (!(s.geometric_length > 0)) continue;
    any = true;
    double a = s.geometric_length / s.reflections;
    best = std::max({best, a, 1.0 / a});
  }
  if (!any)
    throw Error(ErrorCode::InsufficientData,
                "no traced orbit reaches " + std::to_string(min_reflections) + " reflections");
  return best;
}

}  // namespace trikite::geometry
