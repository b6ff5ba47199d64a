#ifndef TRIKITE_CORE_GEOMETRY_HPP
#define TRIKITE_CORE_GEOMETRY_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace trikite::geometry {

/// Vertex labels of the base triangle. Vertex A carries angle alpha, B carries
/// beta, C carries gamma = pi - alpha - beta. The side AB has length exactly 1
/// and is the side the triangle is completed across to form the kite.
enum Vertex : int { kVertexA = 0, kVertexB = 1, kVertexC = 2 };

/// Edge labels, named by the opposite vertex: edge 0 = BC, edge 1 = CA,
/// edge 2 = AB (the fixed unit side).
inline constexpr int kFixedEdge = 2;

/// A triangle billiard table: angles at the two endpoints of the unit side,
/// plus the admissibility margin delta. All three margin inequalities are
/// strict: alpha > delta, beta > delta, alpha + beta < pi - delta.
struct TriangleShape {
  double alpha;
  double beta;
  double delta;

  double gamma() const { return kPi - alpha - beta; }
  double angle_at(int vertex) const;
};

TriangleShape make_triangle(double alpha, double beta, double delta);

/// Positions of the base triangle: A = (0,0), B = (1,0), C above the x-axis.
std::array<Vec2, 3> base_vertices(const TriangleShape& shape);

/// Angular sector at a vertex: rays into the table interior are
/// ref_angle + t for t in (0, width).
struct VertexSector {
  Vec2 apex;
  double ref_angle;  // absolute direction of the reference side
  double width;      // interior angle at the vertex
};

VertexSector vertex_sector(const TriangleShape& shape, int vertex);

/// One kite unfolding move: rotate about the alpha- or beta-vertex by
/// sign * 2*alpha or sign * 2*beta.
struct RotationLabel {
  Vertex pivot;  // kVertexA or kVertexB
  int sign;      // +1 or -1

  double amount(const TriangleShape& shape) const {
    return sign * 2.0 * (pivot == kVertexA ? shape.alpha : shape.beta);
  }
};

std::string move_to_string(const RotationLabel& move);
RotationLabel move_from_string(std::string_view text);

/// Sequence of rotation moves describing a kite corridor. A corridor of n
/// moves visits n+1 kite copies; the paper-style "length" of the unfolding is
/// that kite count.
struct Combinatorics {
  std::vector<RotationLabel> moves;

  std::size_t kite_count() const { return moves.size() + 1; }
};

/// A placed copy of the kite. The diagonal runs from the alpha-vertex to the
/// beta-vertex and has length 1; the two side vertices mirror each other
/// across the diagonal ("upper" is the positive-y one in standard position,
/// and its image under the accumulated rotation afterwards).
struct KiteFrame {
  Vec2 alpha_vertex;
  Vec2 beta_vertex;
  Vec2 upper_vertex;
  Vec2 lower_vertex;
  double kite_angle;  // ccw angle from the x-axis to the diagonal
};

/// Distance from the alpha-vertex to either side vertex: sin(beta)/sin(alpha+beta).
double alpha_side_length(const TriangleShape& shape);

KiteFrame standard_kite(const TriangleShape& shape);

KiteFrame unfold_step(const KiteFrame& frame, const RotationLabel& move,
                      const TriangleShape& shape);

/// frames[0] is the standard kite; frames[k+1] = unfold_step(frames[k], moves[k]).
std::vector<KiteFrame> unfold_sequence(const TriangleShape& shape,
                                       const Combinatorics& comb);

/// A placed copy of the triangle inside a corridor. positions[i] is the image
/// of base vertex i; parity flips with every reflection (+1 = orientation of
/// the base triangle).
struct TriangleFrame {
  std::array<Vec2, 3> positions;
  int parity = 1;
  int entry_edge = -1;  // edge crossed to enter this copy; -1 for the base copy

  TriangleFrame reflected(int edge) const;
};

TriangleFrame base_frame(const TriangleShape& shape);

/// One traced orbit sample for the length-comparability diagnostic.
struct OrbitSample {
  int reflections;
  double geometric_length;
};

/// Empirical comparability constant: max over qualifying samples of
/// max(L/n, n/L). Samples with fewer than min_reflections reflections are
/// ignored; throws InsufficientData if none qualify.
double length_comparability(std::span<const OrbitSample> samples, int min_reflections);

}  // namespace trikite::geometry

#endif  // TRIKITE_CORE_GEOMETRY_HPP
