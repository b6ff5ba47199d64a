#ifndef TRIKITE_CORE_SYMBOLIC_HPP
#define TRIKITE_CORE_SYMBOLIC_HPP

#include <cstdint>
#include <vector>

#include "core/geometry.hpp"
#include "core/trigpoly.hpp"

namespace trikite::symbolic {

using trigpoly::FreqKey;
using trigpoly::Rational;
using trigpoly::TrigPoly;

/// The four kite vertices, in the labeling of geometry::KiteFrame.
enum class VertexChoice : int { Alpha = 0, Beta = 1, Upper = 2, Lower = 3 };

const char* vertex_choice_name(VertexChoice choice);

/// Symbolic coordinates of one unfolded kite copy. The alpha/beta vertices are
/// plain trigonometric polynomials in (alpha, beta); the side vertices are
/// alpha_vertex + [sin(beta)/sin(alpha+beta)] * (cos, sin)(phi +- alpha) where
/// phi is the kite angle, an integer frequency pair since every move shifts it
/// by +-2alpha or +-2beta.
struct SymbolicKite {
  TrigPoly alpha_x, alpha_y;
  TrigPoly beta_x, beta_y;
  FreqKey phi;

  FreqKey upper_freq() const { return {phi.m + 1, phi.l}; }
  FreqKey lower_freq() const { return {phi.m - 1, phi.l}; }

  /// Degree of the alpha/beta-vertex coordinate polynomials.
  int diagonal_degree() const;
};

/// Final kite of the corridor described by comb.
SymbolicKite symbolic_unfold(const geometry::Combinatorics& comb);

/// All kites along the corridor: chain[k] is the kite after k moves.
std::vector<SymbolicKite> symbolic_unfold_chain(const geometry::Combinatorics& comb);

/// Numeric positions of all four vertices at concrete angles; matches
/// geometry::unfold_sequence on the same combinatorics.
geometry::KiteFrame eval_kite(const SymbolicKite& kite, double alpha, double beta);

/// A point with coordinates (num_x, num_y) / sin(alpha + beta); every kite
/// vertex can be put in this common-denominator form.
struct SymbolicVertex {
  TrigPoly num_x, num_y;

  int degree() const { return std::max(num_x.degree(), num_y.degree()); }
};

SymbolicVertex vertex_numerators(const SymbolicKite& kite, VertexChoice choice);

Vec2 eval_vertex(const SymbolicVertex& v, double alpha, double beta);

/// Area polynomial A with signed_area(PQR) = A(alpha, beta) / sin^2(alpha + beta).
TrigPoly area_polynomial(const SymbolicVertex& p, const SymbolicVertex& q,
                         const SymbolicVertex& r);

/// Degree cap for areas built from corridors with `moves` rotation moves
/// (moves + 1 kite copies).
inline int area_degree_cap(int moves) { return 4 * (moves + 1); }

geometry::Combinatorics random_combinatorics(std::size_t moves, SplitMix64& rng);

/// One family member: an area polynomial plus the data that produced it.
struct FamilyItem {
  TrigPoly area;
  geometry::Combinatorics comb;
  std::array<std::pair<int, VertexChoice>, 3> picks;  // (kite index, vertex)
};

/// Seeded family of nonzero area polynomials from corridors with exactly
/// `moves` moves; item i depends only on (seed, i).
std::vector<FamilyItem> family_generate(int moves, std::size_t count, std::uint64_t seed);

/// Corridor length used for the degree-m ladder: areas then have degree <= m.
inline int moves_for_degree(int degree) { return std::max(0, degree / 4 - 1); }

}  // namespace trikite::symbolic

#endif  // TRIKITE_CORE_SYMBOLIC_HPP
