#include "core/symbolic.hpp"

#include <algorithm>
#include <cmath>

namespace trikite::symbolic {

using geometry::Combinatorics;
using geometry::KiteFrame;
using geometry::RotationLabel;
using geometry::kVertexA;

const char* vertex_choice_name(VertexChoice choice) {
  switch (choice) {
    case VertexChoice::Alpha: return "alpha";
    case VertexChoice::Beta: return "beta";
    case VertexChoice::Upper: return "upper";
    case VertexChoice::Lower: return "lower";
  }
  return "?";
}

int SymbolicKite::diagonal_degree() const {
  return std::max({alpha_x.degree(), alpha_y.degree(), beta_x.degree(), beta_y.degree()});
}

namespace {

SymbolicKite standard_symbolic_kite() {
  SymbolicKite k;
  k.alpha_x = TrigPoly{};
  k.alpha_y = TrigPoly{};
  k.beta_x = TrigPoly::constant(1);  // cos(0)
  k.beta_y = TrigPoly{};             // sin(0)
  k.phi = {0, 0};
  return k;
}

SymbolicKite symbolic_step(const SymbolicKite& kite, const RotationLabel& move) {
  SymbolicKite next;
  next.phi = kite.phi;
  if (move.pivot == kVertexA)
    next.phi.m += 2 * move.sign;
  else
    next.phi.l += 2 * move.sign;

  TrigPoly cos_phi = TrigPoly::cosine(next.phi.m, next.phi.l);
  TrigPoly sin_phi = TrigPoly::sine(next.phi.m, next.phi.l);
  if (move.pivot == kVertexA) {
    next.alpha_x = kite.alpha_x;
    next.alpha_y = kite.alpha_y;
    next.beta_x = kite.alpha_x + cos_phi;
    next.beta_y = kite.alpha_y + sin_phi;
  } else {
    next.beta_x = kite.beta_x;
    next.beta_y = kite.beta_y;
    next.alpha_x = kite.beta_x - cos_phi;
    next.alpha_y = kite.beta_y - sin_phi;
  }
  return next;
}

}  // namespace

SymbolicKite symbolic_unfold(const Combinatorics& comb) {
  SymbolicKite kite = standard_symbolic_kite();
  for (const RotationLabel& move : comb.moves) kite = symbolic_step(kite, move);
  return kite;
}

std::vector<SymbolicKite> symbolic_unfold_chain(const Combinatorics& comb) {
  std::vector<SymbolicKite> chain;
  chain.reserve(comb.moves.size() + 1);
  chain.push_back(standard_symbolic_kite());
  for (const RotationLabel& move : comb.moves) chain.push_back(symbolic_step(chain.back(), move));
  return chain;
}

KiteFrame eval_kite(const SymbolicKite& kite, double alpha, double beta) {
  KiteFrame f;
  f.alpha_vertex = {kite.alpha_x.eval(alpha, beta), kite.alpha_y.eval(alpha, beta)};
  f.beta_vertex = {kite.beta_x.eval(alpha, beta), kite.beta_y.eval(alpha, beta)};
  double r = std::sin(beta) / std::sin(alpha + beta);
  double up = kite.upper_freq().m * alpha + kite.upper_freq().l * beta;
  double lo = kite.lower_freq().m * alpha + kite.lower_freq().l * beta;
  f.upper_vertex = {f.alpha_vertex.x + r * std::cos(up), f.alpha_vertex.y + r * std::sin(up)};
  f.lower_vertex = {f.alpha_vertex.x + r * std::cos(lo), f.alpha_vertex.y + r * std::sin(lo)};
  f.kite_angle = kite.phi.m * alpha + kite.phi.l * beta;
  return f;
}

SymbolicVertex vertex_numerators(const SymbolicKite& kite, VertexChoice choice) {
  TrigPoly sin_ab = TrigPoly::sine(1, 1);
  SymbolicVertex v;
  switch (choice) {
    case VertexChoice::Alpha:
      v.num_x = tp_mul(kite.alpha_x, sin_ab);
      v.num_y = tp_mul(kite.alpha_y, sin_ab);
      return v;
    case VertexChoice::Beta:
      v.num_x = tp_mul(kite.beta_x, sin_ab);
      v.num_y = tp_mul(kite.beta_y, sin_ab);
      return v;
    case VertexChoice::Upper:
    case VertexChoice::Lower: {
      FreqKey f = choice == VertexChoice::Upper ? kite.upper_freq() : kite.lower_freq();
      TrigPoly sin_b = TrigPoly::sine(0, 1);
      v.num_x = tp_mul(kite.alpha_x, sin_ab) + tp_mul(sin_b, TrigPoly::cosine(f.m, f.l));
      v.num_y = tp_mul(kite.alpha_y, sin_ab) + tp_mul(sin_b, TrigPoly::sine(f.m, f.l));
      return v;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "bad vertex choice");
}

Vec2 eval_vertex(const SymbolicVertex& v, double alpha, double beta) {
  double s = std::sin(alpha + beta);
  return {v.num_x.eval(alpha, beta) / s, v.num_y.eval(alpha, beta) / s};
}

TrigPoly area_polynomial(const SymbolicVertex& p, const SymbolicVertex& q,
                         const SymbolicVertex& r) {
  TrigPoly ux = q.num_x - p.num_x, uy = q.num_y - p.num_y;
  TrigPoly vx = r.num_x - p.num_x, vy = r.num_y - p.num_y;
  return (tp_mul(ux, vy) - tp_mul(uy, vx)).scaled(Rational(1, 2));
}

Combinatorics random_combinatorics(std::size_t moves, SplitMix64& rng) {
  Combinatorics comb;
  comb.moves.reserve(moves);
  for (std::size_t i = 0; i < moves; ++i) {
    std::uint64_t bits = rng.next();
    comb.moves.push_back(RotationLabel{(bits & 1) ? geometry::kVertexA : geometry::kVertexB,
                                       (bits & 2) ? 1 : -1});
  }
  return comb;
}

std::vector<FamilyItem> family_generate(int moves, std::size_t count, std::uint64_t seed) {
  if (moves < 0) throw Error(ErrorCode::InvalidArgument, "moves must be >= 0");
  std::vector<FamilyItem> family;
  family.reserve(count);
  int positions = 4 * (moves + 1);
  if (positions < 3)
    throw Error(ErrorCode::InvalidArgument, "corridor too short to pick three vertices");
  for (std::size_t i = 0; i < count; ++i) {
    SplitMix64 rng(derive_seed(seed, i));
    FamilyItem item;
    for (int attempt = 0; attempt < 256; ++attempt) {
      item.comb = random_combinatorics(static_cast<std::size_t>(moves), rng);
      auto chain = symbolic_unfold_chain(item.comb);
      // Three distinct (kite, vertex) picks.
      int a = static_cast<int>(rng.next_below(positions));
      int b, c;
      do { b = static_cast<int>(rng.next_below(positions)); } while (b == a);
      do { c = static_cast<int>(rng.next_below(positions)); } while (c == a || c == b);
      std::array<int, 3> picks{a, b, c};
      std::array<SymbolicVertex, 3> pts;
      for (int j = 0; j < 3; ++j) {
        int kite_idx = picks[j] / 4;
        auto choice = static_cast<VertexChoice>(picks[j] % 4);
        item.picks[j] = {kite_idx, choice};
        pts[j] = vertex_numerators(chain[kite_idx], choice);
      }
      item.area = area_polynomial(pts[0], pts[1], pts[2]);
      if (!item.area.is_zero()) break;
    }
    if (item.area.is_zero())
      throw Error(ErrorCode::ZeroPolynomial,
                  "could not sample a nonzero area polynomial (moves = " +
                      std::to_string(moves) + ")");
    family.push_back(std::move(item));
  }
  return family;
}

}  // namespace trikite::symbolic
