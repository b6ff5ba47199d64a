#ifndef TRIKITE_CORE_COMMON_HPP
#define TRIKITE_CORE_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trikite {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kCodeVersion = "0.1.0";

/// Error codes shared between the C++ core and the C API surface.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  Admissibility = 2,
  BudgetExceeded = 3,
  InsufficientData = 4,
  DuplicateAngle = 5,
  HypothesisNotMet = 6,
  SearchFailed = 7,
  ZeroPolynomial = 8,
  Infeasible = 9,
  DegenerateRange = 10,
  AmbiguousHit = 11,
  Io = 12,
  Internal = 13,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

template <class Real>
struct Vec2T {
  Real x{};
  Real y{};

  friend Vec2T operator+(const Vec2T& a, const Vec2T& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2T operator-(const Vec2T& a, const Vec2T& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2T operator*(Real s, const Vec2T& v) { return {s * v.x, s * v.y}; }
};

using Vec2 = Vec2T<double>;

template <class Real>
Real dot(const Vec2T<Real>& a, const Vec2T<Real>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class Real>
Real cross(const Vec2T<Real>& a, const Vec2T<Real>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class Real>
Real norm(const Vec2T<Real>& a) {
  using std::sqrt;
  return sqrt(dot(a, a));
}

/// Reflect point p across the line through a and b.
template <class Real>
Vec2T<Real> reflect_across_line(const Vec2T<Real>& p, const Vec2T<Real>& a, const Vec2T<Real>& b) {
  Vec2T<Real> d = b - a;
  Real len2 = dot(d, d);
  Vec2T<Real> r = p - a;
  Real t = dot(r, d) / len2;
  Vec2T<Real> foot{a.x + t * d.x, a.y + t * d.y};
  return {2 * foot.x - p.x, 2 * foot.y - p.y};
}

/// Wrap an angle into [-pi, pi).
template <class Real>
Real wrap_pi(Real a) {
  using std::floor;
  Real two_pi = 2 * static_cast<Real>(kPi);
  Real r = a - two_pi * floor((a + static_cast<Real>(kPi)) / two_pi);
  if (r >= static_cast<Real>(kPi)) r -= two_pi;
  return r;
}

/// Wrap an angle into [0, 2*pi).
inline double wrap_two_pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

// --- deterministic RNG ------------------------------------------------------

/// splitmix64: tiny PRNG with an exactly specified bit stream; used everywhere
/// a seed must reproduce byte-identically across runs and platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }
};

/// Derive an independent stream seed (for per-shard sampling).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 rng(seed ^ (0xa0761d6478bd642fULL + stream * 0xe7037ed1a0b428dbULL));
  rng.next();
  return rng.next();
}

// --- misc -------------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view data);

/// Render a double with full round-trip precision (17 significant digits).
std::string format_full(double v);

/// Render a double as a C99 hex float (exact).
std::string format_hex(double v);

}  // namespace trikite

#endif  // TRIKITE_CORE_COMMON_HPP
