#ifndef TRIKITE_CORE_MEASURE_HPP
#define TRIKITE_CORE_MEASURE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/trigpoly.hpp"

namespace trikite::measure {

using trigpoly::TrigPoly;

inline constexpr std::uint64_t kDefaultSeed = 20250614;

/// Deterministic sampler over the angle square [0, 2pi]^2. The stream is a
/// fixed function of the seed alone (sharded internally with derived seeds),
/// so results do not depend on the thread count.
struct SamplerConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t sample_count = 100000;
  int threads = 1;
};

struct MeasureEstimate {
  double fraction = 0.0;
  double standard_error = 0.0;
  std::uint64_t sample_count = 0;
  std::uint64_t hits = 0;
};

/// Monte Carlo fraction of the square where |p| < eps.
/// Throws ZeroPolynomial when p vanishes identically.
MeasureEstimate sublevel_fraction(const TrigPoly& p, double eps, const SamplerConfig& cfg);

struct DecayRow {
  int degree = 0;
  double eps = 0.0;
  double worst_fraction = 0.0;
  std::size_t family_size = 0;
  double reference = 0.0;  // e^{-c_ref * degree}
  bool underflow = false;  // eps fell below the double range
  int skipped_zero = 0;
};

struct DecayTable {
  std::vector<DecayRow> rows;
  double rate = 0.0;   // R in eps_m = e^{-R m^2}
  double c_ref = 0.0;
  std::uint64_t family_seed = 0;
  std::size_t family_size = 0;
  SamplerConfig sampler;
};

/// For each degree m: worst-case sublevel fraction at threshold e^{-R m^2}
/// over a seeded family of area polynomials of degree <= m.
DecayTable decay_experiment(std::span<const int> degrees, double rate, double c_ref,
                            std::size_t family_size, std::uint64_t family_seed,
                            const SamplerConfig& sampler);

std::string decay_csv(const DecayTable& table);

}  // namespace trikite::measure

#endif  // TRIKITE_CORE_MEASURE_HPP
