#ifndef TRIKITE_CORE_ANALYSIS_HPP
#define TRIKITE_CORE_ANALYSIS_HPP

#include <array>
#include <string>
#include <vector>

#include "core/enumerate.hpp"

namespace trikite::analysis {

using enumeration::ComplexityTable;

/// Exponent triple for the schedules phi(n) = n^mu, c(n) = n^eps, k(n) = n^gamma.
struct ConstantsConfig {
  double mu = 0.0;
  double epsilon = 0.0;
  double gamma = 0.0;
};

struct FeasibilityReport {
  bool feasible = false;
  // gamma <= 1, gamma+eps > 1, (gamma+eps)*mu > 1, eps < mu, 2eps < mu
  std::array<bool, 5> checks{};
};

FeasibilityReport check_feasibility(const ConstantsConfig& cfg);

/// Positive root of mu^2/2 + mu - 1 = 0: sqrt(3) - 1.
double solve_mu_star();

/// A feasible (gamma = 1, eps, mu) witness for any mu above the root;
/// throws Infeasible at or below it.
ConstantsConfig witness_config(double mu);

struct GrowthFit {
  double exponent = 0.0;
  double residual = 0.0;  // rms of log-log residuals
  int n_lo = 0, n_hi = 0;
  std::size_t points = 0;
};

/// Least-squares slope of log P_n against log n over [n_lo, n_hi].
/// Throws DegenerateRange with fewer than 3 positive entries.
GrowthFit growth_exponent(const ComplexityTable& table, int n_lo, int n_hi);

struct GapSequence {
  std::vector<int> times;  // all n >= 1 with P_n < e^{n^mu}
  std::vector<int> gaps;   // successive differences
  double mu = 0.0;
};

GapSequence gap_sequence(const ComplexityTable& table, double mu);

struct BoundRow {
  int n = 0;
  std::uint64_t p_n = 0;
  double log_bound = 0.0;  // n^{mu+eps}
  double ratio = 0.0;      // P_n / e^{n^{mu+eps}}
  std::uint64_t per_n_upper = 0;  // periodic orbits are bounded by P_n
};

struct BoundReport {
  std::vector<BoundRow> rows;
  double implied_c = 0.0;  // max ratio over the range
  double mu = 0.0, epsilon = 0.0;
};

BoundReport bound_report(const ComplexityTable& table, double mu, double epsilon);

std::string bound_csv(const BoundReport& report);
std::string bound_text(const BoundReport& report);

}  // namespace trikite::analysis

#endif  // TRIKITE_CORE_ANALYSIS_HPP
