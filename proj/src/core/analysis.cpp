#include "core/analysis.hpp"

#include <cmath>
#include <sstream>

namespace trikite::analysis {

FeasibilityReport check_feasibility(const ConstantsConfig& cfg) {
  FeasibilityReport rep;
  rep.checks[0] = cfg.gamma <= 1.0;
  rep.checks[1] = cfg.gamma + cfg.epsilon > 1.0;
  rep.checks[2] = (cfg.gamma + cfg.epsilon) * cfg.mu > 1.0;
  rep.checks[3] = cfg.epsilon < cfg.mu;
  rep.checks[4] = 2.0 * cfg.epsilon < cfg.mu;
  rep.feasible = rep.checks[0] && rep.checks[1] && rep.checks[2] && rep.checks[3] && rep.checks[4];
  return rep;
}

double solve_mu_star() { return std::sqrt(3.0) - 1.0; }

ConstantsConfig witness_config(double mu) {
  // With gamma = 1 the system reduces to (1+eps) mu > 1 and 2 eps < mu, so an
  // eps exists iff 1/mu - 1 < mu/2, i.e. mu above the positive root.
  double lo = 1.0 / mu - 1.0;
  double hi = mu / 2.0;
  if (!(mu > 0) || !(lo < hi))
    throw Error(ErrorCode::Infeasible,
                "no feasible epsilon for mu = " + format_full(mu) +
                    " (needs mu > sqrt(3) - 1)");
  double eps = std::max(lo, 0.0) + 0.5 * (hi - std::max(lo, 0.0));
  ConstantsConfig cfg{mu, eps, 1.0};
  if (!check_feasibility(cfg).feasible)
    throw Error(ErrorCode::Internal, "witness construction failed feasibility");
  return cfg;
}

GrowthFit growth_exponent(const ComplexityTable& table, int n_lo, int n_hi) {
  GrowthFit fit;
  fit.n_lo = n_lo;
  fit.n_hi = n_hi;
  std::vector<std::pair<double, double>> xy;
  for (int n = std::max(1, n_lo); n <= std::min(n_hi, table.n_max()); ++n) {
    if (table.at(n) == 0) continue;
    xy.emplace_back(std::log(static_cast<double>(n)),
                    std::log(static_cast<double>(table.at(n))));
  }
  fit.points = xy.size();
  if (xy.size() < 3)
    throw Error(ErrorCode::DegenerateRange,
                "need at least 3 positive table entries in the fit range");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : xy) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(xy.size());
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw Error(ErrorCode::DegenerateRange, "degenerate abscissas");
  fit.exponent = (n * sxy - sx * sy) / denom;
  double intercept = (sy - fit.exponent * sx) / n;
  double ss = 0;
  for (auto [x, y] : xy) {
    double r = y - (intercept + fit.exponent * x);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

GapSequence gap_sequence(const ComplexityTable& table, double mu) {
  if (!(mu > 0.0) || mu > 1.0)
    throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1]");
  GapSequence seq;
  seq.mu = mu;
  for (int n = 1; n <= table.n_max(); ++n) {
    double log_p = table.at(n) == 0
                       ? -std::numeric_limits<double>::infinity()
                       : std::log(static_cast<double>(table.at(n)));
    if (log_p < std::pow(n, mu)) seq.times.push_back(n);
  }
  for (std::size_t i = 1; i < seq.times.size(); ++i)
    seq.gaps.push_back(seq.times[i] - seq.times[i - 1]);
  return seq;
}

BoundReport bound_report(const ComplexityTable& table, double mu, double epsilon) {
  BoundReport rep;
  rep.mu = mu;
  rep.epsilon = epsilon;
  for (int n = 1; n <= table.n_max(); ++n) {
    BoundRow row;
    row.n = n;
    row.p_n = table.at(n);
    row.log_bound = std::pow(n, mu + epsilon);
    row.ratio = row.p_n == 0
                    ? 0.0
                    : std::exp(std::log(static_cast<double>(row.p_n)) - row.log_bound);
    row.per_n_upper = row.p_n;
    rep.implied_c = std::max(rep.implied_c, row.ratio);
    rep.rows.push_back(row);
  }
  return rep;
}

std::string bound_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "n,p_n,bound_exponent,ratio,per_n_upper\n";
  for (const BoundRow& r : report.rows)
    out << r.n << ',' << r.p_n << ',' << format_full(r.log_bound) << ',' << format_full(r.ratio)
        << ',' << r.per_n_upper << '\n';
  return out.str();
}

std::string bound_text(const BoundReport& report) {
  std::ostringstream out;
  out << "growth bound comparison, exponent mu+eps = " << format_full(report.mu + report.epsilon)
      << "\n";
  out << "P_n against exp(n^(mu+eps)); ratios are informational, the bound is asymptotic\n";
  for (const BoundRow& r : report.rows)
    out << "  n = " << r.n << "  P_n = " << r.p_n << "  ratio = " << format_full(r.ratio)
        << "\n";
  out << "implied C (max ratio over range) = " << format_full(report.implied_c) << "\n";
  out << "periodic-orbit count shares the bound: Per_n <= P_n per row\n";
  return out.str();
}

}  // namespace trikite::analysis
