#include "core/measure.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "core/symbolic.hpp"

namespace trikite::measure {

namespace {

constexpr int kShards = 16;

std::uint64_t shard_hits(const trigpoly::EvalPlan& plan, double eps, std::uint64_t seed,
                         std::uint64_t count) {
  SplitMix64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    double a = kTwoPi * rng.next_double();
    double b = kTwoPi * rng.next_double();
    if (std::abs(plan.eval(a, b)) < eps) hits++;
  }
  return hits;
}

}  // namespace

MeasureEstimate sublevel_fraction(const TrigPoly& p, double eps, const SamplerConfig& cfg) {
  if (p.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "sublevel measure of the zero polynomial");
  if (!(eps >= 0)) throw Error(ErrorCode::InvalidArgument, "eps must be >= 0");
  if (cfg.sample_count == 0) throw Error(ErrorCode::InvalidArgument, "sample_count must be > 0");

  trigpoly::EvalPlan base_plan(p);

  std::uint64_t per = cfg.sample_count / kShards;
  std::uint64_t rem = cfg.sample_count % kShards;
  std::array<std::uint64_t, kShards> counts{};
  std::array<std::uint64_t, kShards> seeds{};
  for (int s = 0; s < kShards; ++s) {
    counts[s] = per + (static_cast<std::uint64_t>(s) < rem ? 1 : 0);
    seeds[s] = derive_seed(cfg.seed, s);
  }

  std::array<std::uint64_t, kShards> hits{};
  int threads = std::clamp(cfg.threads, 1, kShards);
  if (threads <= 1) {
    for (int s = 0; s < kShards; ++s) hits[s] = shard_hits(base_plan, eps, seeds[s], counts[s]);
  } else {
    std::vector<std::future<std::uint64_t>> jobs;
    for (int s = 0; s < kShards; ++s)
      jobs.push_back(std::async(std::launch::async, [&, s] {
        trigpoly::EvalPlan plan(p);  // private tables per worker
        return shard_hits(plan, eps, seeds[s], counts[s]);
      }));
    for (int s = 0; s < kShards; ++s) hits[s] = jobs[s].get();
  }

  MeasureEstimate est;
  est.sample_count = cfg.sample_count;
  for (int s = 0; s < kShards; ++s) est.hits += hits[s];  // ordered reduction
  est.fraction = static_cast<double>(est.hits) / static_cast<double>(cfg.sample_count);
  est.standard_error =
      std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(cfg.sample_count));
  return est;
}

DecayTable decay_experiment(std::span<const int> degrees, double rate, double c_ref,
                            std::size_t family_size, std::uint64_t family_seed,
                            const SamplerConfig& sampler) {
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "no degrees given");
  DecayTable table;
  table.rate = rate;
  table.c_ref = c_ref;
  table.family_seed = family_seed;
  table.family_size = family_size;
  table.sampler = sampler;

  for (int m : degrees) {
    if (m < 4) throw Error(ErrorCode::InvalidArgument, "degree ladder starts at 4");
    DecayRow row;
    row.degree = m;
    double log_eps = -rate * static_cast<double>(m) * static_cast<double>(m);
    row.underflow = log_eps < std::log(std::numeric_limits<double>::min());
    row.eps = row.underflow ? 0.0 : std::exp(log_eps);
    row.reference = std::exp(-c_ref * m);

    auto family = symbolic::family_generate(symbolic::moves_for_degree(m), family_size,
                                            derive_seed(family_seed, m));
    row.family_size = family.size();
    for (const auto& item : family) {
      if (item.area.is_zero()) {  // family_generate filters these; belt and braces
        row.skipped_zero++;
        continue;
      }
      MeasureEstimate est = sublevel_fraction(item.area, row.eps, sampler);
      row.worst_fraction = std::max(row.worst_fraction, est.fraction);
    }
    table.rows.push_back(row);
  }
  return table;
}

std::string decay_csv(const DecayTable& table) {
  std::ostringstream out;
  out << "m,eps,worst_fraction,family_size,ref_exp_minus_cm,underflow\n";
  for (const DecayRow& r : table.rows) {
    out << r.degree << ',' << format_full(r.eps) << ',' << format_full(r.worst_fraction) << ','
        << r.family_size << ',' << format_full(r.reference) << ',' << (r.underflow ? 1 : 0)
        << '\n';
  }
  return out.str();
}

}  // namespace trikite::measure
