#include "coauth/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "coauth/error.hpp"
#include "coauth/report_io.hpp"

namespace coauth {

namespace {

constexpr std::size_t kGridPoints = 2001;
constexpr double kGridTopFactor = 1000.0;

// With the exponent fixed and the amplitude profiled out, the squared
// log-residual is a convex quadratic in u = 1 / cutoff:
//   sse(u) = sum_i (ybar_i + u rbar_i)^2
// where ybar and rbar are the centred values of log v + a log r and r.
struct CutoffObjective {
  std::vector<double> ybar;
  std::vector<double> rbar;
  double y_mean = 0.0;
  double r_mean = 0.0;

  CutoffObjective(const std::vector<double>& log_rank, const std::vector<double>& log_value,
                  double exponent) {
    const std::size_t m = log_rank.size();
    ybar.resize(m);
    rbar.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      ybar[i] = log_value[i] + exponent * log_rank[i];
      rbar[i] = static_cast<double>(i + 1);
      y_mean += ybar[i];
      r_mean += rbar[i];
    }
    y_mean /= static_cast<double>(m);
    r_mean /= static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      ybar[i] -= y_mean;
      rbar[i] -= r_mean;
    }
  }

  double sse(double u) const {
    double s = 0.0;
    for (std::size_t i = 0; i < ybar.size(); ++i) {
      const double e = ybar[i] + u * rbar[i];
      s += e * e;
    }
    return s;
  }

  /// Exact minimizer on [lo, hi].
  double argmin(double lo, double hi) const {
    double yr = 0.0, rr = 0.0;
    for (std::size_t i = 0; i < ybar.size(); ++i) {
      yr += ybar[i] * rbar[i];
      rr += rbar[i] * rbar[i];
    }
    return std::clamp(-yr / rr, lo, hi);
  }

  double log_amplitude(double u) const { return y_mean + u * r_mean; }
};

}  // namespace

double RankFit::model(double rank) const {
  return amplitude * std::pow(rank, -exponent) * std::exp(-rank / cutoff_scale);
}

std::vector<double> rank_values(std::span<const double> scores) {
  std::vector<double> v;
  for (double s : scores)
    if (s > 0.0 && std::isfinite(s)) v.push_back(s);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

RankFit rank_fit(std::span<const double> scores, std::optional<std::size_t> head_cut) {
  const std::vector<double> values = rank_values(scores);
  const std::size_t m = values.size();
  if (m < kMinFitPoints)
    throw InsufficientDataError("rank fit needs at least " + std::to_string(kMinFitPoints) +
                                " positive scores, got " + std::to_string(m));
  const std::size_t requested = head_cut.value_or(kDefaultHeadCut);
  if (requested < 2) throw ParameterError("head_cut must be at least 2");

  RankFit fit;
  fit.points = m;
  fit.head_cut = std::min(requested, m);

  std::vector<double> log_rank(m), log_value(m);
  for (std::size_t i = 0; i < m; ++i) {
    log_rank[i] = std::log(static_cast<double>(i + 1));
    log_value[i] = std::log(values[i]);
  }

  // Ordinary least squares on the head.
  const std::size_t h = fit.head_cut;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < h; ++i) {
    mx += log_rank[i];
    my += log_value[i];
  }
  mx /= static_cast<double>(h);
  my /= static_cast<double>(h);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < h; ++i) {
    const double dx = log_rank[i] - mx, dy = log_value[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxy / sxx;
  fit.exponent = slope == 0.0 ? 0.0 : -slope;
  const double ss_res = std::max(0.0, syy - slope * sxy);
  fit.r_squared_head = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;

  // Candidates: u = 0 (no cutoff) followed by cutoffs log-spaced from
  // 1000 * m down to 1 rank. The best grid cell is then refined exactly.
  const CutoffObjective objective(log_rank, log_value, fit.exponent);
  const double lo = std::log(kGridTopFactor * static_cast<double>(m));
  std::vector<double> grid(kGridPoints + 1, 0.0);
  for (std::size_t i = 0; i < kGridPoints; ++i)
    grid[i + 1] = std::exp(-lo * (1.0 - static_cast<double>(i) / static_cast<double>(kGridPoints - 1)));
  std::size_t best = 0;
  double best_sse = objective.sse(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double sse = objective.sse(grid[i]);
    if (sse < best_sse) {
      best_sse = sse;
      best = i;
    }
  }

  double u = objective.argmin(grid[best == 0 ? 0 : best - 1],
                              grid[std::min(best + 1, grid.size() - 1)]);
  // Cutoffs past the top of the grid are indistinguishable from none.
  if (u < grid[1]) u = 0.0;
  fit.cutoff_scale = u > 0.0 ? 1.0 / u : std::numeric_limits<double>::infinity();
  fit.amplitude = std::exp(objective.log_amplitude(u));
  return fit;
}

RankFit rank_fit(const CentralityVector& v, std::optional<std::size_t> head_cut) {
  return rank_fit(std::span<const double>(v.scores), head_cut);
}

std::string rank_fit_csv(const RankFit& fit) {
  std::string out = "key,value\n";
  out += "head_cut," + std::to_string(fit.head_cut) + '\n';
  out += "exponent," + format_double(fit.exponent) + '\n';
  out += "amplitude," + format_double(fit.amplitude) + '\n';
  out += "cutoff_scale," + format_double(fit.cutoff_scale) + '\n';
  out += "r_squared_head," + format_double(fit.r_squared_head) + '\n';
  out += "points," + std::to_string(fit.points) + '\n';
  return out;
}

std::string rank_plot_csv(std::span<const double> scores, const RankFit& fit) {
  const auto values = rank_values(scores);
  std::string out = "rank,value,model_value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double r = static_cast<double>(i + 1);
    out += std::to_string(i + 1) + ',' + format_double(values[i]) + ',' +
           format_double(fit.model(r)) + '\n';
  }
  return out;
}

}  // namespace coauth
