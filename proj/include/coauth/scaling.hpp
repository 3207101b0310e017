#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coauth/centrality.hpp"

namespace coauth {

inline constexpr std::size_t kDefaultHeadCut = 500;
inline constexpr std::size_t kMinFitPoints = 10;

/// Rank-value model  value(r) = amplitude * r^-exponent * exp(-r / cutoff_scale).
struct RankFit {
  std::size_t head_cut = 0;  // after clamping to the number of positive scores
  double exponent = 0.0;
  double amplitude = 0.0;
  double cutoff_scale = 0.0;  // +inf when no cutoff is detected
  double r_squared_head = 0.0;
  std::size_t points = 0;  // positive scores used

  double model(double rank) const;
};

/// Fits the rank-value model to the positive entries of `scores`.
///
/// The exponent comes from a log-log least-squares line over ranks
/// 1..head_cut. With the exponent held, the cutoff scale is chosen by a
/// log-spaced grid search over [1, 1000 x points] (plus "no cutoff")
/// minimizing squared log residuals over all ranks, then refined exactly
/// inside the best grid cell; the amplitude is re-estimated in closed form
/// for the chosen cutoff. Data with no visible cutoff yields
/// cutoff_scale = +inf.
///
/// Throws InsufficientDataError with fewer than 10 positive scores.
RankFit rank_fit(std::span<const double> scores, std::optional<std::size_t> head_cut = std::nullopt);
RankFit rank_fit(const CentralityVector& v, std::optional<std::size_t> head_cut = std::nullopt);

/// Positive scores sorted descending (rank r at index r - 1).
std::vector<double> rank_values(std::span<const double> scores);

std::string rank_fit_csv(const RankFit& fit);
/// `rank,value,model_value`
std::string rank_plot_csv(std::span<const double> scores, const RankFit& fit);

}  // namespace coauth
