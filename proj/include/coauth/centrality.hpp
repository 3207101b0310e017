#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth {

enum class Measure { degree, betweenness, closeness, power, eigenvector };

inline constexpr Measure kAllMeasures[] = {Measure::degree, Measure::betweenness,
                                           Measure::closeness, Measure::power,
                                           Measure::eigenvector};

std::string_view to_string(Measure m) noexcept;
std::optional<Measure> parse_measure(std::string_view tag);
/// "degree, betweenness, closeness, power, eigenvector"
std::string measure_tag_list();

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultMaxIter = 10'000;
inline constexpr double kDefaultBetaFraction = 0.75;

struct BonacichParams {
  double alpha = 1.0;
  double beta = 0.0;
  int max_iter = kDefaultMaxIter;
  double tol = kDefaultTol;  // on the max absolute change between iterates
};

struct CentralityVector {
  Measure measure = Measure::degree;
  std::vector<double> scores;
  std::optional<BonacichParams> params;
  std::string normalization;
  int iterations = 0;
  std::optional<double> eigenvalue;
};

CentralityVector degree(const CoauthGraph& g);

/// Exact unordered-pair betweenness, parallel over BFS sources.
CentralityVector betweenness(const CoauthGraph& g, int workers = 0);

/// 1 / farness over reachable nodes; isolated nodes score 0.
CentralityVector closeness(const CoauthGraph& g, int workers = 0);

/// Result of a power iteration on A + I restricted to a node set.
struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit 2-norm, zero outside the node set
  int iterations = 0;
  double residual = 0.0;  // max |A v - value v|
};

/// Largest eigenvalue of A on the giant component. Converged when two
/// successive Rayleigh estimates differ by less than `tol`.
double dominant_eigenvalue(const CoauthGraph& g, double tol = kDefaultTol,
                           int max_iter = kDefaultMaxIter);

/// Spectral radius of the whole adjacency matrix (max over components).
double spectral_radius(const CoauthGraph& g, double tol = kDefaultTol,
                       int max_iter = kDefaultMaxIter);

/// beta = beta_fraction / spectral_radius, alpha = 1.
BonacichParams default_bonacich_params(const CoauthGraph& g,
                                       double beta_fraction = kDefaultBetaFraction,
                                       double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

/// Unnormalized fixed point of c = A (alpha 1 + beta c), iterated from 0.
struct BonacichFixedPoint {
  std::vector<double> raw;
  double scale = 1.0;  // applied by bonacich_power so that mean(c^2) = 1
  int iterations = 0;
  double spectral_radius = 0.0;
};

BonacichFixedPoint bonacich_fixed_point(const CoauthGraph& g, const BonacichParams& p);
CentralityVector bonacich_power(const CoauthGraph& g, const BonacichParams& p);

/// Perron vector of the giant component, unit norm, nonnegative; nodes
/// outside the giant component score 0. Converged when
/// max |A c - lambda c| < tol.
CentralityVector eigenvector_centrality(const CoauthGraph& g, double tol = kDefaultTol,
                                        int max_iter = kDefaultMaxIter);

/// Dispatches on `m` with default parameters.
CentralityVector compute(const CoauthGraph& g, Measure m, int workers = 0);

}  // namespace coauth
