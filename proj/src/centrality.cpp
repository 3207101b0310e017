#include "coauth/centrality.hpp"

#include <algorithm>
#include <cmath>

#include "coauth/error.hpp"
#include "coauth/kernels.hpp"

namespace coauth {

namespace {

constexpr double kSpectralMargin = 1e-9;

void require_edges(const CoauthGraph& g) {
  if (g.edge_count() == 0) throw ParameterError("graph has no edges");
}

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

enum class StopRule { eigenvalue_change, residual };

// Power iteration on A + I. The shift keeps -lambda_max of bipartite
// components from tying with lambda_max; the start vector is the
// indicator of `support`, which has positive Perron projection.
EigenPair shifted_power_iteration(const CoauthGraph& g, const std::vector<bool>& support, double tol,
                                  int max_iter, StopRule rule) {
  if (!(tol > 0.0)) throw ParameterError("tol must be positive");
  if (max_iter <= 0) throw ParameterError("max_iter must be positive");
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 0.0), y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = support[i] ? 1.0 : 0.0;
  const double n0 = norm2(x);
  for (double& v : x) v /= n0;

  EigenPair out;
  double previous = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    for (NodeId u = 0; u < n; ++u) {
      double s = x[u];
      for (NodeId v : g.neighbors(u)) s += x[v];
      y[u] = s;
    }
    double lambda = 0.0;  // Rayleigh quotient of A at unit x
    for (std::size_t i = 0; i < n; ++i) lambda += x[i] * (y[i] - x[i]);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      residual = std::max(residual, std::abs(y[i] - x[i] - lambda * x[i]));

    const bool done = rule == StopRule::residual ? residual < tol
                                                 : (it > 1 && std::abs(lambda - previous) < tol);
    if (done) {
      out.value = lambda;
      out.vector = x;
      out.iterations = it;
      out.residual = residual;
      return out;
    }
    previous = lambda;
    const double ny = norm2(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
  }
  throw ConvergenceError("power iteration did not converge", previous, max_iter);
}

std::vector<bool> giant_support(const CoauthGraph& g) {
  const ComponentMap comps = components(g);
  std::vector<bool> support(g.node_count());
  for (std::size_t i = 0; i < support.size(); ++i) support[i] = comps.component_of[i] == 0;
  return support;
}

}  // namespace

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::degree: return "degree";
    case Measure::betweenness: return "betweenness";
    case Measure::closeness: return "closeness";
    case Measure::power: return "power";
    case Measure::eigenvector: return "eigenvector";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view tag) {
  for (Measure m : kAllMeasures)
    if (to_string(m) == tag) return m;
  return std::nullopt;
}

std::string measure_tag_list() {
  std::string out;
  for (Measure m : kAllMeasures) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return out;
}

CentralityVector degree(const CoauthGraph& g) {
  CentralityVector cv{Measure::degree, std::vector<double>(g.node_count()), {}, "raw", 0, {}};
  for (NodeId u = 0; u < g.node_count(); ++u) cv.scores[u] = static_cast<double>(g.degree(u));
  return cv;
}

CentralityVector betweenness(const CoauthGraph& g, int workers) {
  return {Measure::betweenness, kernels::betweenness_parallel(g, workers), {}, "unordered-pairs",
          0, {}};
}

CentralityVector closeness(const CoauthGraph& g, int workers) {
  const auto sums = kernels::source_sums_parallel(g, workers);
  CentralityVector cv{Measure::closeness, std::vector<double>(g.node_count(), 0.0), {},
                      "reciprocal-farness-reachable", 0, {}};
  for (NodeId u = 0; u < g.node_count(); ++u)
    if (sums.farness[u] > 0) cv.scores[u] = 1.0 / static_cast<double>(sums.farness[u]);
  return cv;
}

double dominant_eigenvalue(const CoauthGraph& g, double tol, int max_iter) {
  require_edges(g);
  return shifted_power_iteration(g, giant_support(g), tol, max_iter, StopRule::eigenvalue_change)
      .value;
}

double spectral_radius(const CoauthGraph& g, double tol, int max_iter) {
  require_edges(g);
  // Isolated nodes sit at eigenvalue 1 of A + I and decay against
  // lambda_max + 1 >= 2, so they need not be excluded.
  return shifted_power_iteration(g, std::vector<bool>(g.node_count(), true), tol, max_iter,
                                 StopRule::eigenvalue_change)
      .value;
}

BonacichParams default_bonacich_params(const CoauthGraph& g, double beta_fraction, double tol,
                                       int max_iter) {
  BonacichParams p;
  p.tol = tol;
  p.max_iter = max_iter;
  p.beta = beta_fraction / spectral_radius(g, tol, max_iter);
  return p;
}

BonacichFixedPoint bonacich_fixed_point(const CoauthGraph& g, const BonacichParams& p) {
  require_edges(g);
  if (!(p.tol > 0.0) || p.max_iter <= 0) throw ParameterError("tol and max_iter must be positive");
  if (p.alpha == 0.0 || !std::isfinite(p.alpha)) throw ParameterError("alpha must be finite and nonzero");
  BonacichFixedPoint out;
  out.spectral_radius = spectral_radius(g, std::min(p.tol, kDefaultTol), p.max_iter);
  // The Rayleigh estimate approaches lambda_max from below; the margin
  // keeps boundary values of beta from slipping through.
  if (!(std::abs(p.beta) * out.spectral_radius < 1.0 - kSpectralMargin))
    throw ParameterError("|beta| * lambda_max must be < 1 (beta " + std::to_string(p.beta) +
                         ", lambda_max " + std::to_string(out.spectral_radius) + ")");

  const std::size_t n = g.node_count();
  std::vector<double> c(n, 0.0), next(n, 0.0);
  double change = 0.0;
  for (int it = 1; it <= p.max_iter; ++it) {
    change = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      double s = 0.0;
      for (NodeId v : g.neighbors(u)) s += p.alpha + p.beta * c[v];
      next[u] = s;
      change = std::max(change, std::abs(s - c[u]));
    }
    c.swap(next);
    if (change < p.tol) {
      double sq = 0.0;
      for (double v : c) sq += v * v;
      out.raw = std::move(c);
      out.scale = std::sqrt(static_cast<double>(n) / sq);
      out.iterations = it;
      return out;
    }
  }
  throw ConvergenceError("Bonacich iteration did not converge; max change", change, p.max_iter);
}

CentralityVector bonacich_power(const CoauthGraph& g, const BonacichParams& p) {
  BonacichFixedPoint fp = bonacich_fixed_point(g, p);
  CentralityVector cv{Measure::power, std::move(fp.raw), p, "mean-square-one", fp.iterations,
                      fp.spectral_radius};
  for (double& v : cv.scores) v *= fp.scale;
  return cv;
}

CentralityVector eigenvector_centrality(const CoauthGraph& g, double tol, int max_iter) {
  require_edges(g);
  EigenPair ep = shifted_power_iteration(g, giant_support(g), tol, max_iter, StopRule::residual);
  // Sign convention: largest-magnitude entry positive.
  auto it = std::max_element(ep.vector.begin(), ep.vector.end(),
                             [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (*it < 0)
    for (double& v : ep.vector) v = -v;
  for (double& v : ep.vector)
    if (v <= 0.0) v = 0.0;  // folds -0
  return {Measure::eigenvector, std::move(ep.vector), {}, "unit-l2", ep.iterations, ep.value};
}

CentralityVector compute(const CoauthGraph& g, Measure m, int workers) {
  switch (m) {
    case Measure::degree: return degree(g);
    case Measure::betweenness: return betweenness(g, workers);
    case Measure::closeness: return closeness(g, workers);
    case Measure::power: return bonacich_power(g, default_bonacich_params(g));
    case Measure::eigenvector: return eigenvector_centrality(g);
  }
  throw ParameterError("unknown measure");
}

}  // namespace coauth
