#include "coauth/pareto.hpp"

#include <algorithm>
#include <cmath>

#include "coauth/error.hpp"
#include "coauth/kernels.hpp"
#include "coauth/report_io.hpp"

namespace coauth {

ScoreMatrix::ScoreMatrix(std::vector<std::string> measures, std::vector<std::string> names,
                         std::vector<double> values)
    : measures_(std::move(measures)), names_(std::move(names)), values_(std::move(values)) {
  if (measures_.empty()) throw ParameterError("score matrix needs at least one measure");
  if (values_.size() != measures_.size() * names_.size())
    throw ParameterError("score matrix values do not match rows x measures");
  for (double v : values_)
    if (!std::isfinite(v)) throw ParameterError("score matrix holds a non-finite value");
}

ScoreMatrix ScoreMatrix::from_centralities(const CoauthGraph& g,
                                           std::span<const CentralityVector> columns) {
  const std::size_t n = g.node_count();
  const std::size_t k = columns.size();
  std::vector<std::string> measures;
  std::vector<double> values(n * k);
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].scores.size() != n) throw ParameterError("centrality vector length mismatch");
    measures.emplace_back(to_string(columns[j].measure));
    for (std::size_t i = 0; i < n; ++i) values[i * k + j] = columns[j].scores[i];
  }
  return ScoreMatrix(std::move(measures), g.names(), std::move(values));
}

std::size_t ScoreMatrix::column(std::string_view measure) const {
  auto it = std::find(measures_.begin(), measures_.end(), measure);
  if (it == measures_.end())
    throw ParameterError("unknown measure '" + std::string(measure) + "' in score matrix");
  return static_cast<std::size_t>(it - measures_.begin());
}

ScoreMatrix ScoreMatrix::project(std::span<const std::size_t> cols) const {
  std::vector<std::string> measures;
  for (auto c : cols) measures.push_back(measures_.at(c));
  std::vector<double> values;
  values.reserve(rows() * cols.size());
  for (std::size_t i = 0; i < rows(); ++i)
    for (auto c : cols) values.push_back(at(i, c));
  return ScoreMatrix(std::move(measures), names_, std::move(values));
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ParameterError("dominance check on tuples of different arity");
  return kernels::dominates_raw(a.data(), b.data(), a.size());
}

FrontAssignment front_layering(const ScoreMatrix& m, int workers) {
  FrontAssignment fa;
  fa.front_of = kernels::front_ranks_parallel(m.values(), m.rows(), m.arity(), workers);
  std::uint32_t depth = 0;
  for (auto f : fa.front_of) depth = std::max(depth, f);
  fa.fronts.resize(depth);
  for (NodeId i = 0; i < fa.front_of.size(); ++i) fa.fronts[fa.front_of[i] - 1].push_back(i);
  return fa;
}

PairwiseFront pairwise_front(const ScoreMatrix& m, std::string_view x_measure,
                             std::string_view y_measure) {
  if (x_measure == y_measure) throw ParameterError("pairwise front needs two distinct measures");
  const std::size_t cols[] = {m.column(x_measure), m.column(y_measure)};
  const ScoreMatrix proj = m.project(cols);
  const auto ranks = kernels::front_ranks_serial(proj.values(), proj.rows(), 2);

  PairwiseFront pf{std::string(x_measure), std::string(y_measure), {}, {}};
  pf.rows.reserve(m.rows());
  for (NodeId i = 0; i < m.rows(); ++i) {
    const bool on = ranks[i] == 1;
    if (on) pf.front.push_back(i);
    pf.rows.push_back({proj.at(i, 0), proj.at(i, 1), on});
  }
  return pf;
}

std::string front_report_csv(const ScoreMatrix& m, const FrontAssignment& fa,
                             std::size_t max_fronts) {
  std::string out = "front,author";
  for (const auto& name : m.measures()) out += ',' + csv_field(name);
  out += '\n';
  const std::size_t depth = max_fronts ? std::min(max_fronts, fa.fronts.size()) : fa.fronts.size();
  for (std::size_t f = 0; f < depth; ++f) {
    std::vector<NodeId> members = fa.fronts[f];
    std::sort(members.begin(), members.end(),
              [&](NodeId a, NodeId b) { return m.names()[a] < m.names()[b]; });
    for (NodeId u : members) {
      out += std::to_string(f + 1) + ',' + csv_field(m.names()[u]);
      for (double v : m.row(u)) out += ',' + format_double(v);
      out += '\n';
    }
  }
  return out;
}

std::string scatter_csv(const ScoreMatrix& m, const PairwiseFront& pf) {
  std::string out = "author,x,y,on_front\n";
  for (std::size_t i = 0; i < pf.rows.size(); ++i) {
    const auto& r = pf.rows[i];
    out += csv_field(m.names()[i]) + ',' + format_double(r.x) + ',' + format_double(r.y) + ',' +
           (r.on_front ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace coauth
