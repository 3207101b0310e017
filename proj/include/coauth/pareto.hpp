#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coauth/centrality.hpp"
#include "coauth/graph.hpp"

namespace coauth {

/// Row-major per-node score tuples. All measures are maximized.
class ScoreMatrix {
 public:
  ScoreMatrix(std::vector<std::string> measures, std::vector<std::string> names,
              std::vector<double> values);

  /// One column per centrality vector, in the given order.
  static ScoreMatrix from_centralities(const CoauthGraph& g,
                                       std::span<const CentralityVector> columns);

  std::size_t rows() const noexcept { return names_.size(); }
  std::size_t arity() const noexcept { return measures_.size(); }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * arity(), arity()};
  }
  double at(std::size_t i, std::size_t j) const { return values_[i * arity() + j]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<std::string>& measures() const noexcept { return measures_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t column(std::string_view measure) const;  // throws ParameterError

  /// Columns `cols` only, in that order.
  ScoreMatrix project(std::span<const std::size_t> cols) const;

 private:
  std::vector<std::string> measures_;
  std::vector<std::string> names_;
  std::vector<double> values_;
};

struct FrontAssignment {
  std::vector<std::uint32_t> front_of;        // 1-based
  std::vector<std::vector<NodeId>> fronts;  // fronts[f-1], ascending node index
};

/// Throws ParameterError on arity mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Successive non-dominated sorting; equal tuples share a front.
FrontAssignment front_layering(const ScoreMatrix& m, int workers = 0);

struct ScatterRow {
  double x = 0.0;
  double y = 0.0;
  bool on_front = false;
};

struct PairwiseFront {
  std::string x_measure;
  std::string y_measure;
  std::vector<NodeId> front;     // ascending node index
  std::vector<ScatterRow> rows;  // one per node
};

PairwiseFront pairwise_front(const ScoreMatrix& m, std::string_view x_measure,
                             std::string_view y_measure);

/// `front,author,<measures...>`; fronts ascending, names ascending within
/// a front. `max_fronts` = 0 keeps every front.
std::string front_report_csv(const ScoreMatrix& m, const FrontAssignment& fa,
                             std::size_t max_fronts = 0);

/// `author,x,y,on_front`, rows in node order.
std::string scatter_csv(const ScoreMatrix& m, const PairwiseFront& pf);

}  // namespace coauth
