#include "coauth/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coauth/corpus.hpp"
#include "coauth/error.hpp"
#include "coauth/graph.hpp"
#include "coauth/macrostats.hpp"
#include "coauth/pareto.hpp"
#include "coauth/report_io.hpp"

namespace coauth::cli {

namespace fs = std::filesystem;

namespace {

/// Bad invocation or missing input; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

void require_file(const fs::path& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("missing --") + what);
  if (!fs::is_regular_file(path)) throw UsageError(std::string(what) + " file not found: " + path.string());
}

void prepare_out_dir(const fs::path& out) {
  if (out.empty()) throw UsageError("missing --out");
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) throw UsageError("cannot create output directory " + out.string());
}

struct LoadedGraph {
  std::vector<PaperRecord> records;
  CorpusSelection selection;
  CoauthGraph graph;
};

LoadedGraph load_artifacts(const RunConfig& config) {
  if (config.out.empty()) throw UsageError("missing --out");
  const fs::path corpus = config.out / kSelectedCorpusFile;
  if (!fs::is_regular_file(corpus))
    throw UsageError("missing build artifact " + corpus.string() + " (run 'build' first)");
  LoadedGraph lg;
  lg.records = parse_corpus(corpus);
  lg.selection = selection_from_records(lg.records);
  lg.graph = build_graph(lg.selection, lg.records);
  if (lg.graph.node_count() == 0) throw ValidationError("empty network");
  return lg;
}

std::string ranking_csv(const CoauthGraph& g, const CentralityVector& cv) {
  std::vector<NodeId> order(g.node_count());
  for (NodeId i = 0; i < order.size(); ++i) order[i] = i;
  // Node index order is name order, so a stable sort breaks ties by name.
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return cv.scores[a] > cv.scores[b]; });
  std::string out = "rank,author,score\n";
  for (std::size_t r = 0; r < order.size(); ++r)
    out += std::to_string(r + 1) + ',' + csv_field(g.name(order[r])) + ',' +
           format_double(cv.scores[order[r]]) + '\n';
  return out;
}

std::string ranking_meta(const CentralityVector& cv) {
  nlohmann::ordered_json meta;
  meta["measure"] = std::string(to_string(cv.measure));
  meta["normalization"] = cv.normalization;
  meta["iterations"] = cv.iterations;
  if (cv.params) {
    meta["params"] = {{"alpha", cv.params->alpha},
                      {"beta", cv.params->beta},
                      {"max_iter", cv.params->max_iter},
                      {"tol", cv.params->tol}};
  } else {
    meta["params"] = nullptr;
  }
  meta["eigenvalue"] = cv.eigenvalue ? nlohmann::ordered_json(*cv.eigenvalue) : nullptr;
  return meta.dump() + '\n';
}

CentralityVector compute_measure(const CoauthGraph& g, Measure m, const RunConfig& config) {
  switch (m) {
    case Measure::power: {
      BonacichParams p = default_bonacich_params(g, config.beta_fraction, config.tol, config.max_iter);
      p.alpha = config.alpha;
      return bonacich_power(g, p);
    }
    case Measure::eigenvector:
      return eigenvector_centrality(g, config.tol, config.max_iter);
    default:
      return compute(g, m, config.workers);
  }
}

}  // namespace

std::vector<Measure> parse_measures(const std::string& list) {
  std::vector<Measure> out;
  std::stringstream ss(list);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    if (tag.empty()) continue;
    auto m = parse_measure(tag);
    if (!m) throw UsageError("unknown measure '" + tag + "'; valid measures: " + measure_tag_list());
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  if (out.empty()) throw UsageError("no measures selected; valid measures: " + measure_tag_list());
  return out;
}

void cmd_build(const RunConfig& config) {
  require_file(config.corpus, "corpus");
  require_file(config.spec, "spec");
  prepare_out_dir(config.out);

  const RunSpec spec = load_run_spec(config.spec);
  const auto corpus = parse_corpus(config.corpus);
  const auto seeds = seed_authors(corpus, spec.seeds);
  if (seeds.empty()) std::cerr << "warning: no seed authors found; outputs will be empty\n";
  const CorpusSelection selection = expand(corpus, seeds, spec.relevance);
  if (selection.missing_seeds)
    std::cerr << "warning: " << selection.missing_seeds << " seed authors absent from the corpus\n";
  const auto records = selected_records(corpus, selection);
  const CoauthGraph g = build_graph(selection, records);

  write_selection(selection, config.out / kSelectedIdsFile, config.out / kAuthorManifestFile);
  write_corpus(records, config.out / kSelectedCorpusFile);
  write_file(config.out / kEdgeListFile, edge_list_csv(g));

  std::size_t seed_count = 0;
  for (const auto& [_, prov] : selection.authors) seed_count += prov == Provenance::seed;
  nlohmann::ordered_json summary;
  summary["corpus_records"] = corpus.size();
  summary["seed_authors"] = seeds.size();
  summary["selected_papers"] = selection.papers.size();
  summary["selected_authors"] = selection.authors.size();
  summary["seed_authors_selected"] = seed_count;
  summary["missing_seeds"] = selection.missing_seeds;
  summary["edges"] = g.edge_count();
  write_file(config.out / kBuildSummaryFile, summary.dump() + '\n');
}

void cmd_stats(const RunConfig& config) {
  const LoadedGraph lg = load_artifacts(config);
  const MacroReport r = macro_report(lg.graph, lg.selection, lg.records, config.workers);
  write_file(config.out / "macro.csv", macro_report_csv(r));
  write_file(config.out / "macro.json", macro_report_json(r));
}

void cmd_rank(const RunConfig& config) {
  if (config.measures.empty()) throw UsageError("no measures selected; valid measures: " + measure_tag_list());
  const LoadedGraph lg = load_artifacts(config);
  const CoauthGraph& g = lg.graph;

  std::vector<CentralityVector> columns;
  for (Measure m : config.measures) {
    columns.push_back(compute_measure(g, m, config));
    const std::string tag(to_string(m));
    write_file(config.out / ("ranking_" + tag + ".csv"), ranking_csv(g, columns.back()));
    write_file(config.out / ("ranking_" + tag + ".meta.json"), ranking_meta(columns.back()));
  }

  // Closeness is comparable only within a component.
  const ComponentMap comps = components(g);
  std::string comp_csv = "author,component,component_size\n";
  for (NodeId u = 0; u < g.node_count(); ++u)
    comp_csv += csv_field(g.name(u)) + ',' + std::to_string(comps.component_of[u] + 1) + ',' +
                std::to_string(comps.sizes[comps.component_of[u]]) + '\n';
  write_file(config.out / "components.csv", comp_csv);

  const ScoreMatrix matrix = ScoreMatrix::from_centralities(g, columns);
  const FrontAssignment fronts = front_layering(matrix, config.workers);
  write_file(config.out / "fronts.csv", front_report_csv(matrix, fronts, config.max_fronts));

  for (std::size_t i = 0; i < matrix.arity(); ++i) {
    for (std::size_t j = i + 1; j < matrix.arity(); ++j) {
      const auto& x = matrix.measures()[i];
      const auto& y = matrix.measures()[j];
      const PairwiseFront pf = pairwise_front(matrix, x, y);
      write_file(config.out / ("scatter_" + x + "_" + y + ".csv"), scatter_csv(matrix, pf));
    }
  }

  const auto bet_it = std::find_if(columns.begin(), columns.end(), [](const CentralityVector& c) {
    return c.measure == Measure::betweenness;
  });
  const CentralityVector bet = bet_it != columns.end() ? *bet_it : betweenness(g, config.workers);
  try {
    const RankFit fit = rank_fit(bet, config.head_cut);
    write_file(config.out / "rankfit.csv", rank_fit_csv(fit));
    write_file(config.out / "rankfit_plot.csv", rank_plot_csv(bet.scores, fit));
  } catch (const InsufficientDataError& e) {
    std::cerr << "warning: betweenness rank fit skipped: " << e.what() << '\n';
  }
}

int run(std::vector<std::string> args) {
  CLI::App app{"Co-authorship network centrality and Pareto front analysis", "coauth"};
  app.require_subcommand(1);

  RunConfig config;
  std::string measures;

  auto* build = app.add_subcommand("build", "Select the corpus and build the co-authorship graph");
  build->add_option("--corpus", config.corpus, "Line-delimited JSON paper records")->required();
  build->add_option("--spec", config.spec, "Relevance and seed configuration (JSON object)")->required();
  build->add_option("--out", config.out, "Output directory")->required();

  auto* stats = app.add_subcommand("stats", "Macroscopic network statistics");
  stats->add_option("--out", config.out, "Directory holding build artifacts")->required();
  stats->add_option("--workers", config.workers, "Worker threads (0 = all)");

  auto* rank = app.add_subcommand("rank", "Centrality rankings, Pareto fronts and rank fit");
  rank->add_option("--out", config.out, "Directory holding build artifacts")->required();
  rank->add_option("--measures", measures, "Comma-separated measures: " + measure_tag_list());
  rank->add_option("--beta-frac", config.beta_fraction, "Bonacich beta as a fraction of 1/lambda_max");
  rank->add_option("--alpha", config.alpha, "Bonacich alpha");
  rank->add_option("--tol", config.tol, "Convergence tolerance of iterative solvers")
      ->check(CLI::PositiveNumber);
  rank->add_option("--max-iter", config.max_iter, "Iteration limit of iterative solvers")
      ->check(CLI::PositiveNumber);
  rank->add_option("--head-cut", config.head_cut, "Last rank of the power-law head")
      ->check(CLI::Range(2, 1 << 30));
  rank->add_option("--max-fronts", config.max_fronts, "Fronts written to fronts.csv (0 = all)");
  rank->add_option("--workers", config.workers, "Worker threads (0 = all)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!measures.empty()) config.measures = parse_measures(measures);
    if (build->parsed()) cmd_build(config);
    if (stats->parsed()) cmd_stats(config);
    if (rank->parsed()) cmd_rank(config);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args));
}

}  // namespace coauth::cli
