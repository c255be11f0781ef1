#include "coauth/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "coauth/crossref.hpp"
#include "coauth/error.hpp"
#include "coauth/graph.hpp"
#include "coauth/ingest.hpp"
#include "coauth/metrics.hpp"
#include "coauth/report.hpp"
#include "coauth/stats.hpp"

namespace coauth::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string papers;
  std::string focal;
  std::string manifest;
  std::string table_a;
  std::string table_b;
  std::string metric;
  std::string out;
  std::string svg;
  std::string dot;
  std::string edge_list;
  std::string json;
  std::string query;
  std::string mailto;
  int rows = 100;
  bool full_precision = false;
  bool pooled = false;

  NumberFormat format() const { return NumberFormat{4, full_precision}; }
};

// Writes to `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  write(file);
  if (!file) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const auto records = parse_publications(cfg.papers);
  const auto graph = build_ego_network(records, AuthorLabel::normalize(cfg.focal));
  emit(cfg.out, out, [&](std::ostream& o) { write_graph_json(o, graph); });
  if (!cfg.dot.empty()) emit(cfg.dot, out, [&](std::ostream& o) { write_dot(o, graph); });
  if (!cfg.edge_list.empty()) {
    emit(cfg.edge_list, out, [&](std::ostream& o) { write_edge_list_csv(o, graph); });
  }
  return kSuccess;
}

struct AuthorOutcome {
  std::optional<MetricRow> row;
  std::string error;
  std::string warning;
};

AuthorOutcome summarize_author(const ManifestEntry& entry, const std::string& cohort) {
  AuthorOutcome outcome;
  try {
    const auto records = parse_publications(entry.publications);
    const auto graph = build_ego_network(records, entry.author);
    outcome.row = summarize(graph);
    if (entry.expected) {
      const auto listed = std::count_if(records.begin(), records.end(), [&](const auto& r) {
        return r.has_author(entry.author);
      });
      std::optional<int> expected;
      if (cohort == "retracted") expected = entry.expected->retracted;
      if (cohort == "non_retracted" || cohort == "non-retracted") {
        expected = entry.expected->non_retracted;
      }
      if (expected && listed != *expected) {
        outcome.warning = std::to_string(listed) + " papers found, manifest expects " +
                          std::to_string(*expected);
      }
    }
  } catch (const std::exception& e) {
    outcome.error = e.what();
  }
  return outcome;
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto manifest = parse_manifest(cfg.manifest);
  const auto& entries = manifest.entries;
  std::vector<AuthorOutcome> outcomes(entries.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(entries.size()); ++i) {
    const auto k = static_cast<std::size_t>(i);
    outcomes[k] = summarize_author(entries[k], manifest.cohort_name);
  }

  std::vector<MetricTableRow> rows;
  bool failed = false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& name = entries[i].author.str();
    if (!outcomes[i].warning.empty()) {
      err << "warning: " << name << ": " << outcomes[i].warning << '\n';
    }
    if (outcomes[i].row) {
      rows.push_back({name, *outcomes[i].row});
    } else {
      failed = true;
      err << "error: " << name << ": " << outcomes[i].error << '\n';
    }
  }
  const MetricTable table(manifest.cohort_name, std::move(rows));
  emit(cfg.out, out, [&](std::ostream& o) { write_metric_table_csv(o, table, cfg.format()); });
  if (!cfg.json.empty()) {
    emit(cfg.json, out, [&](std::ostream& o) { write_metric_table_json(o, table); });
  }
  return failed ? kPartialFailure : kSuccess;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const auto a = parse_metric_table(fs::path(cfg.table_a));
  const auto b = parse_metric_table(fs::path(cfg.table_b));
  const auto report =
      compare_cohorts(a, b, cfg.pooled ? VarianceModel::Pooled : VarianceModel::Welch);
  emit(cfg.out, out, [&](std::ostream& o) { write_comparison_csv(o, report, cfg.format()); });
  return kSuccess;
}

int cmd_correlate(const RunConfig& cfg, std::ostream& out) {
  const auto a = parse_metric_table(fs::path(cfg.table_a));
  std::string title = a.cohort_name();
  CorrelationMatrix matrix;
  if (cfg.table_b.empty()) {
    matrix = correlation_matrix(a);
  } else {
    const auto b = parse_metric_table(fs::path(cfg.table_b));
    matrix = correlation_matrix(a, b);
    title += " vs " + b.cohort_name();
  }
  emit(cfg.out, out, [&](std::ostream& o) { write_correlation_csv(o, matrix, cfg.format()); });
  if (!cfg.svg.empty()) {
    emit(cfg.svg, out, [&](std::ostream& o) { write_correlation_svg(o, matrix, title); });
  }
  return kSuccess;
}

int cmd_ccdf(const RunConfig& cfg, std::ostream& out) {
  const Metric metric = parse_metric(cfg.metric);
  const auto table = parse_metric_table(fs::path(cfg.table_a));
  std::vector<double> sample;
  for (const auto& v : table.column(metric)) {
    if (v) sample.push_back(*v);
  }
  if (sample.empty()) {
    throw Error(ErrorCode::EmptyColumn,
                "column " + std::string(metric_id(metric)) + " has no defined values");
  }
  const auto points = ccdf(sample);
  emit(cfg.out, out, [&](std::ostream& o) { write_ccdf_csv(o, points, cfg.format()); });
  return kSuccess;
}

int cmd_fetch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CrossrefOptions options;
  options.mailto = cfg.mailto;
  std::vector<PublicationRecord> records;
  if (cfg.rows > 0) {
    auto transport = make_crossref_transport();
    records = fetch_crossref(*transport, cfg.query, cfg.rows, options);
  }
  emit(cfg.out, out, [&](std::ostream& o) { write_publications_csv(o, records); });
  err << "fetched " << records.size() << " record(s)\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Co-authorship ego networks: metrics and cohort statistics", "coauthnet"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_precision = [&](CLI::App* sub) {
    sub->add_flag("--full-precision", cfg.full_precision,
                  "Shortest round-trip reals instead of 4 decimals");
  };

  auto* build = app.add_subcommand("build", "Build one author's ego network");
  build->add_option("--papers", cfg.papers, "Publications CSV or JSON")->required();
  build->add_option("--focal", cfg.focal, "Focal author label")->required();
  build->add_option("--out", cfg.out, "Graph JSON output (default stdout)");
  build->add_option("--dot", cfg.dot, "Also write a DOT export");
  build->add_option("--edge-list", cfg.edge_list, "Also write a source,target,weight CSV");

  auto* metrics = app.add_subcommand("metrics", "Metric table for every author in a manifest");
  metrics->add_option("--manifest", cfg.manifest, "Cohort manifest")->required();
  metrics->add_option("--out", cfg.out, "Metric table CSV (default stdout)");
  metrics->add_option("--json", cfg.json, "Also write full-precision JSON");
  add_precision(metrics);

  auto* compare = app.add_subcommand(
      "compare", "t-test and Cohen's d per metric, first table minus second");
  compare->add_option("--a", cfg.table_a, "First cohort table (e.g. non-retracted)")->required();
  compare->add_option("--b", cfg.table_b, "Second cohort table (e.g. retracted)")->required();
  compare->add_option("--out", cfg.out, "Comparison CSV (default stdout)");
  compare->add_flag("--pooled", cfg.pooled,
                    "Student pooled-variance df instead of Welch-Satterthwaite");
  add_precision(compare);

  auto* correlate = app.add_subcommand("correlate", "Pearson correlation matrix of metrics");
  correlate->add_option("--a", cfg.table_a, "Metric table")->required();
  correlate->add_option("--b", cfg.table_b, "Second table for a cross-cohort matrix");
  correlate->add_option("--out", cfg.out, "Matrix CSV (default stdout)");
  correlate->add_option("--svg", cfg.svg, "Also write an SVG heatmap");
  add_precision(correlate);

  auto* ccdf_cmd = app.add_subcommand("ccdf", "CCDF of one metric column");
  ccdf_cmd->add_option("--a", cfg.table_a, "Metric table")->required();
  ccdf_cmd->add_option("--metric", cfg.metric, "DC, WD, APL, AS, TR, CC, EC, BC or CL")
      ->required();
  ccdf_cmd->add_option("--out", cfg.out, "CCDF CSV (default stdout)");
  add_precision(ccdf_cmd);

  auto* fetch = app.add_subcommand("fetch-crossref", "Fetch an author's works from CrossRef");
  fetch->add_option("--query", cfg.query, "Author name query")->required();
  fetch->add_option("--rows", cfg.rows, "Maximum records (0-1000)")
      ->check(CLI::Range(0, 1000));
  fetch->add_option("--out", cfg.out, "Publications CSV (default stdout)");
  fetch->add_option("--mailto", cfg.mailto, "Contact address for CrossRef");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (*build) return cmd_build(cfg, out);
    if (*metrics) return cmd_metrics(cfg, out, err);
    if (*compare) return cmd_compare(cfg, out);
    if (*correlate) return cmd_correlate(cfg, out);
    if (*ccdf_cmd) return cmd_ccdf(cfg, out);
    if (*fetch) return cmd_fetch(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace coauth::cli
