// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coauth/cli.hpp"
#include "coauth/ingest.hpp"
#include "coauth/metrics.hpp"
#include "coauth/special.hpp"
#include "coauth/stats.hpp"
#include "reference_oracle.hpp"

namespace {

using namespace coauth;
using Clock = std::chrono::steady_clock;

const std::filesystem::path kFixtures = std::filesystem::path(COAUTH_DATA_DIR) / "fixtures";

struct Published {
  double t, p, d;
};

// Published comparison of the non-retracted cohort against the retracted one.
const std::map<Metric, Published> kPublished = {
    {Metric::DC, {-3.2052, 0.0024, -0.8275}}, {Metric::WD, {2.2108, 0.0322, 0.5708}},
    {Metric::APL, {3.2052, 0.0024, 0.8275}},  {Metric::AS, {3.3185, 0.0016, 0.8568}},
    {Metric::TR, {-0.3035, 0.7627, -0.0783}}, {Metric::CC, {1.502, 0.142, 0.3878}},
    {Metric::EC, {-3.2965, 0.0018, -0.8511}}, {Metric::BC, {-1.9524, 0.0596, -0.5041}},
    {Metric::CL, {-3.0387, 0.004, -0.7845}},
};

// Frozen from the fixtures; the published claim is only its sign.
constexpr double kCrossClusteringCorrelation = 0.6697;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

struct CliComparison {
  std::map<Metric, std::vector<double>> rows;  // t, p, d
  double ms = 0;
  int code = 0;
};

CliComparison run_compare() {
  CliComparison out;
  std::ostringstream os, err;
  const auto start = Clock::now();
  out.code = cli::run({"compare", "--a", (kFixtures / "non_retracted.csv").string(), "--b",
                       (kFixtures / "retracted.csv").string(), "--full-precision"},
                      os, err);
  out.ms = ms_since(start);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string id, t, p, d;
    std::getline(ls, id, ',');
    std::getline(ls, t, ',');
    std::getline(ls, p, ',');
    std::getline(ls, d, ',');
    out.rows[parse_metric(id)] = {std::stod(t), std::stod(p), std::stod(d)};
  }
  return out;
}

void criterion_table4(const CliComparison& c) {
  double worst_t = 0, worst_p = 0;
  bool ok = c.code == 0 && c.rows.size() == 9;
  for (const auto& [m, pub] : kPublished) {
    if (!c.rows.count(m)) continue;
    const auto& r = c.rows.at(m);
    worst_t = std::max(worst_t, std::fabs(r[0] - pub.t));
    worst_p = std::max(worst_p, std::fabs(r[1] - pub.p));
  }
  ok = ok && worst_t <= 0.01 && worst_p <= 0.002 && c.ms < 1000;
  report(1, "t-statistics and p-values of the cohort comparison", ok,
         fmt("max |dt| = %.4f (tol 0.01), max |dp| = %.5f (tol 0.002), %.1f ms", worst_t,
             worst_p, c.ms));
}

void criterion_table5(const CliComparison& c) {
  double worst = 0;
  for (const auto& [m, pub] : kPublished) {
    if (c.rows.count(m)) worst = std::max(worst, std::fabs(c.rows.at(m)[2] - pub.d));
  }
  const bool ok = c.code == 0 && c.rows.size() == 9 && worst <= 0.01 && c.ms < 1000;
  report(2, "Cohen's d of the cohort comparison", ok,
         fmt("max |dd| = %.4f (tol 0.01), %.1f ms", worst, c.ms));
}

void criterion_equal_n(const ComparisonReport& rep) {
  double computed = 0, published = 0;
  for (const auto& r : rep.rows) {
    computed = std::max(computed, std::fabs(std::fabs(r.t_statistic) -
                                            std::fabs(r.cohens_d) * std::sqrt(15.0)));
  }
  for (const auto& [m, pub] : kPublished) {
    published = std::max(published, std::fabs(std::fabs(pub.t) - std::fabs(pub.d) * std::sqrt(15.0)));
  }
  report(3, "equal-n identity |t| = |d| sqrt(15)", computed <= 1e-6 && published <= 0.01,
         fmt("computed max gap %.2e (tol 1e-6), published max gap %.4f (tol 0.01)", computed,
             published));
}

void criterion_mirror(const ComparisonReport& rep) {
  double fixture_gap = 0;
  for (const char* name : {"retracted.csv", "non_retracted.csv"}) {
    for (const auto& r : load_fixture_table(kFixtures / name).rows()) {
      fixture_gap = std::max(fixture_gap, std::fabs(r.row.avg_apl + r.row.avg_dc - 2.0));
    }
  }
  // Computed rows: random ego networks (focal node joined to everyone).
  double computed_gap = 0;
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 80)(rng);
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.9)(rng));
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.push_back({0, v, 1});
    for (NodeId u = 1; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v, 1});
    const auto row = summarize(CoauthorshipGraph::from_edges(n, edges));
    computed_gap = std::max(computed_gap, std::fabs(row.avg_apl + row.avg_dc - 2.0));
  }
  const auto& dc = rep.at(Metric::DC);
  const auto& apl = rep.at(Metric::APL);
  const double t_gap = std::fabs(apl.t_statistic + dc.t_statistic);
  const double d_gap = std::fabs(apl.cohens_d + dc.cohens_d);
  const bool ok = fixture_gap <= 1e-3 && computed_gap <= 1e-12 && t_gap <= 1e-9 && d_gap <= 1e-9;
  report(4, "mirror identity APL = 2 - DC", ok,
         fmt("fixture gap %.1e (tol 1e-3), computed gap %.1e (tol 1e-12), ", fixture_gap,
             computed_gap) +
             fmt("t_APL + t_DC = %.1e, d_APL + d_DC = %.1e (tol 1e-9)", t_gap, d_gap));
}

void criterion_star() {
  const auto g = CoauthorshipGraph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  summarize(g);  // warm-up
  const auto start = Clock::now();
  const auto r = summarize(g);
  const double ms = ms_since(start);
  auto near3 = [](double a, double b) { return std::fabs(a - b) < 5e-4; };
  const bool ok = r.diameter == 2 && near3(r.avg_dc, 0.5) && near3(r.avg_wd, 1.5) &&
                  near3(r.avg_apl, 1.5) && r.assortativity && near3(*r.assortativity, -1) &&
                  near3(r.transitivity, 0) && near3(r.avg_cc, 0) && near3(r.avg_ec, 0.483) &&
                  near3(r.avg_bc, 0.25) && near3(r.avg_cl, 0.7) && ms < 1.0;
  report(5, "star golden row", ok,
         fmt("EC %.4f, BC %.4f, CL %.4f, ", r.avg_ec, r.avg_bc, r.avg_cl) +
             fmt("%.3f ms (limit 1 ms)", ms));
}

void criterion_correlation() {
  const auto ret = load_fixture_table(kFixtures / "retracted.csv");
  const auto non = load_fixture_table(kFixtures / "non_retracted.csv");
  const auto within = correlation_matrix(ret);
  double diag = 0;
  for (std::size_t i = 0; i < 9; ++i) diag = std::max(diag, std::fabs(within.at(i, i) - 1.0));
  const double dc_apl = within.at(Metric::DC, Metric::APL);
  const double cc = correlation_matrix(non, ret).at(Metric::CC, Metric::CC);
  const bool ok = std::fabs(dc_apl + 1.0) < 5e-5 && diag <= 1e-12 && cc > 0 &&
                  std::fabs(cc - kCrossClusteringCorrelation) < 5e-5;
  report(6, "correlation anchors", ok,
         fmt("(DC, APL) = %.4f, diagonal gap %.1e, cross (CC, CC) = %.4f", dc_apl, diag, cc));
}

void criterion_oracle() {
  const auto start = Clock::now();
  double worst = 0, worst_ec = 0;
  int mismatched_rows = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto c = oracle::random_case(seed);
    const auto o = oracle::oracle_all_metrics(c);
    const auto g = c.graph();
    auto gap = [](const std::vector<double>& a, const std::vector<double>& b) {
      double m = a.size() == b.size() ? 0.0 : INFINITY;
      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        m = std::max(m, std::fabs(a[i] - b[i]));
      return m;
    };
    worst = std::max({worst, gap(degree_centrality(g).values, o.dc),
                      gap(weighted_degree(g).values, o.wd), gap(clustering(g).values, o.cc),
                      gap(betweenness_centrality(g).values, o.bc),
                      gap(closeness_centrality(g).values, o.cl)});
    worst_ec = std::max(worst_ec, gap(eigenvector_centrality(g).values, o.ec));
    const auto row = summarize(g);
    const bool as_ok =
        row.assortativity.has_value() == o.row.assortativity.has_value() &&
        (!row.assortativity || std::fabs(*row.assortativity - *o.row.assortativity) <= 1e-9);
    if (row.diameter != o.row.diameter || !as_ok ||
        std::fabs(row.avg_apl - o.row.avg_apl) > 1e-9 ||
        std::fabs(row.transitivity - o.row.transitivity) > 1e-9) {
      ++mismatched_rows;
    }
  }
  const double ms = ms_since(start);
  const bool ok = worst <= 1e-9 && worst_ec <= 1e-6 && mismatched_rows == 0 && ms < 30000;
  report(7, "oracle equivalence on 1000 seeded graphs", ok,
         fmt("max gap %.1e (tol 1e-9), eigenvector %.1e (tol 1e-6), ", worst, worst_ec) +
             fmt("%.0f row mismatches, %.0f ms", mismatched_rows, ms));
}

void criterion_pvalues() {
  double worst = 0;
  for (double df : {4.0, 28.0, 58.0})
    for (double t : {0.5, 1.0, 2.0, 3.2052, 5.0})
      worst = std::max(worst, std::fabs(student_t_two_sided_p(t, df) -
                                        oracle::oracle_t_distribution(t, df)));
  const double crit = student_t_two_sided_p(2.0017, 58);
  report(8, "p-value calibration", worst <= 1e-8 && std::fabs(crit - 0.05) <= 5e-4,
         fmt("grid max gap %.1e (tol 1e-8), p(2.0017, 58) = %.5f", worst, crit));
}

}  // namespace

int main() {
  try {
    const auto cli = run_compare();
    criterion_table4(cli);
    criterion_table5(cli);
    const auto rep = compare_cohorts(load_fixture_table(kFixtures / "non_retracted.csv"),
                                     load_fixture_table(kFixtures / "retracted.csv"));
    criterion_equal_n(rep);
    criterion_mirror(rep);
    criterion_star();
    criterion_correlation();
    criterion_oracle();
    criterion_pvalues();
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf(
      "N/A  [9] per-author tables from raw records: not reproducible, the co-authorship "
      "records are not public; criteria 4-7 and the bundled fixtures stand in\n");
  std::printf("%s: %d failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
