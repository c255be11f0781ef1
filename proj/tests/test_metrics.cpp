#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "coauth/kernels.hpp"
#include "coauth/metrics.hpp"
#include "reference_oracle.hpp"
#include "test_util.hpp"

namespace coauth {
namespace {

using test::complete;
using test::path;
using test::paw;
using test::star;

constexpr double kTight = 1e-12;

void expect_values(const NodeVector& v, std::vector<double> expected, double tol = kTight) {
  ASSERT_EQ(v.values.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(v.values[i], expected[i], tol) << "node " << i;
  }
}

TEST(MetricIds, ParseAndAliases) {
  EXPECT_EQ(parse_metric("dc"), Metric::DC);
  EXPECT_EQ(parse_metric("CoC"), Metric::CL);
  EXPECT_EQ(parse_metric("PL"), Metric::APL);
  for (Metric m : kAllMetrics) EXPECT_EQ(parse_metric(metric_id(m)), m);
  try {
    parse_metric("XYZ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownMetric);
    EXPECT_NE(std::string(e.what()).find("DC, WD, APL, AS, TR, CC, EC, BC, CL"),
              std::string::npos);
  }
}

TEST(DegreeCentrality, Examples) {
  auto s = degree_centrality(star(3));
  expect_values(s, {1.0, 1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_NEAR(s.average(), 0.5, kTight);
  EXPECT_NEAR(degree_centrality(complete(4)).average(), 1.0, kTight);
  auto p = degree_centrality(path(3));
  expect_values(p, {0.5, 1.0, 0.5});
  EXPECT_NEAR(p.average(), 2.0 / 3, kTight);
  EXPECT_ERROR_CODE(degree_centrality(CoauthorshipGraph::from_edges(1, {})),
                    ErrorCode::TooSmall);
}

TEST(WeightedDegree, Examples) {
  auto s = weighted_degree(star(3));
  expect_values(s, {3, 1, 1, 1});
  EXPECT_NEAR(s.average(), 1.5, kTight);
  auto single = weighted_degree(CoauthorshipGraph::from_edges(1, {}));
  expect_values(single, {0});
  EXPECT_EQ(single.average(), 0.0);
  auto tri = weighted_degree(CoauthorshipGraph::from_edges(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 5}}));
  expect_values(tri, {7, 5, 8});
  EXPECT_NEAR(tri.average(), 20.0 / 3, kTight);
}

TEST(AveragePathLength, Examples) {
  EXPECT_NEAR(average_path_length(star(3)), 1.5, kTight);
  EXPECT_NEAR(average_path_length(complete(5)), 1.0, kTight);
  EXPECT_NEAR(average_path_length(path(4)), 20.0 / 12, kTight);
  EXPECT_ERROR_CODE(average_path_length(CoauthorshipGraph::from_edges(3, {{0, 1, 1}})),
                    ErrorCode::NotConnected);
}

TEST(Assortativity, Examples) {
  for (std::size_t m = 2; m <= 8; ++m) {
    auto r = degree_assortativity(star(m));
    ASSERT_TRUE(r);
    EXPECT_NEAR(*r, -1.0, kTight);
  }
  EXPECT_FALSE(degree_assortativity(complete(4)));
  auto p = degree_assortativity(path(4));
  ASSERT_TRUE(p);
  EXPECT_NEAR(*p, -0.5, kTight);
  EXPECT_ERROR_CODE(degree_assortativity(CoauthorshipGraph::from_edges(3, {})),
                    ErrorCode::NoEdges);
}

TEST(Transitivity, Examples) {
  EXPECT_EQ(transitivity(star(5)), 0.0);
  EXPECT_NEAR(transitivity(complete(3)), 1.0, kTight);
  EXPECT_NEAR(transitivity(paw()), 0.6, kTight);
  EXPECT_EQ(transitivity(path(2)), 0.0);
}

TEST(Clustering, Examples) {
  auto s = clustering(star(3));
  expect_values(s, {0, 0, 0, 0});
  EXPECT_NEAR(clustering(complete(3)).average(), 1.0, kTight);
  auto p = clustering(paw());
  expect_values(p, {1, 1, 1.0 / 3, 0});
  EXPECT_NEAR(p.average(), 7.0 / 12, kTight);
}

TEST(EigenvectorCentrality, Examples) {
  auto s = eigenvector_centrality(star(3));
  expect_values(s, {1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 1 / std::sqrt(6.0),
                    1 / std::sqrt(6.0)}, 1e-9);
  EXPECT_NEAR(s.average(), 0.48296291314453405, 1e-9);
  for (std::size_t n = 2; n <= 6; ++n) {
    auto k = eigenvector_centrality(complete(n));
    for (double x : k.values) EXPECT_NEAR(x, 1 / std::sqrt(double(n)), 1e-9);
  }
  auto p = eigenvector_centrality(path(3));
  expect_values(p, {0.5, 1 / std::sqrt(2.0), 0.5}, 1e-9);
  EXPECT_NEAR(p.average(), 0.569035593728849, 1e-9);
}

TEST(EigenvectorCentrality, IterationCapReported) {
  PowerIterationOptions opts;
  opts.max_iterations = 1;
  EXPECT_ERROR_CODE(eigenvector_centrality(path(6), opts), ErrorCode::NoConvergence);
}

TEST(BetweennessCentrality, Examples) {
  auto s = betweenness_centrality(star(3));
  expect_values(s, {1, 0, 0, 0});
  EXPECT_NEAR(s.average(), 0.25, kTight);
  expect_values(betweenness_centrality(complete(5)), {0, 0, 0, 0, 0});
  auto p = betweenness_centrality(path(4));
  expect_values(p, {0, 2.0 / 3, 2.0 / 3, 0});
  EXPECT_NEAR(p.average(), 1.0 / 3, kTight);
  EXPECT_ERROR_CODE(betweenness_centrality(path(2)), ErrorCode::TooSmall);
}

TEST(ClosenessCentrality, Examples) {
  auto s = closeness_centrality(star(3));
  expect_values(s, {1, 0.6, 0.6, 0.6});
  EXPECT_NEAR(s.average(), 0.7, kTight);
  expect_values(closeness_centrality(complete(4)), {1, 1, 1, 1});
  auto p = closeness_centrality(path(4));
  expect_values(p, {0.5, 0.75, 0.75, 0.5});
  EXPECT_NEAR(p.average(), 0.625, kTight);
}

TEST(Summarize, StarRow) {
  auto r = summarize(star(3));
  EXPECT_EQ(r.diameter, 2);
  EXPECT_NEAR(r.avg_dc, 0.5, kTight);
  EXPECT_NEAR(r.avg_wd, 1.5, kTight);
  EXPECT_NEAR(r.avg_apl, 1.5, kTight);
  ASSERT_TRUE(r.assortativity);
  EXPECT_NEAR(*r.assortativity, -1.0, kTight);
  EXPECT_EQ(r.transitivity, 0.0);
  EXPECT_EQ(r.avg_cc, 0.0);
  EXPECT_NEAR(r.avg_ec, 0.483, 5e-4);
  EXPECT_NEAR(r.avg_bc, 0.25, kTight);
  EXPECT_NEAR(r.avg_cl, 0.7, kTight);
}

TEST(Summarize, CompleteAndPaw) {
  auto k = CoauthorshipGraph::from_edges(
      4, {{0, 1, 2}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 3}, {2, 3, 1}});
  auto r = summarize(k);
  EXPECT_EQ(r.diameter, 1);
  EXPECT_NEAR(r.avg_dc, 1.0, kTight);
  EXPECT_NEAR(r.avg_wd, 2.0 * 9 / 4, kTight);
  EXPECT_NEAR(r.avg_apl, 1.0, kTight);
  EXPECT_FALSE(r.assortativity);
  EXPECT_FALSE(r.value(Metric::AS));
  EXPECT_NEAR(r.transitivity, 1.0, kTight);
  EXPECT_NEAR(r.avg_cc, 1.0, kTight);
  EXPECT_NEAR(r.avg_ec, 0.5, 1e-9);
  EXPECT_NEAR(r.avg_bc, 0.0, kTight);
  EXPECT_NEAR(r.avg_cl, 1.0, kTight);

  auto p = summarize(paw());
  EXPECT_NEAR(p.transitivity, 0.6, kTight);
  EXPECT_NEAR(p.avg_cc, 7.0 / 12, kTight);
  EXPECT_NEAR(*p.value(Metric::CC), 7.0 / 12, kTight);
}

TEST(Summarize, Errors) {
  EXPECT_ERROR_CODE(summarize(path(2)), ErrorCode::TooSmall);
  EXPECT_ERROR_CODE(summarize(CoauthorshipGraph::from_edges(4, {{0, 1, 1}, {2, 3, 1}})),
                    ErrorCode::NotConnected);
}

TEST(Summarize, BatchKeepsOrderAndRethrows) {
  std::vector<CoauthorshipGraph> graphs;
  for (std::uint64_t s = 0; s < 40; ++s) graphs.push_back(oracle::random_case(s).graph());
  auto rows = summarize_all(graphs);
  ASSERT_EQ(rows.size(), graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_EQ(rows[i].avg_cl, summarize(graphs[i]).avg_cl);
  }
  graphs.push_back(path(2));
  EXPECT_ERROR_CODE(summarize_all(graphs), ErrorCode::TooSmall);
}

// Random ego network: focal node 0 joined to everyone, other pairs random.
CoauthorshipGraph random_ego(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.4);
  std::uniform_int_distribution<Weight> w(1, 6);
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v, w(rng)});
  for (NodeId u = 1; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, w(rng)});
  return CoauthorshipGraph::from_edges(n, edges);
}

TEST(Properties, MirrorIdentityOnEgoNetworks) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 60)(rng);
    const auto r = summarize(random_ego(rng, n));
    EXPECT_LE(r.diameter, 2);
    EXPECT_NEAR(r.avg_apl + r.avg_dc, 2.0, kTight);
  }
}

TEST(Properties, Ranges) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = oracle::random_case(seed).graph();
    for (const auto& v : {degree_centrality(g), clustering(g), eigenvector_centrality(g),
                          betweenness_centrality(g), closeness_centrality(g)}) {
      for (double x : v.values) {
        EXPECT_GE(x, -kTight);
        EXPECT_LE(x, 1.0 + kTight);
      }
    }
    const double t = transitivity(g);
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, 1.0);
    if (auto a = degree_assortativity(g)) {
      EXPECT_GE(*a, -1.0 - kTight);
      EXPECT_LE(*a, 1.0 + kTight);
    }
  }
}

TEST(Properties, EigenvectorNormAndResidual) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 80)(rng);
    const auto g = random_ego(rng, n);
    const auto x = eigenvector_centrality(g).values;
    double norm = 0;
    for (double v : x) {
      EXPECT_GE(v, 0.0);
      norm += v * v;
    }
    EXPECT_NEAR(std::sqrt(norm), 1.0, kTight);
    std::vector<double> ax(n);
    kernels::serial::shifted_adjacency_multiply(g, x, ax, 0.0);
    const double lambda = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    double residual = 0;
    for (std::size_t i = 0; i < n; ++i) residual += std::pow(ax[i] - lambda * x[i], 2);
    EXPECT_LT(std::sqrt(residual), 1e-8);
  }
}

TEST(Properties, IsomorphismInvariance) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = oracle::random_case(seed);
    std::vector<NodeId> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& e : c.edges) edges.push_back({perm[e.source], perm[e.target], e.weight});
    const auto g = c.graph();
    const auto h = CoauthorshipGraph::from_edges(c.n, edges);

    const auto bg = betweenness_centrality(g), bh = betweenness_centrality(h);
    const auto eg = eigenvector_centrality(g), eh = eigenvector_centrality(h);
    const auto wg = weighted_degree(g), wh = weighted_degree(h);
    for (std::size_t v = 0; v < c.n; ++v) {
      EXPECT_NEAR(bg.values[v], bh.values[perm[v]], 1e-12);
      EXPECT_NEAR(eg.values[v], eh.values[perm[v]], 1e-9);
      EXPECT_EQ(wg.values[v], wh.values[perm[v]]);
    }
    const auto rg = summarize(g), rh = summarize(h);
    for (Metric m : kAllMetrics) {
      const auto a = rg.value(m), b = rh.value(m);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (a) {
        EXPECT_NEAR(*a, *b, 1e-9) << metric_id(m);
      }
    }
    EXPECT_EQ(rg.diameter, rh.diameter);
  }
}

TEST(Properties, WeightScalingOnlyMovesWeightedDegree) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = oracle::random_case(seed);
    auto scaled = c.edges;
    for (auto& e : scaled) e.weight *= 7;
    const auto a = summarize(c.graph());
    const auto b = summarize(CoauthorshipGraph::from_edges(c.n, scaled));
    EXPECT_NEAR(b.avg_wd, 7 * a.avg_wd, 1e-9);
    for (Metric m : kAllMetrics) {
      if (m == Metric::WD) continue;
      EXPECT_EQ(a.value(m), b.value(m)) << metric_id(m);
    }
    EXPECT_EQ(a.diameter, b.diameter);
  }
}

}  // namespace
}  // namespace coauth
