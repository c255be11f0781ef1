#pragma once

// Hot loops behind the metrics. Each kernel has an OpenMP version (the one
// the library uses) and a serial version in `kernels::serial` kept as the
// reference for equivalence tests and the benchmark.

#include <cstdint>
#include <span>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth::kernels {

/// Per-source BFS summary over unweighted hop distances.
struct DistanceSums {
  std::vector<std::int64_t> total;  // sum of distances to reachable nodes
  std::vector<int> eccentricity;    // max distance to a reachable node
  bool connected = true;            // every BFS reached every node
};

DistanceSums distance_sums(const CoauthorshipGraph& g);

/// Unnormalized betweenness: for each v, sum over unordered pairs {s,t} with
/// s != v != t of sigma_st(v) / sigma_st. Requires a connected graph.
std::vector<double> betweenness(const CoauthorshipGraph& g);

/// Number of edges among the neighbors of each node (e_v).
std::vector<std::int64_t> neighbor_links(const CoauthorshipGraph& g);

/// y = (A + shift I) x over the unweighted adjacency matrix.
void shifted_adjacency_multiply(const CoauthorshipGraph& g,
                                std::span<const double> x, std::span<double> y,
                                double shift);

namespace serial {

DistanceSums distance_sums(const CoauthorshipGraph& g);
std::vector<double> betweenness(const CoauthorshipGraph& g);
std::vector<std::int64_t> neighbor_links(const CoauthorshipGraph& g);
void shifted_adjacency_multiply(const CoauthorshipGraph& g,
                                std::span<const double> x, std::span<double> y,
                                double shift);

}  // namespace serial

}  // namespace coauth::kernels
