#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toulmin/depgraph.hpp"

namespace toulmin::testing {

/// A directed graph on nodes 0..n-1 without self-loops; bit j of adj[i] is
/// the edge i -> j.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;
};

/// Enumerates every simple path from each start node through larger-numbered
/// nodes and records the ones that close back to the start.
std::vector<std::vector<Id>> brute_force_cycles(const SmallGraph& g);

/// Node i is named "n<i>", so for n <= 10 name order is index order.
DependencyGraph to_dependency_graph(const SmallGraph& g);

/// Edge set number `code` among all n(n-1)-bit codes.
SmallGraph graph_from_code(int n, std::uint64_t code);
SmallGraph random_graph(int n, double density, std::mt19937& rng);

/// Compares find_cycles with the brute force on every graph with up to
/// `max_nodes` nodes. Returns the number of graphs checked, or -1 with
/// `failure` describing the first disagreement.
long long exhaustive_cycle_check(int max_nodes, std::string& failure);
bool random_cycle_check(int nodes, int count, unsigned seed, std::string& failure);

}  // namespace toulmin::testing
