#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "modkit/graph.hpp"
#include "modkit/modularity.hpp"

namespace modkit::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline Graph undirected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, 1.0});
  return Graph::create(n, std::move(edges), Variant::undirected);
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return undirected(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return undirected(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return undirected(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return undirected(leaves + 1, e);
}

// Two triangles joined by the bridge 2-3.
inline Graph two_triangles() {
  return undirected(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

inline Graph petersen() {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return undirected(10, e);
}

inline std::vector<NamedGraph> named_fixtures() {
  return {{"K2", complete(2)},   {"P3", path(3)},    {"P4", path(4)},
          {"C4", cycle(4)},      {"K4", complete(4)}, {"star3", star(3)},
          {"tri2", two_triangles()}};
}

// Erdos-Renyi G(n, p) with at least one edge.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  while (edges.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) edges.push_back({i, j, 1.0});
  }
  return Graph::create(n, std::move(edges), Variant::undirected);
}

inline Graph random_weighted(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> w(0.1, 3.0);
  std::vector<Edge> edges;
  while (edges.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) edges.push_back({i, j, w(rng)});
  }
  return Graph::create(n, std::move(edges), Variant::weighted);
}

inline Graph random_directed(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  while (edges.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && coin(rng)) edges.push_back({i, j, 1.0});
  }
  return Graph::create(n, std::move(edges), Variant::directed);
}

inline Graph random_bipartite(std::size_t left, std::size_t right, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Side> sides(left + right, Side::right);
  for (std::size_t i = 0; i < left; ++i) sides[i] = Side::left;
  std::vector<Edge> edges;
  while (edges.empty()) {
    for (std::size_t i = 0; i < left; ++i)
      for (std::size_t j = left; j < left + right; ++j)
        if (coin(rng)) edges.push_back({i, j, 1.0});
  }
  return Graph::create(left + right, std::move(edges), Variant::bipartite, std::move(sides));
}

inline Partition random_partition(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> labels(n);
  for (auto& l : labels) l = pick(rng);
  return Partition(labels);
}

// Random graphs for the sandwich and certificate suites, n in [lo, hi].
inline std::vector<NamedGraph> random_corpus(std::size_t count, std::size_t lo, std::size_t hi,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  std::vector<NamedGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = size(rng);
    out.push_back({"random" + std::to_string(i) + "_n" + std::to_string(n),
                   random_graph(n, density(rng), rng)});
  }
  return out;
}

// Sum over clusters of (m_C / m - (D_C / 2m)^2), straight from the edge list.
inline double definitional_modularity(const Graph& g, const Partition& p) {
  const double m = g.total_weight();
  std::vector<double> inside(p.num_clusters(), 0.0);
  std::vector<double> degree(p.num_clusters(), 0.0);
  for (const Edge& e : g.edges()) {
    if (p[e.from] == p[e.to]) inside[p[e.from]] += e.weight;
    degree[p[e.from]] += e.weight;
    degree[p[e.to]] += e.weight;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < inside.size(); ++c) {
    const double share = degree[c] / (2.0 * m);
    q += inside[c] / m - share * share;
  }
  return q;
}

// Directed analogue: sum over clusters of (m_C / m - Dout_C Din_C / m^2).
inline double definitional_directed(const Graph& g, const Partition& p) {
  const double m = g.total_weight();
  std::vector<double> inside(p.num_clusters(), 0.0), out(p.num_clusters(), 0.0),
      in(p.num_clusters(), 0.0);
  for (const Edge& e : g.edges()) {
    if (p[e.from] == p[e.to]) inside[p[e.from]] += 1.0;
    out[p[e.from]] += 1.0;
    in[p[e.to]] += 1.0;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < inside.size(); ++c) q += inside[c] / m - out[c] * in[c] / (m * m);
  return q;
}

}  // namespace modkit::testing
