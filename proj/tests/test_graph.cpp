#include <doctest.h>

#include <numeric>
#include <random>

#include "modkit/graph.hpp"
#include "support/fixtures.hpp"

using namespace modkit;
using modkit::testing::random_bipartite;
using modkit::testing::random_directed;
using modkit::testing::random_graph;
using modkit::testing::random_weighted;

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("parse a plain edge list") {
  const Graph g = parse_edge_list("# a comment\n0 1\n1 2\n\n0 2\n", Variant::undirected);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.total_weight() == 3.0);
  const Degrees d = degrees(g);
  CHECK(d.out == std::vector<double>{2, 2, 2});
  CHECK(d.in == d.out);
}

TEST_CASE("n header adds isolated vertices") {
  const Graph g = parse_edge_list("# n: 5\n0 1\n", Variant::undirected);
  CHECK(g.num_vertices() == 5);
  CHECK(degrees(g).out[4] == 0.0);
}

TEST_CASE("weighted strengths") {
  const Graph g = parse_edge_list("0 1 2.5\n1 2 0.5\n", Variant::weighted);
  CHECK(g.total_weight() == doctest::Approx(3.0));
  CHECK(degrees(g).out == std::vector<double>{2.5, 3.0, 0.5});
}

TEST_CASE("directed in and out degrees") {
  const Graph g = parse_edge_list("0 1\n1 0\n1 2\n", Variant::directed);
  const Degrees d = degrees(g);
  CHECK(d.out == std::vector<double>{1, 2, 0});
  CHECK(d.in == std::vector<double>{1, 1, 1});
}

TEST_CASE("bipartite header assigns sides") {
  const Graph g = parse_edge_list("# bipartite-left: 0 1\n0 2\n1 3\n0 3\n", Variant::bipartite);
  REQUIRE(g.sides().size() == 4);
  CHECK(g.sides()[0] == Side::left);
  CHECK(g.sides()[3] == Side::right);
}

TEST_CASE("validation errors carry line numbers") {
  auto line_of = [](std::string_view text, Variant v) -> std::size_t {
    try {
      parse_edge_list(text, v);
    } catch (const ValidationError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0 1\n1 1\n", Variant::undirected) == 2);
  CHECK(line_of("0 1\n1 0\n", Variant::undirected) == 2);
  CHECK(line_of("0 1\nx y\n", Variant::undirected) == 2);
  CHECK(line_of("0 1 -2\n", Variant::weighted) == 1);
  CHECK(line_of("0 1 2\n", Variant::undirected) == 1);
  CHECK(line_of("# n: 2\n0 5\n", Variant::undirected) == 2);
}

TEST_CASE("structural rejections") {
  CHECK_THROWS_AS(parse_edge_list("", Variant::undirected), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("# only a comment\n", Variant::undirected), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n", Variant::bipartite), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("# bipartite-left: 0 1\n0 1\n", Variant::bipartite),
                  ValidationError);
  CHECK_THROWS_AS(parse_edge_list("0 1 nan\n", Variant::weighted), ValidationError);
  CHECK_THROWS_AS(Graph::create(0, {}, Variant::undirected), ValidationError);
  CHECK_THROWS_AS(Graph::create(2, {{0, 1, 1}}, Variant::undirected, {Side::left, Side::right}),
                  ValidationError);
  CHECK_NOTHROW(parse_edge_list("0 1\n1 0\n", Variant::directed));
  CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n", Variant::directed), ValidationError);
}

TEST_CASE("variant names") {
  for (Variant v : {Variant::undirected, Variant::weighted, Variant::directed, Variant::bipartite})
    CHECK(parse_variant(to_string(v)) == v);
  CHECK_THROWS_AS(parse_variant("hypergraph"), ValidationError);
}

TEST_CASE("missing file is a validation error") {
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt", Variant::undirected),
                  ValidationError);
}

TEST_CASE("property: degree sums and render/parse round trip") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const double p = density(rng);
    std::vector<Graph> graphs{random_graph(n, p, rng), random_weighted(n, p, rng),
                              random_directed(n, p, rng), random_bipartite(n / 2 + 1, n / 2 + 1, p, rng)};
    for (const Graph& g : graphs) {
      CAPTURE(trial);
      CAPTURE(to_string(g.variant()));
      const Degrees d = degrees(g);
      if (g.variant() == Variant::directed) {
        CHECK(sum(d.out) == doctest::Approx(g.total_weight()));
        CHECK(sum(d.in) == doctest::Approx(g.total_weight()));
      } else {
        CHECK(sum(d.out) == doctest::Approx(2.0 * g.total_weight()));
      }
      const Graph back = parse_edge_list(render_edge_list(g), g.variant());
      CHECK(back == g);
    }
  }
}
