#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modkit {

/// Which modularity function a graph is scored with.
enum class Variant { undirected, weighted, directed, bipartite };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

/// Input rejected by a parser or validator. `line` is 1-based, 0 when the
/// problem is not tied to one line.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Side : unsigned char { left, right };

/// Simple graph with one of the four modularity variants attached.
///
/// Instances are only produced through `Graph::create` (or the parser), so a
/// live `Graph` always satisfies: m >= 1, no self-loops, no duplicate pairs
/// (unordered for every variant but `directed`), positive weights, unit
/// weights for the unweighted variants, and every bipartite edge crossing
/// sides.
class Graph {
public:
  static Graph create(std::size_t n, std::vector<Edge> edges, Variant variant,
                      std::vector<Side> sides = {});

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Variant variant() const noexcept { return variant_; }
  /// Empty unless `variant() == Variant::bipartite`.
  const std::vector<Side>& sides() const noexcept { return sides_; }
  /// Sum of edge weights (equals m for unweighted variants).
  double total_weight() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  Graph() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  Variant variant_ = Variant::undirected;
  std::vector<Side> sides_;
};

/// Per-vertex degrees. For the symmetric variants `out` and `in` hold the
/// same values (edge count, or incident weight sum for `weighted`).
struct Degrees {
  std::vector<double> out;
  std::vector<double> in;
};

Degrees degrees(const Graph& g);

/// Parses the whitespace-separated edge-list format:
///
///     # n: 6
///     # bipartite-left: 0 1 2
///     0 3
///     1 4 2.5
///
/// Lines starting with '#' are comments unless they carry one of the two
/// headers above; blank lines are ignored. Without `# n:` the vertex count is
/// one more than the largest index seen. Bipartite input requires the
/// `bipartite-left` header; every vertex not listed there is on the right.
Graph parse_edge_list(std::string_view text, Variant variant);

/// Inverse of `parse_edge_list`; always writes the `# n:` header.
std::string render_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path, Variant variant);

}  // namespace modkit
