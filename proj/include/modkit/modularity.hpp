#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "modkit/graph.hpp"

namespace modkit {

/// Dense symmetric coefficient matrix of a modularity objective:
/// Q(C) = sum over same-cluster pairs (i, j) of q_ij.
///
/// Directed and bipartite coefficients are symmetrized, (q_ij + q_ji) / 2,
/// which leaves every partition's score unchanged.
struct QMatrix {
  Eigen::MatrixXd entries;
  /// Sum of the nonnegative entries; equals minus the sum of the negative ones.
  double q_mass = 0.0;
  Variant variant = Variant::undirected;
  /// Edge count m, or total weight W for the weighted variant.
  double scale = 0.0;
  /// Null-model factor u with null term u_i u_j (u_i = d_i / 2m, or
  /// s_i / 2W). Only filled for the undirected and weighted variants; the
  /// cut relaxation needs it to split its objective.
  std::vector<double> null_factor;

  std::size_t n() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// Cluster assignment with ids compacted to 0..k-1 in order of first
/// appearance, so every cluster is nonempty.
class Partition {
public:
  Partition() = default;
  /// Accepts arbitrary labels and relabels them.
  explicit Partition(std::span<const std::size_t> labels);

  static Partition single_cluster(std::size_t n);

  std::size_t size() const noexcept { return assign_.size(); }
  std::size_t num_clusters() const noexcept { return k_; }
  const std::vector<std::size_t>& assign() const noexcept { return assign_; }
  std::size_t operator[](std::size_t v) const { return assign_[v]; }

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<std::size_t> assign_;
  std::size_t k_ = 0;
};

QMatrix build_q(const Graph& g);

/// Q(C). Throws std::invalid_argument when the partition size differs from n.
double modularity(const QMatrix& qm, const Partition& p);

struct QSplit {
  std::vector<std::pair<std::size_t, std::size_t>> positive;  ///< q_ij >= 0
  std::vector<std::pair<std::size_t, std::size_t>> negative;  ///< q_ij < 0
  double positive_mass = 0.0;
  double negative_mass = 0.0;
};

QSplit q_split(const QMatrix& qm);

}  // namespace modkit
