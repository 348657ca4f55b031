#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "modkit/modularity.hpp"

namespace modkit {

enum class SdpKind { full, cut };

struct SolverOptions {
  /// Constraint residual allowed in the reported matrix.
  double tol_feas = 1e-7;
  /// Stop once the certified duality gap is below tol_obj * max(1, |objective|).
  double tol_obj = 1e-6;
  std::size_t max_iters = 50000;
  /// Initial ADMM penalty; rebalanced from the residual ratio while iterating.
  double penalty = 1.0;
  /// Record one IterateRecord per gap check.
  bool record_trace = false;
};

struct IterateRecord {
  std::size_t iteration;
  double objective;
  double primal_residual;
  double dual_residual;
};

/// A (repaired) relaxation solution. `gram` has unit diagonal and is PSD; for
/// `SdpKind::full` its entries are also nonnegative up to `tol_feas`.
struct SdpSolution {
  SdpKind kind = SdpKind::full;
  Eigen::MatrixXd gram;
  /// Relaxation objective of `gram`.
  double objective = 0.0;
  /// Certified upper bound on the relaxation optimum from the dual iterate.
  double dual_bound = 0.0;
  /// Full: (1/q) sum_{q_ij >= 0} q_ij x_ij. Cut: the adjacency half of the objective.
  double z_plus = 0.0;
  /// Full: (1/q) sum_{q_ij < 0} q_ij x_ij. Cut: the null-model half of the objective.
  double z_minus = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double wallclock = 0.0;
  std::vector<IterateRecord> trace;
};

/// maximize sum q_ij x_ij  s.t.  X PSD, diag(X) = 1, X >= 0.
SdpSolution solve_full_sdp(const QMatrix& qm, const SolverOptions& opts = {});

/// maximize sum q_ij (x_ij + 1) / 2  s.t.  X PSD, diag(X) = 1.
/// Only defined for the undirected and weighted variants; others throw
/// std::invalid_argument.
SdpSolution solve_cut_sdp(const QMatrix& qm, const SolverOptions& opts = {});

/// Unit vectors v_1..v_n (rows) whose Gram matrix reproduces `gram`.
struct VectorEmbedding {
  Eigen::MatrixXd vectors;  ///< n x r

  std::size_t size() const noexcept { return static_cast<std::size_t>(vectors.rows()); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(vectors.cols()); }
};

/// Factor X = V V^T through a symmetric eigendecomposition with negative
/// eigenvalues clamped to zero, dropping null directions and renormalizing rows.
VectorEmbedding gram_vectors(const Eigen::MatrixXd& gram);
VectorEmbedding gram_vectors(const SdpSolution& sol);

}  // namespace modkit
