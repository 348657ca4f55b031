#include "modkit/sdp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace modkit {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Residual balancing and gap checks run on this cadence.
constexpr std::size_t kCheckEvery = 10;
constexpr double kBalanceRatio = 10.0;
constexpr double kBalanceFactor = 2.0;

MatrixXd project_psd(const MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
  const VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clamped.asDiagonal() * es.eigenvectors().transpose();
}

double min_eigenvalue(const MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Entry-wise projection onto {diag = 1} (and {offdiag >= 0} when nonneg).
void project_affine_box(MatrixXd& z, bool nonneg) {
  if (nonneg) z = z.cwiseMax(0.0);
  z.diagonal().setOnes();
}

void unit_diagonal_congruence(MatrixXd& x) {
  const Index n = x.rows();
  VectorXd scale(n);
  for (Index i = 0; i < n; ++i) {
    const double d = x(i, i);
    scale(i) = d > 1e-12 ? 1.0 / std::sqrt(d) : 0.0;
  }
  x = scale.asDiagonal() * x * scale.asDiagonal();
  for (Index i = 0; i < n; ++i) {
    if (scale(i) == 0.0) {
      x.row(i).setZero();
      x.col(i).setZero();
    }
    x(i, i) = 1.0;
  }
}

// Rescale the diagonal to 1, clamp negatives (full problem only), project
// onto the PSD cone once, then restore the unit diagonal by a congruence.
MatrixXd repair(const MatrixXd& x, bool nonneg) {
  MatrixXd r = 0.5 * (x + x.transpose());
  unit_diagonal_congruence(r);
  if (nonneg) r = r.cwiseMax(0.0);
  r = project_psd(r);
  unit_diagonal_congruence(r);
  return 0.5 * (r + r.transpose());
}

// Weak-duality bound for max <c, X> over the feasible set, from an
// approximate multiplier `lambda` of the consensus constraint X = Z.
double dual_bound(const MatrixXd& c, const MatrixXd& lambda, bool nonneg) {
  const Index n = c.rows();
  MatrixXd s = -c;
  double bound = 0.0;
  for (Index i = 0; i < n; ++i) {
    s(i, i) += lambda(i, i);
    bound += lambda(i, i);
  }
  if (nonneg) {
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i)
        if (i != j) s(i, j) -= std::max(0.0, -lambda(i, j));
  }
  const double shift = std::max(0.0, -min_eigenvalue(0.5 * (s + s.transpose())));
  return bound + static_cast<double>(n) * shift;
}

struct Problem {
  MatrixXd c;           // maximize <c, X> + offset
  double offset = 0.0;
  bool nonneg = false;
};

struct Core {
  MatrixXd x;
  double objective = 0.0;
  double bound = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  std::vector<IterateRecord> trace;
};

// Two-block ADMM on  min -<c,X> + I_psd(X) + I_box(Z)  s.t.  X = Z.
Core admm(const Problem& prob, const SolverOptions& opts) {
  if (!(opts.tol_feas > 0.0) || !(opts.tol_obj > 0.0) || opts.max_iters == 0 ||
      !(opts.penalty > 0.0))
    throw std::invalid_argument("solver options must all be positive");

  const Index n = prob.c.rows();
  const double c_norm = prob.c.norm();
  const double scale = c_norm > 0.0 ? c_norm : 1.0;
  const MatrixXd c = prob.c / scale;

  MatrixXd z = MatrixXd::Identity(n, n);
  MatrixXd u = MatrixXd::Zero(n, n);
  MatrixXd x = z;
  double rho = opts.penalty;

  Core best;
  double best_gap = std::numeric_limits<double>::infinity();

  for (std::size_t it = 1; it <= opts.max_iters; ++it) {
    x = project_psd(z - u + c / rho);
    const MatrixXd z_prev = z;
    z = x + u;
    project_affine_box(z, prob.nonneg);
    u += x - z;

    if (it % kCheckEvery != 0 && it != opts.max_iters) continue;

    const double r = (x - z).norm();
    const double s = rho * (z - z_prev).norm();

    const MatrixXd candidate = repair(x, prob.nonneg);
    const double objective = scale * c.cwiseProduct(candidate).sum() + prob.offset;
    const double bound = scale * dual_bound(c, rho * u, prob.nonneg) + prob.offset;
    const double gap = bound - objective;

    if (opts.record_trace) best.trace.push_back({it, objective, r, s});
    if (gap < best_gap) {
      best_gap = gap;
      best.x = candidate;
      best.objective = objective;
      best.bound = bound;
      best.primal_residual = r;
      best.dual_residual = s;
    }
    best.iterations = it;
    if (gap <= opts.tol_obj * std::max(1.0, std::abs(objective)) && r <= opts.tol_feas) {
      best.converged = true;
      break;
    }

    if (r > kBalanceRatio * s) {
      rho *= kBalanceFactor;
      u /= kBalanceFactor;
    } else if (s > kBalanceRatio * r) {
      rho /= kBalanceFactor;
      u *= kBalanceFactor;
    }
  }
  return best;
}

SdpSolution finish(SdpKind kind, Core core, double seconds) {
  SdpSolution sol;
  sol.kind = kind;
  sol.gram = std::move(core.x);
  sol.objective = core.objective;
  sol.dual_bound = core.bound;
  sol.converged = core.converged;
  sol.iterations = core.iterations;
  sol.primal_residual = core.primal_residual;
  sol.dual_residual = core.dual_residual;
  sol.trace = std::move(core.trace);
  sol.wallclock = seconds;
  return sol;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SdpSolution solve_full_sdp(const QMatrix& qm, const SolverOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Problem prob{qm.entries, 0.0, true};
  SdpSolution sol = finish(SdpKind::full, admm(prob, opts), 0.0);

  double pos = 0.0, neg = 0.0;
  for (Index j = 0; j < qm.entries.cols(); ++j) {
    for (Index i = 0; i < qm.entries.rows(); ++i) {
      const double term = qm.entries(i, j) * sol.gram(i, j);
      (qm.entries(i, j) >= 0.0 ? pos : neg) += term;
    }
  }
  // |x_ij| <= 1 on the feasible set; clamp rounding noise at the ends.
  sol.z_plus = std::clamp(pos / qm.q_mass, 0.0, 1.0);
  sol.z_minus = std::clamp(neg / qm.q_mass, -1.0, 0.0);
  sol.wallclock = seconds_since(t0);
  return sol;
}

SdpSolution solve_cut_sdp(const QMatrix& qm, const SolverOptions& opts) {
  if (qm.variant != Variant::undirected && qm.variant != Variant::weighted)
    throw std::invalid_argument("the cut relaxation is only defined for undirected graphs");
  if (qm.null_factor.size() != qm.n())
    throw std::invalid_argument("coefficient matrix is missing its null-model factor");

  const auto t0 = std::chrono::steady_clock::now();
  Problem prob{0.5 * qm.entries, 0.5 * qm.entries.sum(), false};
  SdpSolution sol = finish(SdpKind::cut, admm(prob, opts), 0.0);

  // z+ = (1/4m) sum A_ij (x_ij + 1), z- = -(1/8m^2) sum d_i d_j (x_ij + 1)
  const Eigen::Map<const VectorXd> u(qm.null_factor.data(), static_cast<Index>(qm.n()));
  const MatrixXd null_term = u * u.transpose();
  const MatrixXd shifted = sol.gram.array() + 1.0;
  sol.z_plus = std::clamp(0.5 * (qm.entries + null_term).cwiseProduct(shifted).sum(), 0.0, 1.0);
  sol.z_minus = std::clamp(-0.5 * null_term.cwiseProduct(shifted).sum(), -1.0, 0.0);
  sol.wallclock = seconds_since(t0);
  return sol;
}

VectorEmbedding gram_vectors(const MatrixXd& gram) {
  const Index n = gram.rows();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (gram + gram.transpose()));
  const VectorXd& vals = es.eigenvalues();
  const double cutoff = 1e-14 * std::max(1.0, vals.cwiseAbs().maxCoeff());

  std::vector<Index> keep;
  for (Index k = n - 1; k >= 0; --k)
    if (vals(k) > cutoff) keep.push_back(k);

  VectorEmbedding emb;
  if (keep.empty()) {
    emb.vectors = MatrixXd::Zero(n, 1);
    emb.vectors.col(0).setOnes();
    return emb;
  }
  emb.vectors.resize(n, static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    emb.vectors.col(static_cast<Index>(c)) =
        es.eigenvectors().col(keep[c]) * std::sqrt(vals(keep[c]));
  for (Index i = 0; i < n; ++i) {
    const double norm = emb.vectors.row(i).norm();
    if (norm > 0.0) {
      emb.vectors.row(i) /= norm;
    } else {
      emb.vectors.row(i).setZero();
      emb.vectors(i, 0) = 1.0;
    }
  }
  return emb;
}

VectorEmbedding gram_vectors(const SdpSolution& sol) { return gram_vectors(sol.gram); }

}  // namespace modkit
