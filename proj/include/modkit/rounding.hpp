#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "modkit/modularity.hpp"
#include "modkit/sdp.hpp"

namespace modkit {

/// Additive error guaranteed for the single-hyperplane cut rounding.
inline constexpr double kCutAdditiveError = 0.16598;

struct RoundingOutcome {
  Partition partition;
  double score = 0.0;
  int k_used = 0;
  std::uint64_t trial_seed = 0;
};

/// What the relaxation and the analysis guarantee for one rounding run,
/// alongside what the sampled trials actually achieved.
struct GuaranteeReport {
  SdpKind kind = SdpKind::full;
  /// Relaxation objective; bounds OPT (or OPT_cut) from above.
  double upper_bound = 0.0;
  double q_mass = 0.0;
  double z_plus = 0.0;
  double z_minus = 0.0;
  int k_star = 1;
  /// Lower bound on the expected score of a single trial.
  double expectation_floor = 0.0;
  /// upper_bound minus the additive error; never above expectation_floor.
  double additive_certificate = 0.0;
  double best_score = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

struct RoundingResult {
  RoundingOutcome best;
  GuaranteeReport report;
};

/// Smallest minimizer of g_k(z_plus) over k in [1, max(3, ceil(log2 n))].
int select_k_star(double z_plus, std::size_t n);

/// One Hyperplane(k) draw: k standard-normal directions, vertex label =
/// sign pattern of its projections (zero counts as positive).
RoundingOutcome hyperplane_round(const QMatrix& qm, const VectorEmbedding& emb, int k,
                                 std::uint64_t seed);

/// Scores of `trials` independent draws; draw t uses trial_seed(seed, t).
std::vector<double> sample_scores(const QMatrix& qm, const VectorEmbedding& emb, int k,
                                  std::size_t trials, std::uint64_t seed);

/// Hyperplane(k*) repeated `trials` times; returns the best draw (lowest
/// trial index on ties) with the guarantee report.
RoundingResult round_full(const QMatrix& qm, const SdpSolution& sol, std::size_t trials,
                          std::uint64_t seed);

/// Single-hyperplane bipartition rounding of a cut relaxation solution.
RoundingResult round_cut(const QMatrix& qm, const SdpSolution& sol, std::size_t trials,
                         std::uint64_t seed);

/// Per-trial expectation floors, exposed for tests and the Python module.
double full_expectation_floor(double q_mass, double z_plus, double z_minus, int k);
double cut_expectation_floor(double z_plus, double z_minus);

}  // namespace modkit
