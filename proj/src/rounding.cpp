#include "modkit/rounding.hpp"

#include <algorithm>
#include <stdexcept>

#include "modkit/bounds.hpp"
#include "modkit/parallel.hpp"
#include "modkit/random.hpp"

namespace modkit {

namespace {

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

void check_inputs(const QMatrix& qm, const SdpSolution& sol, SdpKind kind, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("rounding needs at least one trial");
  if (sol.kind != kind)
    throw std::invalid_argument(kind == SdpKind::full
                                    ? "round_full needs a full relaxation solution"
                                    : "round_cut needs a cut relaxation solution");
  if (static_cast<std::size_t>(sol.gram.rows()) != qm.n())
    throw std::invalid_argument("relaxation solution and coefficient matrix differ in size");
}

RoundingOutcome best_of(const QMatrix& qm, const VectorEmbedding& emb, int k, std::size_t trials,
                        std::uint64_t seed) {
  std::vector<RoundingOutcome> outcomes(trials);
  parallel_for(trials, [&](std::size_t t) {
    outcomes[t] = hyperplane_round(qm, emb, k, trial_seed(seed, t));
  });
  std::size_t best = 0;
  for (std::size_t t = 1; t < trials; ++t)
    if (outcomes[t].score > outcomes[best].score) best = t;
  return std::move(outcomes[best]);
}

}  // namespace

int select_k_star(double z_plus, std::size_t n) {
  if (!(z_plus >= 0.0 && z_plus <= 1.0))
    throw std::domain_error("select_k_star: z_plus outside [0, 1]");
  if (n == 0) throw std::domain_error("select_k_star: n must be positive");
  return bounds::argmin_g(z_plus, bounds::hyperplane_cap(n));
}

RoundingOutcome hyperplane_round(const QMatrix& qm, const VectorEmbedding& emb, int k,
                                 std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("hyperplane count must be positive");
  if (k > 63) throw std::invalid_argument("hyperplane count above 63 is not supported");
  if (emb.size() != qm.n())
    throw std::invalid_argument("embedding and coefficient matrix differ in size");

  const auto dim = static_cast<Eigen::Index>(emb.dimension());
  NormalSampler normal(seed);
  Eigen::MatrixXd normals(dim, k);
  for (int h = 0; h < k; ++h)
    for (Eigen::Index d = 0; d < dim; ++d) normals(d, h) = normal();

  const Eigen::MatrixXd proj = emb.vectors * normals;
  std::vector<std::size_t> labels(emb.size(), 0);
  for (std::size_t i = 0; i < emb.size(); ++i) {
    std::size_t pattern = 0;
    for (int h = 0; h < k; ++h)
      if (proj(static_cast<Eigen::Index>(i), h) < 0.0) pattern |= std::size_t{1} << h;
    labels[i] = pattern;
  }

  RoundingOutcome out;
  out.partition = Partition(labels);
  out.score = modularity(qm, out.partition);
  out.k_used = k;
  out.trial_seed = seed;
  return out;
}

std::vector<double> sample_scores(const QMatrix& qm, const VectorEmbedding& emb, int k,
                                  std::size_t trials, std::uint64_t seed) {
  std::vector<double> scores(trials);
  parallel_for(trials, [&](std::size_t t) {
    scores[t] = hyperplane_round(qm, emb, k, trial_seed(seed, t)).score;
  });
  return scores;
}

double full_expectation_floor(double q_mass, double z_plus, double z_minus, int k) {
  return q_mass * (bounds::f_k(clamp_unit(z_plus), k) + bounds::h_k(clamp_unit(-z_minus), k));
}

double cut_expectation_floor(double z_plus, double z_minus) {
  return bounds::p_plus_envelope(std::clamp(2.0 * z_plus - 1.0, -1.0, 1.0)) +
         bounds::p_minus_envelope(std::clamp(-1.0 - 2.0 * z_minus, -1.0, 1.0));
}

RoundingResult round_full(const QMatrix& qm, const SdpSolution& sol, std::size_t trials,
                          std::uint64_t seed) {
  check_inputs(qm, sol, SdpKind::full, trials);
  const double z_plus = clamp_unit(sol.z_plus);
  const int k = select_k_star(z_plus, qm.n());

  RoundingResult res;
  res.best = best_of(qm, gram_vectors(sol), k, trials, seed);

  GuaranteeReport& r = res.report;
  r.kind = SdpKind::full;
  r.upper_bound = sol.objective;
  r.q_mass = qm.q_mass;
  r.z_plus = sol.z_plus;
  r.z_minus = sol.z_minus;
  r.k_star = k;
  r.expectation_floor = full_expectation_floor(qm.q_mass, sol.z_plus, sol.z_minus, k);
  r.additive_certificate = sol.objective - qm.q_mass * bounds::g_k(z_plus, k);
  r.best_score = res.best.score;
  r.trials = trials;
  r.seed = seed;
  return res;
}

RoundingResult round_cut(const QMatrix& qm, const SdpSolution& sol, std::size_t trials,
                         std::uint64_t seed) {
  check_inputs(qm, sol, SdpKind::cut, trials);

  RoundingResult res;
  res.best = best_of(qm, gram_vectors(sol), 1, trials, seed);

  GuaranteeReport& r = res.report;
  r.kind = SdpKind::cut;
  r.upper_bound = sol.objective;
  r.q_mass = qm.q_mass;
  r.z_plus = sol.z_plus;
  r.z_minus = sol.z_minus;
  r.k_star = 1;
  r.expectation_floor = cut_expectation_floor(sol.z_plus, sol.z_minus);
  r.additive_certificate = sol.objective - kCutAdditiveError;
  r.best_score = res.best.score;
  r.trials = trials;
  r.seed = seed;
  return res;
}

}  // namespace modkit
