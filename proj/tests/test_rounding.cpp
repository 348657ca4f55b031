#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>

#include "modkit/bounds.hpp"
#include "modkit/random.hpp"
#include "modkit/rounding.hpp"
#include "support/fixtures.hpp"

using namespace modkit;
namespace mt = modkit::testing;

namespace {

VectorEmbedding two_vectors(double theta) {
  VectorEmbedding emb;
  emb.vectors.resize(2, 3);
  emb.vectors << 1.0, 0.0, 0.0, std::cos(theta), std::sin(theta), 0.0;
  return emb;
}

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

Stats stats(const std::vector<double>& v) {
  Stats s;
  for (double x : v) s.mean += x;
  s.mean /= static_cast<double>(v.size());
  for (double x : v) s.stddev += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(s.stddev / static_cast<double>(v.size() - 1));
  return s;
}

}  // namespace

TEST_CASE("k* selection") {
  CHECK(select_k_star(0.5, 8) == 2);
  CHECK(select_k_star(0.95, 1024) == 3);
  CHECK(select_k_star(bounds::constants().full_crossover, 64) == 2);
  CHECK(select_k_star(1.0, 4) == 3);
}

TEST_CASE("seed derivation is a stable function of (master, index)") {
  static_assert(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(trial_seed(0, 0) != trial_seed(0, 1));
  CHECK(trial_seed(1, 0) != trial_seed(0, 0));
  CHECK(trial_seed(42, 7) == trial_seed(42, 7));
}

TEST_CASE("hyperplane rounding validates k") {
  const QMatrix qm = build_q(mt::path(4));
  const VectorEmbedding emb = gram_vectors(solve_full_sdp(qm, {}));
  CHECK_THROWS_AS(hyperplane_round(qm, emb, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(hyperplane_round(qm, emb, 64, 1), std::invalid_argument);
}

TEST_CASE("round_full and round_cut on two triangles") {
  const QMatrix qm = build_q(mt::two_triangles());
  const SdpSolution full = solve_full_sdp(qm, {});
  const RoundingResult r = round_full(qm, full, 200, 42);
  CHECK(r.best.score == doctest::Approx(5.0 / 14.0).epsilon(1e-12));
  CHECK(r.report.upper_bound >= r.best.score - 1e-9);
  CHECK(r.report.additive_certificate <= r.report.expectation_floor + 1e-12);
  CHECK(r.report.trials == 200);
  CHECK(r.report.seed == 42);
  CHECK(r.report.k_star == select_k_star(r.report.z_plus, 6));

  const SdpSolution cut = solve_cut_sdp(qm, {});
  const RoundingResult c = round_cut(qm, cut, 200, 42);
  CHECK(c.best.partition.num_clusters() <= 2);
  CHECK(c.report.k_star == 1);
  CHECK(c.report.additive_certificate <= c.report.expectation_floor + 1e-12);

  CHECK_THROWS_AS(round_full(qm, cut, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(round_cut(qm, full, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(round_full(qm, full, 0, 0), std::invalid_argument);
}

TEST_CASE("best trial matches a direct replay of its seed") {
  const QMatrix qm = build_q(mt::petersen());
  const SdpSolution s = solve_full_sdp(qm, {});
  const RoundingResult r = round_full(qm, s, 50, 9);
  const RoundingOutcome replay = hyperplane_round(qm, gram_vectors(s), r.best.k_used, r.best.trial_seed);
  CHECK(replay.partition == r.best.partition);
  CHECK(replay.score == r.best.score);
}

TEST_CASE("property: cluster count is at most min(2^k, n)") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const QMatrix qm = build_q(mt::random_graph(n, 0.4, rng));
    const VectorEmbedding emb = gram_vectors(solve_full_sdp(qm, {}));
    for (int k = 1; k <= 4; ++k)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const RoundingOutcome o = hyperplane_round(qm, emb, k, seed);
        CHECK(o.partition.num_clusters() <= std::min<std::size_t>(std::size_t{1} << k, n));
        CHECK(o.score == doctest::Approx(modularity(qm, o.partition)).epsilon(1e-14));
      }
  }
}

TEST_CASE("property: results do not depend on the worker count") {
  const QMatrix qm = build_q(mt::petersen());
  const SdpSolution s = solve_full_sdp(qm, {});
  ::setenv("MODKIT_THREADS", "1", 1);
  const RoundingResult one = round_full(qm, s, 300, 77);
  const std::vector<double> scores_one = sample_scores(qm, gram_vectors(s), 2, 300, 77);
  ::setenv("MODKIT_THREADS", "5", 1);
  const RoundingResult five = round_full(qm, s, 300, 77);
  const std::vector<double> scores_five = sample_scores(qm, gram_vectors(s), 2, 300, 77);
  ::unsetenv("MODKIT_THREADS");
  CHECK(one.best.partition == five.best.partition);
  CHECK(one.best.trial_seed == five.best.trial_seed);
  CHECK(scores_one == scores_five);
}

TEST_CASE("property: separation probability of k hyperplanes") {
  const double pi = std::numbers::pi;
  const QMatrix qm = build_q(mt::complete(2));
  for (double theta : {pi / 6, pi / 4, pi / 3, pi / 2}) {
    const VectorEmbedding emb = two_vectors(theta);
    for (int k = 1; k <= 3; ++k) {
      const std::size_t trials = 100000;
      std::size_t same = 0;
      for (std::size_t t = 0; t < trials; ++t)
        same += hyperplane_round(qm, emb, k, trial_seed(1234, t)).partition.num_clusters() == 1;
      const double freq = static_cast<double>(same) / trials;
      CAPTURE(theta);
      CAPTURE(k);
      CHECK(std::abs(freq - std::pow(1.0 - theta / pi, k)) < 0.01);
    }
  }
}

TEST_CASE("property: sample means respect the expectation floors") {
  // K4 rounds to {V} every time: mean and floor are both 0 up to summation error.
  constexpr double kRoundoff = 1e-12;
  for (const auto& [name, g] : mt::named_fixtures()) {
    CAPTURE(name);
    const QMatrix qm = build_q(g);
    const SdpSolution full = solve_full_sdp(qm, {});
    const VectorEmbedding emb = gram_vectors(full);
    const int k = select_k_star(full.z_plus, qm.n());
    const Stats s = stats(sample_scores(qm, emb, k, 10000, 3));
    const double floor = full_expectation_floor(qm.q_mass, full.z_plus, full.z_minus, k);
    CHECK(s.mean >= floor - 3.0 * s.stddev / 100.0 - kRoundoff);

    const SdpSolution cut = solve_cut_sdp(qm, {});
    const Stats c = stats(sample_scores(qm, gram_vectors(cut), 1, 10000, 3));
    CHECK(c.mean >= cut_expectation_floor(cut.z_plus, cut.z_minus) - 3.0 * c.stddev / 100.0 - kRoundoff);
  }
}
