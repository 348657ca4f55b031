#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace modkit::bounds {

/// Named constants of the worst-case analysis. `cut_alpha` and `cut_beta`
/// are found numerically (golden-section search) the first time they are
/// requested; everything else is closed form.
struct BoundConstants {
  double full_crossover;    ///< cos((3 - sqrt 5) pi / 4)
  double full_worst_error;  ///< full_crossover - (1 + sqrt 5) / 8
  double cut_alpha;         ///< min over (-1,1) of (1 - acos(x)/pi) / ((x+1)/2)
  double cut_beta;          ///< its minimizer
  double cut_threshold;     ///< sqrt(pi^2 - 4) / (2 pi)
  double cut_argmax;        ///< 1/2 + cut_threshold
  double cut_worst_error;   ///< max of the cut error function over [1/2, 1]
};

const BoundConstants& constants();

/// Largest hyperplane count used by verification scans and curve defaults.
inline constexpr int kScanKMax = 64;

/// Same-cluster probability under k hyperplanes, (1 - acos(x)/pi)^k, x in [0,1].
double f_k(double x, int k);
/// Convex envelope of -f_k on [0,1]: -1/2^k + (1/2^k - 1) x.
double h_k(double x, int k);
/// Additive error of Hyperplane(k) as a function of z+: x - f_k(x) + 1/2^k.
double g_k(double x, int k);

/// Smallest k in [1, k_max] minimizing g_k(x). Values within 1e-12 of the
/// minimum count as ties.
int argmin_g(double x, int k_max);
double min_g(double x, int k_max);

/// Lower bound on E[Q] of Hyperplane(k*) in terms of OPT (with q replaced by
/// 1). Uses the refined bound opt - min_k g_k(opt) where it is proven
/// (opt >= full_crossover) and opt - full_worst_error below it.
double full_lower_bound_curve(double opt, int k_max = kScanKMax);

/// Lower convex envelopes of p+(x) = 1 - acos(x)/pi and p-(x) = -p+(x) on [-1,1].
double p_plus_envelope(double x);
double p_minus_envelope(double x);
std::pair<double, double> cut_envelopes(double x);

/// Additive error of the single-hyperplane cut rounding as a function of
/// z+ in [1/2, 1]: x - p+_env(2x - 1) - (alpha - 1)/2.
double cut_error(double x);

/// Lower bound on E[Q] of the cut rounding in terms of OPT_cut in [0, 1/2];
/// refined above cut_threshold, opt_cut - cut_worst_error below.
double cut_error_curve(double opt_cut);

/// l_k(x) = (1/2^(k-1)) sum_{i<k} (2x)^i.
double l_k(double x, int k);

struct AppendixCheck {
  std::string name;
  bool passed = true;
  std::size_t points = 0;
  std::size_t failures = 0;
  /// Largest violation seen (0 when passed).
  double worst = 0.0;
};

struct AppendixReport {
  std::vector<AppendixCheck> checks;
  bool all_passed() const;
};

/// Grid checks of the supporting inequalities: for each n, argmin_k g_k(opt) over
/// k <= 64 stays within max(3, ceil(log2 n)) for opt on [0, 1 - 1/n];
/// sqrt(2x) <= acos(1 - x) on [0,1]; l_k(x) < x + 1/2 on [0, (1+sqrt 5)/4)
/// for k = 3..10.
AppendixReport verify_appendix(const std::vector<std::size_t>& n_range, std::size_t grid);

/// max(3, ceil(log2 n)), the hyperplane cap of Hyperplane(k*).
int hyperplane_cap(std::size_t n);

}  // namespace modkit::bounds
