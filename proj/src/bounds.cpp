#include "modkit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modkit::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTieTolerance = 1e-12;

void check_unit(double x, const char* fn) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error(std::string(fn) + ": argument outside [0, 1]");
}

void check_k(int k, const char* fn) {
  if (k < 1) throw std::domain_error(std::string(fn) + ": k must be positive");
}

double same_side(double x) { return 1.0 - std::acos(x) / kPi; }

double envelope_ratio(double x) { return same_side(x) / ((x + 1.0) / 2.0); }

double golden_section_min(double (*fn)(double), double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  return 0.5 * (a + b);
}

BoundConstants compute_constants() {
  BoundConstants c{};
  const double sqrt5 = std::sqrt(5.0);
  c.full_crossover = std::cos((3.0 - sqrt5) * kPi / 4.0);
  c.full_worst_error = c.full_crossover - (1.0 + sqrt5) / 8.0;

  // The ratio blows up at -1 and tends to 1 at x = 1; the minimum is interior.
  c.cut_beta = golden_section_min(&envelope_ratio, -0.999, 0.999999, 1e-12);
  c.cut_alpha = envelope_ratio(c.cut_beta);

  const double root = std::sqrt(kPi * kPi - 4.0);
  c.cut_threshold = root / (2.0 * kPi);
  c.cut_argmax = 0.5 + c.cut_threshold;
  c.cut_worst_error = c.cut_threshold + std::acos(root / kPi) / kPi - c.cut_alpha / 2.0;
  return c;
}

}  // namespace

const BoundConstants& constants() {
  static const BoundConstants c = compute_constants();
  return c;
}

double f_k(double x, int k) {
  check_unit(x, "f_k");
  check_k(k, "f_k");
  return std::pow(same_side(x), k);
}

double h_k(double x, int k) {
  check_unit(x, "h_k");
  check_k(k, "h_k");
  const double p = std::ldexp(1.0, -k);
  return -p + (p - 1.0) * x;
}

double g_k(double x, int k) {
  check_unit(x, "g_k");
  check_k(k, "g_k");
  return x - std::pow(same_side(x), k) + std::ldexp(1.0, -k);
}

int argmin_g(double x, int k_max) {
  check_k(k_max, "argmin_g");
  int best_k = 1;
  double best = g_k(x, 1);
  for (int k = 2; k <= k_max; ++k) {
    const double v = g_k(x, k);
    if (v < best - kTieTolerance) {
      best = v;
      best_k = k;
    }
  }
  return best_k;
}

double min_g(double x, int k_max) {
  check_k(k_max, "min_g");
  double best = g_k(x, 1);
  for (int k = 2; k <= k_max; ++k) best = std::min(best, g_k(x, k));
  return best;
}

double full_lower_bound_curve(double opt, int k_max) {
  if (!(opt >= 0.0 && opt < 1.0))
    throw std::domain_error("full_lower_bound_curve: OPT outside [0, 1)");
  const auto& c = constants();
  if (opt < c.full_crossover) return opt - c.full_worst_error;
  return opt - std::min(c.full_worst_error, min_g(opt, k_max));
}

double p_plus_envelope(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("p_plus_envelope: x outside [-1, 1]");
  const auto& c = constants();
  return x <= c.cut_beta ? c.cut_alpha * (x + 1.0) / 2.0 : same_side(x);
}

double p_minus_envelope(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("p_minus_envelope: x outside [-1, 1]");
  const auto& c = constants();
  return x <= -c.cut_beta ? -same_side(x) : (c.cut_alpha - 1.0) - c.cut_alpha * (x + 1.0) / 2.0;
}

std::pair<double, double> cut_envelopes(double x) {
  return {p_plus_envelope(x), p_minus_envelope(x)};
}

double cut_error(double x) {
  if (!(x >= 0.5 && x <= 1.0)) throw std::domain_error("cut_error: x outside [1/2, 1]");
  return x - p_plus_envelope(2.0 * x - 1.0) - (constants().cut_alpha - 1.0) / 2.0;
}

double cut_error_curve(double opt_cut) {
  if (!(opt_cut >= 0.0 && opt_cut <= 0.5))
    throw std::domain_error("cut_error_curve: OPT_cut outside [0, 1/2]");
  const auto& c = constants();
  if (opt_cut < c.cut_threshold) return opt_cut - c.cut_worst_error;
  return opt_cut - std::min(c.cut_worst_error, cut_error(opt_cut + 0.5));
}

double l_k(double x, int k) {
  check_k(k, "l_k");
  double sum = 0.0, term = 1.0;
  for (int i = 0; i < k; ++i) {
    sum += term;
    term *= 2.0 * x;
  }
  return std::ldexp(sum, -(k - 1));
}

int hyperplane_cap(std::size_t n) {
  int c = 0;
  while ((std::size_t{1} << c) < n) ++c;
  return std::max(3, c);
}

bool AppendixReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

AppendixReport verify_appendix(const std::vector<std::size_t>& n_range, std::size_t grid) {
  if (n_range.empty()) throw std::invalid_argument("verify_appendix: empty n range");
  if (grid < 2) throw std::invalid_argument("verify_appendix: grid needs at least 2 points");
  AppendixReport report;

  auto record = [](AppendixCheck& chk, bool ok, double violation) {
    ++chk.points;
    if (!ok) {
      ++chk.failures;
      chk.passed = false;
      chk.worst = std::max(chk.worst, violation);
    }
  };

  for (std::size_t n : n_range) {
    if (n < 2) throw std::invalid_argument("verify_appendix: n must be at least 2");
    AppendixCheck chk{"argmin_k g_k(OPT) <= max(3, ceil(log2 n)) for n = " + std::to_string(n)};
    const int cap = hyperplane_cap(n);
    const double top = 1.0 - 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < grid; ++i) {
      const double opt = top * static_cast<double>(i) / static_cast<double>(grid - 1);
      const int k = argmin_g(opt, kScanKMax);
      record(chk, k <= cap, static_cast<double>(k - cap));
    }
    report.checks.push_back(std::move(chk));
  }

  {
    AppendixCheck chk{"sqrt(2x) <= acos(1 - x) on [0, 1]"};
    for (std::size_t i = 0; i < grid; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(grid - 1);
      const double excess = std::sqrt(2.0 * x) - std::acos(1.0 - x);
      record(chk, excess <= 1e-12, excess);
    }
    report.checks.push_back(std::move(chk));
  }

  const double golden_half = (1.0 + std::sqrt(5.0)) / 4.0;
  for (int k = 3; k <= 10; ++k) {
    AppendixCheck chk{"l_" + std::to_string(k) + "(x) < x + 1/2 on [0, (1+sqrt 5)/4)"};
    for (std::size_t i = 0; i < grid; ++i) {
      const double x = golden_half * static_cast<double>(i) / static_cast<double>(grid);
      const double gap = x + 0.5 - l_k(x, k);
      record(chk, gap > 0.0, -gap);
    }
    report.checks.push_back(std::move(chk));
  }
  return report;
}

}  // namespace modkit::bounds
