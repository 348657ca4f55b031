#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "modkit/exact.hpp"
#include "modkit/rounding.hpp"
#include "modkit/sdp.hpp"

namespace modkit::report {

using Json = nlohmann::ordered_json;

/// 17 significant digits ("%.17g"); non-finite values become "null".
std::string format_double(double v);

/// JSON with keys in insertion order and numbers via format_double.
std::string dump(const Json& j, int indent = 2);

Json to_json(const GuaranteeReport& r);
Json to_json(const Partition& p);
Json solver_diagnostics(const SdpSolution& sol);
Json to_json(const ExactResult& r);

/// Plot data for the four bound figures:
///   1: x, g1..g5 over [0, 1]
///   2: opt, floor over [0, 1) (Hyperplane(k*) lower bound, k capped at k_max)
///   3: x, g over [1/2, 1] (cut error function)
///   4: opt_cut, floor over [0, 1/2]
/// `samples` data rows follow one header row; figure 2 starts with a
/// "# k_max=..." comment line.
std::string figure_csv(int figure, std::size_t samples, int k_max = 64);

/// The same data as figure_csv as {"figure", "columns", "rows"}.
Json figure_json(int figure, std::size_t samples, int k_max = 64);

/// One "iteration,objective,primal_residual,dual_residual" row per record.
std::string iterate_log_csv(const SdpSolution& sol);

}  // namespace modkit::report
