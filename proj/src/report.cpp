#include "modkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "modkit/bounds.hpp"

namespace modkit::report {

namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string comment;
};

double lerp(double lo, double hi, std::size_t i, std::size_t denom) {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(denom);
}

Table figure_table(int figure, std::size_t samples, int k_max) {
  if (samples < 2) throw std::invalid_argument("figure needs at least 2 samples");
  Table t;
  const std::size_t last = samples - 1;
  switch (figure) {
    case 1:
      t.columns = {"x", "g1", "g2", "g3", "g4", "g5"};
      for (std::size_t i = 0; i < samples; ++i) {
        const double x = lerp(0.0, 1.0, i, last);
        std::vector<double> row{x};
        for (int k = 1; k <= 5; ++k) row.push_back(bounds::g_k(x, k));
        t.rows.push_back(std::move(row));
      }
      break;
    case 2:
      t.columns = {"opt", "floor"};
      t.comment = "k_max=" + std::to_string(k_max) +
                  "; opt below cos((3-sqrt5)pi/4) uses the worst-case error";
      for (std::size_t i = 0; i < samples; ++i) {
        const double opt = lerp(0.0, 1.0, i, samples);
        t.rows.push_back({opt, bounds::full_lower_bound_curve(opt, k_max)});
      }
      break;
    case 3:
      t.columns = {"x", "g"};
      for (std::size_t i = 0; i < samples; ++i) {
        const double x = lerp(0.5, 1.0, i, last);
        t.rows.push_back({x, bounds::cut_error(x)});
      }
      break;
    case 4:
      t.columns = {"opt_cut", "floor"};
      for (std::size_t i = 0; i < samples; ++i) {
        const double opt = lerp(0.0, 0.5, i, last);
        t.rows.push_back({opt, bounds::cut_error_curve(opt)});
      }
      break;
    default:
      throw std::invalid_argument("figure must be 1, 2, 3 or 4");
  }
  return t;
}

void dump_into(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
        dump_into(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      // Arrays of scalars stay on one line.
      bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat ? ", " : ",");
        first = false;
        if (!flat) os << nl << pad;
        dump_into(os, e, indent, depth + 1);
      }
      if (!flat && !j.empty()) os << nl << close_pad;
      os << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  dump_into(os, j, indent, 0);
  return os.str();
}

Json to_json(const GuaranteeReport& r) {
  Json j;
  j["kind"] = r.kind == SdpKind::full ? "full" : "cut";
  j["upper_bound"] = r.upper_bound;
  j["q_mass"] = r.q_mass;
  j["z_plus"] = r.z_plus;
  j["z_minus"] = r.z_minus;
  j["k_star"] = r.k_star;
  j["expectation_floor"] = r.expectation_floor;
  j["additive_certificate"] = r.additive_certificate;
  j["best_score"] = r.best_score;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j;
}

Json to_json(const Partition& p) { return Json(p.assign()); }

Json solver_diagnostics(const SdpSolution& sol) {
  Json j;
  j["converged"] = sol.converged;
  j["iterations"] = sol.iterations;
  j["objective"] = sol.objective;
  j["dual_bound"] = sol.dual_bound;
  j["primal_residual"] = sol.primal_residual;
  j["dual_residual"] = sol.dual_residual;
  return j;
}

Json to_json(const ExactResult& r) {
  Json j;
  j["opt"] = r.opt_value;
  j["partition"] = to_json(r.opt_partition);
  j["num_clusters"] = r.opt_partition.num_clusters();
  j["enumerated"] = r.enumerated;
  return j;
}

std::string figure_csv(int figure, std::size_t samples, int k_max) {
  const Table t = figure_table(figure, samples, k_max);
  std::ostringstream os;
  if (!t.comment.empty()) os << "# " << t.comment << '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
    os << '\n';
  }
  return os.str();
}

Json figure_json(int figure, std::size_t samples, int k_max) {
  const Table t = figure_table(figure, samples, k_max);
  Json j;
  j["figure"] = figure;
  if (!t.comment.empty()) j["note"] = t.comment;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j;
}

std::string iterate_log_csv(const SdpSolution& sol) {
  std::ostringstream os;
  os << "iteration,objective,primal_residual,dual_residual\n";
  for (const auto& r : sol.trace)
    os << r.iteration << ',' << format_double(r.objective) << ',' << format_double(r.primal_residual)
       << ',' << format_double(r.dual_residual) << '\n';
  return os.str();
}

}  // namespace modkit::report
