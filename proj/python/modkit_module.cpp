#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modkit/bounds.hpp"
#include "modkit/exact.hpp"
#include "modkit/graph.hpp"
#include "modkit/modularity.hpp"
#include "modkit/rounding.hpp"
#include "modkit/sdp.hpp"

namespace py = pybind11;
using namespace modkit;

namespace {

using EdgeTuple = std::tuple<std::size_t, std::size_t, double>;

Graph make_graph(std::size_t n, const std::vector<EdgeTuple>& edges, const std::string& variant,
                 const std::vector<std::size_t>& left) {
  std::vector<Edge> es;
  for (const auto& [a, b, w] : edges) es.push_back({a, b, w});
  std::vector<Side> sides;
  const Variant v = parse_variant(variant);
  if (v == Variant::bipartite) {
    sides.assign(n, Side::right);
    for (std::size_t i : left) {
      if (i >= n) throw ValidationError("left side lists a vertex outside the graph");
      sides[i] = Side::left;
    }
  }
  return Graph::create(n, std::move(es), v, std::move(sides));
}

SolverOptions options(double tol_feas, double tol_obj, std::size_t max_iters, double penalty,
                      bool record_trace) {
  SolverOptions o;
  o.tol_feas = tol_feas;
  o.tol_obj = tol_obj;
  o.max_iters = max_iters;
  o.penalty = penalty;
  o.record_trace = record_trace;
  return o;
}

py::dict report_dict(const GuaranteeReport& r) {
  py::dict d;
  d["kind"] = r.kind == SdpKind::full ? "full" : "cut";
  d["upper_bound"] = r.upper_bound;
  d["q_mass"] = r.q_mass;
  d["z_plus"] = r.z_plus;
  d["z_minus"] = r.z_minus;
  d["k_star"] = r.k_star;
  d["expectation_floor"] = r.expectation_floor;
  d["additive_certificate"] = r.additive_certificate;
  d["best_score"] = r.best_score;
  d["trials"] = r.trials;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Modularity maximization: SDP relaxations, hyperplane rounding, exact oracles";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           py::arg("variant") = "undirected", py::arg("left") = std::vector<std::size_t>{},
           "edges: list of (i, j, weight); left: vertices on the left side (bipartite only)")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("variant", [](const Graph& g) { return std::string(to_string(g.variant())); })
      .def_property_readonly("total_weight", &Graph::total_weight)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<EdgeTuple> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.from, e.to, e.weight);
                               return out;
                             })
      .def("degrees", [](const Graph& g) {
        Degrees d = degrees(g);
        return std::make_pair(d.out, d.in);
      })
      .def("render", &render_edge_list)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("parse_edge_list", [](const std::string& text, const std::string& variant) {
    return parse_edge_list(text, parse_variant(variant));
  }, py::arg("text"), py::arg("variant") = "undirected");
  m.def("read_edge_list", [](const std::string& path, const std::string& variant) {
    return read_edge_list_file(path, parse_variant(variant));
  }, py::arg("path"), py::arg("variant") = "undirected");

  py::class_<QMatrix>(m, "QMatrix")
      .def_readonly("entries", &QMatrix::entries)
      .def_readonly("q_mass", &QMatrix::q_mass)
      .def_readonly("scale", &QMatrix::scale)
      .def_readonly("null_factor", &QMatrix::null_factor)
      .def_property_readonly("n", &QMatrix::n);

  m.def("build_q", &build_q, py::arg("graph"));
  m.def("modularity", [](const QMatrix& qm, const std::vector<std::size_t>& labels) {
    return modularity(qm, Partition(labels));
  }, py::arg("qm"), py::arg("labels"));
  m.def("q_split", [](const QMatrix& qm) {
    QSplit s = q_split(qm);
    return py::make_tuple(s.positive_mass, s.negative_mass);
  }, py::arg("qm"), "(positive mass, negative mass)");

  py::class_<IterateRecord>(m, "IterateRecord")
      .def_readonly("iteration", &IterateRecord::iteration)
      .def_readonly("objective", &IterateRecord::objective)
      .def_readonly("primal_residual", &IterateRecord::primal_residual)
      .def_readonly("dual_residual", &IterateRecord::dual_residual);

  py::class_<SdpSolution>(m, "SdpSolution")
      .def_property_readonly("kind", [](const SdpSolution& s) { return s.kind == SdpKind::full ? "full" : "cut"; })
      .def_readonly("gram", &SdpSolution::gram)
      .def_readonly("objective", &SdpSolution::objective)
      .def_readonly("dual_bound", &SdpSolution::dual_bound)
      .def_readonly("z_plus", &SdpSolution::z_plus)
      .def_readonly("z_minus", &SdpSolution::z_minus)
      .def_readonly("converged", &SdpSolution::converged)
      .def_readonly("iterations", &SdpSolution::iterations)
      .def_readonly("primal_residual", &SdpSolution::primal_residual)
      .def_readonly("dual_residual", &SdpSolution::dual_residual)
      .def_readonly("wallclock", &SdpSolution::wallclock)
      .def_readonly("trace", &SdpSolution::trace);

  const SolverOptions defaults;
  auto solver = [&](const char* name, SdpSolution (*fn)(const QMatrix&, const SolverOptions&)) {
    m.def(name, [fn](const QMatrix& qm, double tol_feas, double tol_obj, std::size_t max_iters,
                     double penalty, bool record_trace) {
      py::gil_scoped_release release;
      return fn(qm, options(tol_feas, tol_obj, max_iters, penalty, record_trace));
    }, py::arg("qm"), py::arg("tol_feas") = defaults.tol_feas, py::arg("tol_obj") = defaults.tol_obj,
       py::arg("max_iters") = defaults.max_iters, py::arg("penalty") = defaults.penalty,
       py::arg("record_trace") = false);
  };
  solver("solve_full_sdp", &solve_full_sdp);
  solver("solve_cut_sdp", &solve_cut_sdp);

  m.def("gram_vectors", [](const Eigen::MatrixXd& gram) { return gram_vectors(gram).vectors; },
        py::arg("gram"), "Rows are unit vectors whose Gram matrix is `gram`.");

  auto rounding = [&](const char* name,
                      RoundingResult (*fn)(const QMatrix&, const SdpSolution&, std::size_t, std::uint64_t)) {
    m.def(name, [fn](const QMatrix& qm, const SdpSolution& sol, std::size_t trials, std::uint64_t seed) {
      RoundingResult r;
      {
        py::gil_scoped_release release;
        r = fn(qm, sol, trials, seed);
      }
      py::dict d = report_dict(r.report);
      d["partition"] = r.best.partition.assign();
      d["num_clusters"] = r.best.partition.num_clusters();
      d["trial_seed"] = r.best.trial_seed;
      return d;
    }, py::arg("qm"), py::arg("solution"), py::arg("trials") = 200, py::arg("seed") = 0);
  };
  rounding("round_full", &round_full);
  rounding("round_cut", &round_cut);

  m.def("sample_scores", [](const QMatrix& qm, const SdpSolution& sol, int k, std::size_t trials,
                            std::uint64_t seed) {
    py::gil_scoped_release release;
    return sample_scores(qm, gram_vectors(sol), k, trials, seed);
  }, py::arg("qm"), py::arg("solution"), py::arg("k"), py::arg("trials"), py::arg("seed") = 0);
  m.def("select_k_star", &select_k_star, py::arg("z_plus"), py::arg("n"));
  m.def("full_expectation_floor", &full_expectation_floor, py::arg("q_mass"), py::arg("z_plus"),
        py::arg("z_minus"), py::arg("k"));
  m.def("cut_expectation_floor", &cut_expectation_floor, py::arg("z_plus"), py::arg("z_minus"));

  auto exact = [&](const char* name, ExactResult (*fn)(const QMatrix&, std::size_t), std::size_t limit) {
    m.def(name, [fn](const QMatrix& qm, std::size_t limit) {
      ExactResult r;
      {
        py::gil_scoped_release release;
        r = fn(qm, limit);
      }
      py::dict d;
      d["opt"] = r.opt_value;
      d["partition"] = r.opt_partition.assign();
      d["enumerated"] = r.enumerated;
      return d;
    }, py::arg("qm"), py::arg("limit") = limit);
  };
  exact("exact_full", &exact_full, kExactFullLimit);
  exact("exact_cut", &exact_cut, kExactCutLimit);

  py::module_ b = m.def_submodule("bounds", "Worst-case error functions and constants");
  b.def("constants", [] {
    const bounds::BoundConstants& c = bounds::constants();
    py::dict d;
    d["full_crossover"] = c.full_crossover;
    d["full_worst_error"] = c.full_worst_error;
    d["cut_alpha"] = c.cut_alpha;
    d["cut_beta"] = c.cut_beta;
    d["cut_threshold"] = c.cut_threshold;
    d["cut_argmax"] = c.cut_argmax;
    d["cut_worst_error"] = c.cut_worst_error;
    return d;
  });
  b.def("f_k", &bounds::f_k, py::arg("x"), py::arg("k"));
  b.def("h_k", &bounds::h_k, py::arg("x"), py::arg("k"));
  b.def("g_k", &bounds::g_k, py::arg("x"), py::arg("k"));
  b.def("argmin_g", &bounds::argmin_g, py::arg("x"), py::arg("k_max"));
  b.def("full_lower_bound_curve", &bounds::full_lower_bound_curve, py::arg("opt"),
        py::arg("k_max") = bounds::kScanKMax);
  b.def("cut_error", &bounds::cut_error, py::arg("x"));
  b.def("cut_error_curve", &bounds::cut_error_curve, py::arg("opt_cut"));
  b.def("p_plus_envelope", &bounds::p_plus_envelope, py::arg("x"));
  b.def("p_minus_envelope", &bounds::p_minus_envelope, py::arg("x"));
  b.def("verify_appendix", [](const std::vector<std::size_t>& n_range, std::size_t grid) {
    py::list out;
    for (const auto& c : bounds::verify_appendix(n_range, grid).checks) {
      py::dict d;
      d["name"] = c.name;
      d["passed"] = c.passed;
      d["points"] = c.points;
      d["failures"] = c.failures;
      d["worst"] = c.worst;
      out.append(d);
    }
    return out;
  }, py::arg("n_range"), py::arg("grid") = 1000);
}
