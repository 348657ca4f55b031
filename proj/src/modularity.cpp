#include "modkit/modularity.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace modkit {

Partition::Partition(std::span<const std::size_t> labels) {
  std::unordered_map<std::size_t, std::size_t> remap;
  assign_.reserve(labels.size());
  for (std::size_t label : labels) {
    auto [it, inserted] = remap.try_emplace(label, remap.size());
    assign_.push_back(it->second);
  }
  k_ = remap.size();
}

Partition Partition::single_cluster(std::size_t n) {
  std::vector<std::size_t> zeros(n, 0);
  return Partition(zeros);
}

QMatrix build_q(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const Degrees deg = degrees(g);
  QMatrix qm;
  qm.variant = g.variant();
  qm.entries = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  auto idx = [](std::size_t i) { return static_cast<Eigen::Index>(i); };

  switch (g.variant()) {
    case Variant::undirected:
    case Variant::weighted: {
      // q_ij = w_ij / 2W - s_i s_j / 4W^2 (W = m, s = d when unweighted)
      const double w = g.total_weight();
      qm.scale = w;
      qm.null_factor.resize(n);
      for (std::size_t i = 0; i < n; ++i) qm.null_factor[i] = deg.out[i] / (2.0 * w);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          qm.entries(idx(i), idx(j)) = -qm.null_factor[i] * qm.null_factor[j];
      for (const Edge& e : g.edges()) {
        qm.entries(idx(e.from), idx(e.to)) += e.weight / (2.0 * w);
        qm.entries(idx(e.to), idx(e.from)) += e.weight / (2.0 * w);
      }
      break;
    }
    case Variant::directed: {
      // raw q_ij = A_ij / m - dout_i din_j / m^2, symmetrized
      const double m = static_cast<double>(g.num_edges());
      qm.scale = m;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          qm.entries(idx(i), idx(j)) =
              -0.5 * (deg.out[i] * deg.in[j] + deg.out[j] * deg.in[i]) / (m * m);
      for (const Edge& e : g.edges()) {
        qm.entries(idx(e.from), idx(e.to)) += 0.5 / m;
        qm.entries(idx(e.to), idx(e.from)) += 0.5 / m;
      }
      break;
    }
    case Variant::bipartite: {
      // raw q_ij = A_ij / m - d_i d_j / m^2 for i left, j right; 0 otherwise
      const double m = static_cast<double>(g.num_edges());
      qm.scale = m;
      const auto& side = g.sides();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (side[i] != side[j])
            qm.entries(idx(i), idx(j)) = -0.5 * deg.out[i] * deg.out[j] / (m * m);
      for (const Edge& e : g.edges()) {
        qm.entries(idx(e.from), idx(e.to)) += 0.5 / m;
        qm.entries(idx(e.to), idx(e.from)) += 0.5 / m;
      }
      break;
    }
  }

  for (Eigen::Index i = 0; i < qm.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < qm.entries.cols(); ++j)
      if (qm.entries(i, j) >= 0.0) qm.q_mass += qm.entries(i, j);
  return qm;
}

double modularity(const QMatrix& qm, const Partition& p) {
  if (p.size() != qm.n())
    throw std::invalid_argument("partition has " + std::to_string(p.size()) +
                                " vertices, coefficient matrix has " + std::to_string(qm.n()));
  double q = 0.0;
  const auto n = static_cast<Eigen::Index>(qm.n());
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (p[static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(j)]) q += qm.entries(i, j);
  return q;
}

QSplit q_split(const QMatrix& qm) {
  QSplit s;
  for (std::size_t i = 0; i < qm.n(); ++i) {
    for (std::size_t j = 0; j < qm.n(); ++j) {
      const double v = qm.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (v >= 0.0) {
        s.positive.emplace_back(i, j);
        s.positive_mass += v;
      } else {
        s.negative.emplace_back(i, j);
        s.negative_mass += v;
      }
    }
  }
  return s;
}

}  // namespace modkit
