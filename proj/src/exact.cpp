#include "modkit/exact.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace modkit {

namespace {

void check_limit(const QMatrix& qm, std::size_t limit, const char* what, const std::string& size) {
  if (qm.n() > limit)
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(qm.n()) +
                                " exceeds the limit " + std::to_string(limit) + " (" + size +
                                " candidates)");
}

// Depth-first walk over restricted growth strings a_0..a_{n-1} with
// a_0 = 0 and a_i <= 1 + max(a_0..a_{i-1}). Cluster column sums make each
// step O(n).
class SetPartitionSearch {
public:
  explicit SetPartitionSearch(const Eigen::MatrixXd& q)
      : q_(q), n_(static_cast<std::size_t>(q.rows())), labels_(n_, 0), best_labels_(n_, 0),
        colsum_(n_, std::vector<double>(n_, 0.0)) {}

  void run() { descend(0, 0, 0.0); }

  double best_value() const { return best_; }
  const std::vector<std::size_t>& best_labels() const { return best_labels_; }
  std::uint64_t visited() const { return visited_; }

private:
  void descend(std::size_t i, std::size_t used, double value) {
    if (i == n_) {
      ++visited_;
      if (value > best_) {
        best_ = value;
        best_labels_ = labels_;
      }
      return;
    }
    const auto ii = static_cast<Eigen::Index>(i);
    const std::size_t top = used < n_ ? used : n_ - 1;
    for (std::size_t c = 0; c <= top; ++c) {
      const double delta = q_(ii, ii) + 2.0 * colsum_[c][i];
      labels_[i] = c;
      for (std::size_t v = i + 1; v < n_; ++v) colsum_[c][v] += q_(ii, static_cast<Eigen::Index>(v));
      descend(i + 1, c == used ? used + 1 : used, value + delta);
      for (std::size_t v = i + 1; v < n_; ++v) colsum_[c][v] -= q_(ii, static_cast<Eigen::Index>(v));
    }
  }

  const Eigen::MatrixXd& q_;
  std::size_t n_;
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> best_labels_;
  std::vector<std::vector<double>> colsum_;
  double best_ = -std::numeric_limits<double>::infinity();
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle; saturating arithmetic.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) {
      const std::uint64_t prev = next.back();
      next.push_back(prev > kMax - v ? kMax : prev + v);
    }
    row = std::move(next);
  }
  return row.front();
}

ExactResult exact_full(const QMatrix& qm, std::size_t limit) {
  check_limit(qm, limit, "exact_full", "Bell number " + std::to_string(bell_number(qm.n())));
  SetPartitionSearch search(qm.entries);
  search.run();
  ExactResult res;
  res.opt_partition = Partition(search.best_labels());
  res.opt_value = modularity(qm, res.opt_partition);
  res.enumerated = search.visited();
  return res;
}

ExactResult exact_cut(const QMatrix& qm, std::size_t limit) {
  const std::size_t n = qm.n();
  check_limit(qm, limit, "exact_cut",
              n > 64 ? std::string("2^") + std::to_string(n - 1)
                     : std::to_string(std::uint64_t{1} << (n - 1)));
  if (n > 63) throw std::invalid_argument("exact_cut: n above 63 is not supported");
  const Eigen::MatrixXd& q = qm.entries;

  // Vertex n-1 stays on the +1 side; a Gray code over the other n-1 spins
  // visits every unordered bipartition once, flipping one spin per step.
  Eigen::VectorXd y = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  Eigen::VectorXd qy = q * y;
  double quad = y.dot(qy);
  const double total = q.sum();

  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  double best = (total + quad) / 2.0;
  std::uint64_t best_code = 0;
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto flip = static_cast<Eigen::Index>(std::countr_zero(step));
    const double yi = y(flip);
    quad -= 4.0 * yi * (qy(flip) - q(flip, flip) * yi);
    qy -= 2.0 * yi * q.col(flip);
    y(flip) = -yi;
    const double value = (total + quad) / 2.0;
    if (value > best) {
      best = value;
      best_code = step ^ (step >> 1);
    }
  }

  std::vector<std::size_t> labels(n, 0);
  for (std::size_t v = 0; v + 1 < n; ++v) labels[v] = (best_code >> v) & 1U;
  ExactResult res;
  res.opt_partition = Partition(labels);
  res.opt_value = modularity(qm, res.opt_partition);
  res.enumerated = count;
  return res;
}

}  // namespace modkit
