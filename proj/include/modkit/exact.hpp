#pragma once

#include <cstddef>
#include <cstdint>

#include "modkit/modularity.hpp"

namespace modkit {

struct ExactResult {
  double opt_value = 0.0;
  Partition opt_partition;
  std::uint64_t enumerated = 0;
};

inline constexpr std::size_t kExactFullLimit = 12;
inline constexpr std::size_t kExactCutLimit = 20;

/// Bell number B(n) (saturates at UINT64_MAX).
std::uint64_t bell_number(std::size_t n);

/// Maximum modularity over all set partitions, by restricted-growth-string
/// enumeration. Throws std::invalid_argument when n > limit.
ExactResult exact_full(const QMatrix& qm, std::size_t limit = kExactFullLimit);

/// Maximum modularity over all 2^(n-1) unordered bipartitions, including
/// {V, {}}. Throws std::invalid_argument when n > limit.
ExactResult exact_cut(const QMatrix& qm, std::size_t limit = kExactCutLimit);

}  // namespace modkit
