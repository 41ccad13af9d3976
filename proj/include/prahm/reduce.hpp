#pragma once
// Deterministic recursive pairwise summation used by every grid reduction, so
// that sums depend only on operand order and never on thread scheduling.
#include <cstddef>
#include <numeric>

namespace prahm {

inline double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 32) return std::accumulate(data, data + n, 0.0);
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

template <typename Container>
double pairwise_sum(const Container& c) {
  return pairwise_sum(c.data(), c.size());
}

}  // namespace prahm
