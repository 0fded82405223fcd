#ifndef MSHELL_SRC_COMBINATIONS_HPP
#define MSHELL_SRC_COMBINATIONS_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace mshell::detail {

// Fills idx with 0,1,...,k-1.
inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

// Advances a strictly increasing index vector over {0,...,pool_size-1} to the
// lexicographically next combination; returns false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t pool_size) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < pool_size) {
      ++idx[i];
      for (std::size_t t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace mshell::detail

#endif  // MSHELL_SRC_COMBINATIONS_HPP
