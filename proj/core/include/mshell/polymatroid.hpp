#ifndef MSHELL_POLYMATROID_HPP
#define MSHELL_POLYMATROID_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mshell/order_ideal.hpp"

namespace mshell {

/// Largest number of candidate generators enumerate_discrete_polymatroids is
/// willing to work with.
inline constexpr std::size_t kEnumerationMonomialBound = 10'000;

/// A pair of maximal elements and a 0-based variable index var_index such
/// that m has a strictly larger exponent at var_index than m_prime, yet no
/// variable j with a strictly smaller exponent yields a member when one copy
/// of x_{var_index} in m is exchanged for x_j.
struct ExchangeFailure {
  Monomial m;
  Monomial m_prime;
  int var_index = 0;

  bool operator==(const ExchangeFailure&) const = default;
};

struct PolymatroidReport {
  bool holds = false;
  /// Present exactly when holds is false; the grlex-first failing triple.
  std::optional<ExchangeFailure> failure;
};

/// Checks the single-step exchange property between all ordered pairs of
/// distinct maximal elements. An ideal passing the scan is automatically
/// pure: an impure ideal always has a maximal pair for which the exchange
/// walk toward the lower-degree element gets stuck. Throws DomainError on
/// the empty ideal.
PolymatroidReport is_discrete_polymatroid(const OrderIdeal& g);

/// Streams every discrete polymatroid on `variables` variables generated by
/// a nonempty antichain of degree-`degree` monomials, ordered by generator
/// count and then lexicographically in graded-lex generator order. Stops
/// after max_count ideals or when the callback returns false; returns the
/// number of ideals yielded. Throws SizeError when the degree-`degree`
/// monomial pool exceeds kEnumerationMonomialBound.
std::size_t enumerate_discrete_polymatroids(int variables, int degree, std::size_t max_count,
                                            const std::function<bool(const OrderIdeal&)>& yield);

/// Convenience wrapper collecting the stream into a vector.
std::vector<OrderIdeal> collect_discrete_polymatroids(int variables, int degree,
                                                      std::size_t max_count);

}  // namespace mshell

#endif  // MSHELL_POLYMATROID_HPP
