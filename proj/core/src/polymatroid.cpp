#include "mshell/polymatroid.hpp"

#include <string>

#include "combinations.hpp"
#include "mshell/errors.hpp"

namespace mshell {

PolymatroidReport is_discrete_polymatroid(const OrderIdeal& g) {
  if (g.empty()) {
    throw DomainError("is_discrete_polymatroid: empty ideal");
  }
  const int n = g.variables();
  const auto& maximal = g.maximal_elements();
  for (const Monomial& m : maximal) {
    for (const Monomial& m_prime : maximal) {
      if (m == m_prime) continue;
      for (int i = 0; i < n; ++i) {
        if (m.exponents()[static_cast<std::size_t>(i)] <=
            m_prime.exponents()[static_cast<std::size_t>(i)]) {
          continue;
        }
        bool exchangeable = false;
        for (int j = 0; j < n && !exchangeable; ++j) {
          if (m.exponents()[static_cast<std::size_t>(j)] >=
              m_prime.exponents()[static_cast<std::size_t>(j)]) {
            continue;
          }
          std::vector<int> exps(m.exponents());
          --exps[static_cast<std::size_t>(i)];
          ++exps[static_cast<std::size_t>(j)];
          if (g.contains(Monomial(std::move(exps)))) exchangeable = true;
        }
        if (!exchangeable) {
          return PolymatroidReport{false, ExchangeFailure{m, m_prime, i}};
        }
      }
    }
  }
  return PolymatroidReport{true, std::nullopt};
}

std::size_t enumerate_discrete_polymatroids(
    int variables, int degree, std::size_t max_count,
    const std::function<bool(const OrderIdeal&)>& yield) {
  const std::vector<Monomial> pool = monomials_of_degree(variables, degree);
  if (pool.size() > kEnumerationMonomialBound) {
    throw SizeError("enumerate_discrete_polymatroids: " + std::to_string(pool.size()) +
                    " degree-" + std::to_string(degree) + " monomials exceed the bound of " +
                    std::to_string(kEnumerationMonomialBound));
  }
  std::size_t yielded = 0;
  if (max_count == 0) return yielded;
  // Equal-degree monomials never divide one another, so every nonempty
  // subset of the pool is an antichain.
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    std::vector<std::size_t> idx = detail::first_combination(k);
    do {
      std::vector<Monomial> generators;
      generators.reserve(k);
      for (std::size_t p : idx) generators.push_back(pool[p]);
      OrderIdeal ideal = OrderIdeal::from_generators(variables, generators);
      if (!is_discrete_polymatroid(ideal).holds) continue;
      ++yielded;
      if (!yield(ideal) || yielded == max_count) return yielded;
    } while (detail::next_combination(idx, pool.size()));
  }
  return yielded;
}

std::vector<OrderIdeal> collect_discrete_polymatroids(int variables, int degree,
                                                      std::size_t max_count) {
  std::vector<OrderIdeal> out;
  enumerate_discrete_polymatroids(variables, degree, max_count, [&](const OrderIdeal& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace mshell
