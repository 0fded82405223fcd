#include "mshell/hvector.hpp"

#include <functional>
#include <string>

#include "combinations.hpp"
#include "mshell/errors.hpp"
#include "mshell/polymatroid.hpp"

namespace mshell {

namespace {

std::int64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * static_cast<std::int64_t>(n - k + i) / static_cast<std::int64_t>(i);
  }
  return result;
}

// Substitutes y + shift into a descending-power coefficient list.
DegreeVector shift_variable(const DegreeVector& coefficients, int shift) {
  const std::size_t d = coefficients.size() - 1;
  DegreeVector out = DegreeVector::zeros(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    // c_i (y + shift)^(d-i) contributes to every lower power
    std::int64_t power = 1;
    for (std::size_t k = i; k <= d; ++k) {
      out[k] += coefficients[i] * binomial(d - i, k - i) * power;
      power *= shift;
    }
  }
  return out;
}

}  // namespace

DegreeVector f_to_h(const DegreeVector& f) {
  if (f.empty()) {
    throw DomainError("f_to_h: empty coefficient list");
  }
  if (f[0] != 1) {
    throw DomainError("f_to_h: leading entry must be 1, got " + std::to_string(f[0]));
  }
  return shift_variable(f, -1);
}

DegreeVector h_to_f(const DegreeVector& h) {
  if (h.empty()) {
    throw DomainError("h_to_f: empty coefficient list");
  }
  return shift_variable(h, +1);
}

std::int64_t evaluate_descending(const DegreeVector& coefficients, std::int64_t y) {
  std::int64_t value = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    value = value * y + coefficients[i];
  }
  return value;
}

std::string_view search_status_name(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

void validate_bounds(const SearchBounds& bounds) {
  if (bounds.max_variables < 1 || bounds.max_nodes == 0) {
    throw DomainError("SearchBounds: max_variables and max_nodes must be positive");
  }
}

// Core generator-antichain search shared by the three witness finders. The
// accept callback applies the extra per-ideal filter and may record
// artifacts (the shellable search stores the oracle's shelling).
IdealWitness search_for_degree_sequence(const DegreeVector& h_raw, const SearchBounds& bounds,
                                        const std::function<bool(const OrderIdeal&)>& accept) {
  validate_bounds(bounds);
  const DegreeVector h = h_raw.normalized();
  IdealWitness result;

  if (h.empty() || h[0] != 1) return result;  // Absent: every nonempty ideal contains 1
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0) return result;  // Absent: entries count monomials
  }
  if (h.size() == 1) {
    OrderIdeal unit = OrderIdeal::from_generators(1, {Monomial::one(1)});
    result.nodes_used = 1;
    if (accept(unit)) {
      result.status = SearchStatus::Found;
      result.ideal = std::move(unit);
    }
    return result;
  }
  // A degree-d member forces a degree-1 divisor, so h[1] = 0 admits nothing.
  if (h[1] == 0) return result;
  if (h[1] > bounds.max_variables) {
    // A witness uses exactly h[1] variables; searching fewer can never
    // complete, so the bound makes the outcome inconclusive.
    result.status = SearchStatus::Inconclusive;
    return result;
  }

  const int variables = static_cast<int>(h[1]);
  const std::size_t d = h.size() - 1;
  // Every degree-d member of a matching ideal is maximal, hence a generator.
  const std::int64_t generator_count = h[h.size() - 1];
  const std::int64_t member_target = h.sum();
  const std::vector<Monomial> pool = monomials_of_degree(variables, static_cast<int>(d));
  if (static_cast<std::size_t>(generator_count) > pool.size()) return result;  // Absent

  std::vector<std::size_t> idx =
      detail::first_combination(static_cast<std::size_t>(generator_count));
  do {
    if (result.nodes_used == bounds.max_nodes) {
      result.status = SearchStatus::Inconclusive;
      return result;
    }
    ++result.nodes_used;
    std::vector<Monomial> generators;
    generators.reserve(idx.size());
    for (std::size_t p : idx) generators.push_back(pool[p]);
    // candidates whose closure overshoots the member total cannot match
    auto ideal = OrderIdeal::try_from_generators(variables, generators,
                                                 static_cast<std::size_t>(member_target));
    if (!ideal) continue;
    if (ideal->degree_sequence() != h) continue;
    if (!accept(*ideal)) continue;
    result.status = SearchStatus::Found;
    result.ideal = std::move(*ideal);
    return result;
  } while (detail::next_combination(idx, pool.size()));

  return result;
}

}  // namespace

IdealWitness find_pure_order_ideal_witness(const DegreeVector& h, const SearchBounds& bounds) {
  // matching candidates are generated by equal-degree maximal elements, so
  // purity is automatic and no extra filter is needed
  return search_for_degree_sequence(h, bounds, [](const OrderIdeal&) { return true; });
}

IdealWitness find_pm_witness(const DegreeVector& h, const SearchBounds& bounds) {
  return search_for_degree_sequence(
      h, bounds, [](const OrderIdeal& g) { return is_discrete_polymatroid(g).holds; });
}

ShellableWitness find_shellable_witness(const DegreeVector& h, const SearchBounds& bounds,
                                        std::size_t oracle_cap) {
  validate_bounds(bounds);
  const DegreeVector hn = h.normalized();
  if (!hn.empty() && hn[0] == 1 && hn.sum() > 0 &&
      static_cast<std::uint64_t>(hn.sum()) > oracle_cap) {
    // every candidate has exactly sum(h) members, none can be run through
    // the oracle
    return ShellableWitness{SearchStatus::Inconclusive, std::nullopt, std::nullopt, 0};
  }
  std::optional<MShelling> shelling;
  IdealWitness inner =
      search_for_degree_sequence(h, bounds, [&shelling, oracle_cap](const OrderIdeal& g) {
        auto found = is_m_shellable_bruteforce(g, oracle_cap);
        if (!found) return false;
        shelling = std::move(found);
        return true;
      });
  return ShellableWitness{inner.status, std::move(inner.ideal), std::move(shelling),
                          inner.nodes_used};
}

}  // namespace mshell
