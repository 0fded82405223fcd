#include "mshell/order_ideal.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mshell/errors.hpp"

namespace mshell {

namespace {

void check_arity(int variables, const Monomial& m, const char* where) {
  if (m.variables() != variables) {
    throw DimensionError(std::string(where) + ": monomial arity " +
                         std::to_string(m.variables()) + " does not match ideal arity " +
                         std::to_string(variables));
  }
}

// Every member of a downward-closed set is reachable from some generator by
// single-exponent decrements, so a member m is maximal iff no m + e_i is a
// member.
std::vector<Monomial> compute_maximal(int variables, const std::vector<Monomial>& members) {
  std::vector<Monomial> maximal;
  for (const Monomial& m : members) {
    bool is_max = true;
    for (int i = 0; i < variables && is_max; ++i) {
      std::vector<int> up(m.exponents());
      ++up[static_cast<std::size_t>(i)];
      if (std::binary_search(members.begin(), members.end(), Monomial(std::move(up)),
                             grlex_less)) {
        is_max = false;
      }
    }
    if (is_max) maximal.push_back(m);
  }
  return maximal;
}

}  // namespace

std::optional<OrderIdeal> OrderIdeal::try_from_generators(
    int variables, const std::vector<Monomial>& generators, std::size_t closure_cap) {
  if (variables < 1) {
    throw DimensionError("OrderIdeal: at least one variable is required");
  }
  std::set<Monomial> closure;
  std::vector<Monomial> stack;
  for (const Monomial& g : generators) {
    check_arity(variables, g, "OrderIdeal::from_generators");
    if (closure.insert(g).second) {
      if (closure.size() > closure_cap) return std::nullopt;
      stack.push_back(g);
    }
  }
  while (!stack.empty()) {
    const Monomial m = std::move(stack.back());
    stack.pop_back();
    for (int i = 0; i < variables; ++i) {
      if (m.exponents()[static_cast<std::size_t>(i)] == 0) continue;
      std::vector<int> down(m.exponents());
      --down[static_cast<std::size_t>(i)];
      Monomial child(std::move(down));
      if (closure.insert(child).second) {
        if (closure.size() > closure_cap) return std::nullopt;
        stack.push_back(std::move(child));
      }
    }
  }
  std::vector<Monomial> members(closure.begin(), closure.end());
  std::vector<Monomial> maximal = compute_maximal(variables, members);
  return OrderIdeal(variables, std::move(members), std::move(maximal));
}

OrderIdeal OrderIdeal::from_generators(int variables, const std::vector<Monomial>& generators,
                                       std::size_t closure_cap) {
  auto ideal = try_from_generators(variables, generators, closure_cap);
  if (!ideal) {
    throw SizeError("OrderIdeal::from_generators: closure needs more than " +
                    std::to_string(closure_cap) + " members (cap " +
                    std::to_string(closure_cap) + " exceeded)");
  }
  return std::move(*ideal);
}

OrderIdeal OrderIdeal::from_members(int variables, std::vector<Monomial> members) {
  if (variables < 1) {
    throw DimensionError("OrderIdeal: at least one variable is required");
  }
  for (const Monomial& m : members) {
    check_arity(variables, m, "OrderIdeal::from_members");
  }
  std::sort(members.begin(), members.end(), grlex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const Monomial& m : members) {
    for (int i = 0; i < variables; ++i) {
      if (m.exponents()[static_cast<std::size_t>(i)] == 0) continue;
      std::vector<int> down(m.exponents());
      --down[static_cast<std::size_t>(i)];
      Monomial divisor(std::move(down));
      if (!std::binary_search(members.begin(), members.end(), divisor, grlex_less)) {
        throw DomainError("OrderIdeal::from_members: set is not downward closed; " +
                          to_string(m) + " is present but its divisor " + to_string(divisor) +
                          " is not");
      }
    }
  }
  std::vector<Monomial> maximal = compute_maximal(variables, members);
  return OrderIdeal(variables, std::move(members), std::move(maximal));
}

bool OrderIdeal::contains(const Monomial& m) const {
  check_arity(variables_, m, "OrderIdeal::contains");
  return std::binary_search(members_.begin(), members_.end(), m, grlex_less);
}

bool OrderIdeal::is_pure() const {
  if (empty()) {
    throw DomainError("OrderIdeal::is_pure: empty ideal");
  }
  const int degree = maximal_.front().degree();
  for (const Monomial& m : maximal_) {
    if (m.degree() != degree) return false;
  }
  return true;
}

DegreeVector OrderIdeal::degree_sequence() const {
  if (empty()) return DegreeVector();
  // members_ is sorted by degree first, so the last member has the top degree
  const int top = members_.back().degree();
  DegreeVector h = DegreeVector::zeros(static_cast<std::size_t>(top) + 1);
  for (const Monomial& m : members_) {
    ++h[static_cast<std::size_t>(m.degree())];
  }
  return h;
}

std::vector<Monomial> OrderIdeal::interval_members(const Monomial& bottom,
                                                   const Monomial& top) const {
  check_arity(variables_, bottom, "OrderIdeal::interval_members");
  check_arity(variables_, top, "OrderIdeal::interval_members");
  if (!contains(top)) {
    throw DomainError("OrderIdeal::interval_members: " + to_string(top) + " is not a member");
  }
  return divisor_interval(bottom, top);
}

std::vector<Monomial> divisor_interval(const Monomial& bottom, const Monomial& top) {
  if (!bottom.divides(top)) {
    throw DomainError("divisor_interval: " + to_string(bottom) + " does not divide " +
                      to_string(top));
  }
  std::vector<Monomial> out;
  std::vector<int> exps(bottom.exponents());
  const int n = bottom.variables();
  for (;;) {
    out.emplace_back(exps);
    int slot = n - 1;
    while (slot >= 0 && exps[static_cast<std::size_t>(slot)] ==
                            top.exponents()[static_cast<std::size_t>(slot)]) {
      exps[static_cast<std::size_t>(slot)] = bottom.exponents()[static_cast<std::size_t>(slot)];
      --slot;
    }
    if (slot < 0) break;
    ++exps[static_cast<std::size_t>(slot)];
  }
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

}  // namespace mshell
