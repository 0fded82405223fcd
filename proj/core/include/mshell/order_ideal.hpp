#ifndef MSHELL_ORDER_IDEAL_HPP
#define MSHELL_ORDER_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mshell/degree_vector.hpp"
#include "mshell/monomial.hpp"

namespace mshell {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A finite set of monomials closed under taking divisors, with the maximal
/// elements cached. Members are stored explicitly in graded-lex order so that
/// every downstream computation iterates deterministically. Values are
/// immutable after construction and safe to share across threads.
class OrderIdeal {
public:
  /// Downward closure of the given generators. Throws SizeError once the
  /// closure would exceed closure_cap members.
  static OrderIdeal from_generators(int variables, const std::vector<Monomial>& generators,
                                    std::size_t closure_cap = kDefaultClosureCap);

  /// Like from_generators but reports cap overflow as nullopt instead of
  /// throwing; used by searches that probe many candidate generator sets.
  static std::optional<OrderIdeal> try_from_generators(int variables,
                                                       const std::vector<Monomial>& generators,
                                                       std::size_t closure_cap);

  /// Wraps an explicit member set. Throws DomainError if the set is not
  /// closed under taking divisors.
  static OrderIdeal from_members(int variables, std::vector<Monomial> members);

  int variables() const noexcept { return variables_; }
  const std::vector<Monomial>& members() const noexcept { return members_; }
  const std::vector<Monomial>& maximal_elements() const noexcept { return maximal_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(const Monomial& m) const;

  /// True iff all maximal elements share one degree. Throws DomainError on
  /// the empty ideal.
  bool is_pure() const;

  /// Entry i counts members of total degree i. Empty for the empty ideal.
  DegreeVector degree_sequence() const;

  /// The divisor interval [bottom, top] as a member list; requires
  /// bottom | top (DomainError) and top to be a member (DomainError).
  std::vector<Monomial> interval_members(const Monomial& bottom, const Monomial& top) const;

  bool operator==(const OrderIdeal& other) const {
    return variables_ == other.variables_ && members_ == other.members_;
  }

private:
  OrderIdeal(int variables, std::vector<Monomial> members, std::vector<Monomial> maximal)
      : variables_(variables), members_(std::move(members)), maximal_(std::move(maximal)) {}

  int variables_ = 0;
  std::vector<Monomial> members_;  // grlex-sorted
  std::vector<Monomial> maximal_;  // grlex-sorted subset of members_
};

/// All monomials m with bottom | m and m | top, in graded-lex order.
/// The count is always the product of (top_i - bottom_i + 1).
std::vector<Monomial> divisor_interval(const Monomial& bottom, const Monomial& top);

}  // namespace mshell

#endif  // MSHELL_ORDER_IDEAL_HPP
