#ifndef MSHELL_SHELLING_HPP
#define MSHELL_SHELLING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mshell/degree_vector.hpp"
#include "mshell/order_ideal.hpp"

namespace mshell {

/// A divisor interval [bottom, top]. Divisor intervals are direct products
/// of chains, so each one is an M-interval by construction.
struct ShellingInterval {
  Monomial bottom;
  Monomial top;

  bool operator==(const ShellingInterval&) const = default;
};

/// An ordered list of divisor intervals claimed to partition an order ideal
/// so that every prefix union is itself an order ideal and every interval
/// top is maximal in the ambient ideal.
struct MShelling {
  std::vector<ShellingInterval> intervals;

  bool operator==(const MShelling&) const = default;
};

enum class ShellingCheck {
  BottomDividesTop,
  TopsMaximal,
  IntervalsDisjoint,
  UnionCovers,
  PrefixesClosed,
};

std::string_view shelling_check_name(ShellingCheck check) noexcept;

struct ShellingFailure {
  ShellingCheck check = ShellingCheck::BottomDividesTop;
  /// Index of the offending interval (for PrefixesClosed, of the last
  /// interval in the offending prefix).
  std::size_t interval_index = 0;
  std::vector<Monomial> witnesses;
  std::string detail;
};

struct ShellingVerification {
  bool valid = false;
  /// Checks that passed, in execution order; all five when valid.
  std::vector<ShellingCheck> passed;
  std::optional<ShellingFailure> failure;
};

/// Runs the five M-shelling checks in order and reports the first failure:
/// (1) each bottom divides its top, (2) each top is maximal in g,
/// (3) interval member sets are pairwise disjoint, (4) their union is
/// exactly g, (5) every prefix union is downward closed. Purity of g is
/// deliberately not required. Throws DimensionError on arity mismatches.
ShellingVerification verify_m_shelling(const OrderIdeal& g, const MShelling& s);

/// Constructs an M-shelling of a discrete polymatroid recursively: a single
/// maximal element m yields the lone interval [1, m]; otherwise the members
/// are split at the top power of the last variable on which two maximal
/// elements disagree, both parts are shelled, and the second part's
/// intervals are shifted back up by that power. Throws DomainError when g is
/// not a discrete polymatroid (naming the exchange failure) and
/// InvariantError if a recursion step produces a part that is not a strictly
/// smaller discrete polymatroid.
MShelling shell_polymatroid(const OrderIdeal& g);

inline constexpr std::size_t kDefaultOracleCap = 200;

/// Independent backtracking oracle: peels intervals off the end of a
/// candidate order, trying every still-present ambient-maximal top and every
/// bottom below it in graded-lex order, and keeping a removal only when the
/// remainder stays downward closed. Returns the first shelling found, in
/// forward order, or nullopt after an exhaustive search. Requires a pure
/// ideal (DomainError) of at most member_cap members (SizeError).
std::optional<MShelling> is_m_shellable_bruteforce(const OrderIdeal& g,
                                                   std::size_t member_cap = kDefaultOracleCap);

/// Entry i counts interval members of total degree i, summed over all
/// intervals; equals the ambient degree sequence whenever s partitions the
/// ideal. Throws DomainError if s is empty or an interval is degenerate.
DegreeVector shelling_degree_polynomial(const MShelling& s);

}  // namespace mshell

#endif  // MSHELL_SHELLING_HPP
