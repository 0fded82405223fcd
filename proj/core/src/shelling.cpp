#include "mshell/shelling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mshell/errors.hpp"
#include "mshell/polymatroid.hpp"

namespace mshell {

std::string_view shelling_check_name(ShellingCheck check) noexcept {
  switch (check) {
    case ShellingCheck::BottomDividesTop: return "bottom_divides_top";
    case ShellingCheck::TopsMaximal: return "tops_maximal";
    case ShellingCheck::IntervalsDisjoint: return "intervals_disjoint";
    case ShellingCheck::UnionCovers: return "union_covers";
    case ShellingCheck::PrefixesClosed: return "prefixes_closed";
  }
  return "unknown";
}

namespace {

ShellingVerification fail(std::vector<ShellingCheck> passed, ShellingFailure failure) {
  ShellingVerification v;
  v.valid = false;
  v.passed = std::move(passed);
  v.failure = std::move(failure);
  return v;
}

bool closed_under_immediate_divisors(const std::set<Monomial>& members, int variables,
                                     const Monomial& m, Monomial* missing) {
  for (int i = 0; i < variables; ++i) {
    if (m.exponents()[static_cast<std::size_t>(i)] == 0) continue;
    std::vector<int> down(m.exponents());
    --down[static_cast<std::size_t>(i)];
    Monomial divisor(std::move(down));
    if (!members.contains(divisor)) {
      if (missing) *missing = std::move(divisor);
      return false;
    }
  }
  return true;
}

bool is_downward_closed(const std::set<Monomial>& members, int variables) {
  for (const Monomial& m : members) {
    if (!closed_under_immediate_divisors(members, variables, m, nullptr)) return false;
  }
  return true;
}

}  // namespace

ShellingVerification verify_m_shelling(const OrderIdeal& g, const MShelling& s) {
  const int n = g.variables();
  for (const ShellingInterval& iv : s.intervals) {
    if (iv.bottom.variables() != n || iv.top.variables() != n) {
      throw DimensionError("verify_m_shelling: interval arity does not match the ideal");
    }
  }

  std::vector<ShellingCheck> passed;

  for (std::size_t i = 0; i < s.intervals.size(); ++i) {
    const auto& iv = s.intervals[i];
    if (!iv.bottom.divides(iv.top)) {
      return fail(passed, {ShellingCheck::BottomDividesTop, i,
                           {iv.bottom, iv.top},
                           "bottom " + to_string(iv.bottom) + " does not divide top " +
                               to_string(iv.top)});
    }
  }
  passed.push_back(ShellingCheck::BottomDividesTop);

  const auto& maximal = g.maximal_elements();
  for (std::size_t i = 0; i < s.intervals.size(); ++i) {
    const auto& top = s.intervals[i].top;
    if (!std::binary_search(maximal.begin(), maximal.end(), top, grlex_less)) {
      return fail(passed, {ShellingCheck::TopsMaximal, i, {top},
                           "top " + to_string(top) + " is not maximal in the ideal"});
    }
  }
  passed.push_back(ShellingCheck::TopsMaximal);

  std::vector<std::vector<Monomial>> interval_sets;
  interval_sets.reserve(s.intervals.size());
  for (const auto& iv : s.intervals) {
    interval_sets.push_back(divisor_interval(iv.bottom, iv.top));
  }

  std::map<Monomial, std::size_t> owner;
  for (std::size_t i = 0; i < interval_sets.size(); ++i) {
    for (const Monomial& m : interval_sets[i]) {
      auto [it, inserted] = owner.emplace(m, i);
      if (!inserted) {
        return fail(passed, {ShellingCheck::IntervalsDisjoint, i, {m},
                             to_string(m) + " lies in intervals " + std::to_string(it->second) +
                                 " and " + std::to_string(i)});
      }
    }
  }
  passed.push_back(ShellingCheck::IntervalsDisjoint);

  // Tops are members, so every interval is contained in the ideal; after the
  // disjointness check equality of sizes pins the union down to g itself.
  if (owner.size() != g.size()) {
    for (const Monomial& m : g.members()) {
      if (!owner.contains(m)) {
        return fail(passed, {ShellingCheck::UnionCovers, s.intervals.size(), {m},
                             "member " + to_string(m) + " is not covered by any interval"});
      }
    }
  }
  passed.push_back(ShellingCheck::UnionCovers);

  std::set<Monomial> prefix;
  for (std::size_t i = 0; i < interval_sets.size(); ++i) {
    for (const Monomial& m : interval_sets[i]) prefix.insert(m);
    for (const Monomial& m : interval_sets[i]) {
      Monomial missing = m;
      if (!closed_under_immediate_divisors(prefix, n, m, &missing)) {
        return fail(passed, {ShellingCheck::PrefixesClosed, i, {m, missing},
                             "prefix through interval " + std::to_string(i) + " contains " +
                                 to_string(m) + " but not its divisor " + to_string(missing)});
      }
    }
  }
  passed.push_back(ShellingCheck::PrefixesClosed);

  ShellingVerification v;
  v.valid = true;
  v.passed = std::move(passed);
  return v;
}

namespace {

OrderIdeal part_as_ideal(int variables, std::vector<Monomial> members, const char* name) {
  try {
    return OrderIdeal::from_members(variables, std::move(members));
  } catch (const DomainError& e) {
    throw InvariantError(std::string("shell_polymatroid: ") + name +
                         " is not an order ideal: " + e.what());
  }
}

void check_part_is_smaller_polymatroid(const OrderIdeal& part, std::size_t parent_maximal,
                                       const char* name) {
  const PolymatroidReport report = is_discrete_polymatroid(part);
  if (!report.holds) {
    std::ostringstream os;
    os << "shell_polymatroid: " << name << " is not a discrete polymatroid; exchange fails at (m="
       << to_string(report.failure->m) << ", m'=" << to_string(report.failure->m_prime)
       << ", var=" << report.failure->var_index << ")";
    throw InvariantError(os.str());
  }
  if (part.maximal_elements().size() >= parent_maximal) {
    throw InvariantError(std::string("shell_polymatroid: ") + name +
                         " does not have strictly fewer maximal elements than its parent");
  }
}

MShelling shell_recursive(const OrderIdeal& g) {
  const int n = g.variables();
  const auto& maximal = g.maximal_elements();
  if (maximal.size() == 1) {
    return MShelling{{ShellingInterval{Monomial::one(n), maximal.front()}}};
  }

  // Split at the largest variable index on which two maximal elements
  // disagree, at the top power attained there.
  int split_var = -1;
  for (int i = n - 1; i >= 0 && split_var < 0; --i) {
    for (std::size_t t = 1; t < maximal.size(); ++t) {
      if (maximal[t].exponents()[static_cast<std::size_t>(i)] !=
          maximal[0].exponents()[static_cast<std::size_t>(i)]) {
        split_var = i;
        break;
      }
    }
  }
  if (split_var < 0) {
    throw InvariantError("shell_polymatroid: distinct maximal elements share all exponents");
  }
  int top_power = 0;
  for (const Monomial& m : maximal) {
    top_power = std::max(top_power, m.exponents()[static_cast<std::size_t>(split_var)]);
  }

  std::vector<Monomial> low_members;      // members not divisible by x_split^top_power
  std::vector<Monomial> shifted_members;  // the rest, divided by x_split^top_power
  for (const Monomial& m : g.members()) {
    if (m.exponents()[static_cast<std::size_t>(split_var)] < top_power) {
      low_members.push_back(m);
    } else {
      std::vector<int> exps(m.exponents());
      exps[static_cast<std::size_t>(split_var)] -= top_power;
      shifted_members.emplace_back(std::move(exps));
    }
  }

  OrderIdeal low = part_as_ideal(n, std::move(low_members), "the low part");
  OrderIdeal shifted = part_as_ideal(n, std::move(shifted_members), "the quotient part");
  check_part_is_smaller_polymatroid(low, maximal.size(), "the low part");
  check_part_is_smaller_polymatroid(shifted, maximal.size(), "the quotient part");

  MShelling result = shell_recursive(low);
  const MShelling shifted_shelling = shell_recursive(shifted);
  const Monomial shift = Monomial::power(n, split_var, top_power);
  for (const ShellingInterval& iv : shifted_shelling.intervals) {
    result.intervals.push_back(ShellingInterval{iv.bottom.times(shift), iv.top.times(shift)});
  }
  return result;
}

}  // namespace

MShelling shell_polymatroid(const OrderIdeal& g) {
  const PolymatroidReport report = is_discrete_polymatroid(g);
  if (!report.holds) {
    std::ostringstream os;
    os << "shell_polymatroid: input is not a discrete polymatroid; exchange fails at (m="
       << to_string(report.failure->m) << ", m'=" << to_string(report.failure->m_prime)
       << ", var=" << report.failure->var_index << ")";
    throw DomainError(os.str());
  }
  return shell_recursive(g);
}

namespace {

// Peels the final interval of a candidate order: tries every ambient-maximal
// top still present and every bottom dividing it, removes the interval when
// the remainder stays downward closed, and recurses. Intervals are appended
// on the way out of the recursion, which yields forward order.
bool peel_last_interval(const OrderIdeal& g, std::set<Monomial>& remaining,
                        std::vector<ShellingInterval>& out) {
  if (remaining.empty()) return true;
  const int n = g.variables();
  for (const Monomial& top : g.maximal_elements()) {
    if (!remaining.contains(top)) continue;
    // remaining is downward closed, so every divisor of top is available
    for (const Monomial& bottom : divisor_interval(Monomial::one(n), top)) {
      const std::vector<Monomial> interval = divisor_interval(bottom, top);
      for (const Monomial& m : interval) remaining.erase(m);
      if (is_downward_closed(remaining, n) && peel_last_interval(g, remaining, out)) {
        out.push_back(ShellingInterval{bottom, top});
        return true;
      }
      remaining.insert(interval.begin(), interval.end());
    }
  }
  return false;
}

}  // namespace

std::optional<MShelling> is_m_shellable_bruteforce(const OrderIdeal& g, std::size_t member_cap) {
  if (!g.is_pure()) {
    throw DomainError("is_m_shellable_bruteforce: ideal is not pure");
  }
  if (g.size() > member_cap) {
    throw SizeError("is_m_shellable_bruteforce: " + std::to_string(g.size()) +
                    " members exceed the oracle cap of " + std::to_string(member_cap));
  }
  std::set<Monomial> remaining(g.members().begin(), g.members().end());
  std::vector<ShellingInterval> intervals;
  if (!peel_last_interval(g, remaining, intervals)) return std::nullopt;
  return MShelling{std::move(intervals)};
}

DegreeVector shelling_degree_polynomial(const MShelling& s) {
  if (s.intervals.empty()) {
    throw DomainError("shelling_degree_polynomial: empty shelling");
  }
  std::vector<std::int64_t> acc;
  for (const ShellingInterval& iv : s.intervals) {
    if (!iv.bottom.divides(iv.top)) {
      throw DomainError("shelling_degree_polynomial: bottom " + to_string(iv.bottom) +
                        " does not divide top " + to_string(iv.top));
    }
    // degree counts of [bottom, top]: a chain per variable, convolved, then
    // shifted up by deg(bottom)
    std::vector<std::int64_t> poly{1};
    for (int i = 0; i < iv.bottom.variables(); ++i) {
      const int range = iv.top.exponents()[static_cast<std::size_t>(i)] -
                        iv.bottom.exponents()[static_cast<std::size_t>(i)];
      std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(range), 0);
      for (std::size_t a = 0; a < poly.size(); ++a) {
        for (int b = 0; b <= range; ++b) {
          next[a + static_cast<std::size_t>(b)] += poly[a];
        }
      }
      poly = std::move(next);
    }
    const std::size_t shift = static_cast<std::size_t>(iv.bottom.degree());
    if (acc.size() < poly.size() + shift) acc.resize(poly.size() + shift, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) acc[d + shift] += poly[d];
  }
  return DegreeVector(std::move(acc));
}

}  // namespace mshell
