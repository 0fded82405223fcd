#ifndef MSHELL_HVECTOR_HPP
#define MSHELL_HVECTOR_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "mshell/degree_vector.hpp"
#include "mshell/order_ideal.hpp"
#include "mshell/shelling.hpp"

namespace mshell {

/// f- and h-coefficient lists follow the descending-power convention: a list
/// (c_0, ..., c_d) stands for the polynomial sum of c_i * y^(d-i). The
/// transforms substitute y-1 (resp. y+1) with exact integer arithmetic, so
/// they are mutually inverse on the nose.
DegreeVector f_to_h(const DegreeVector& f);
DegreeVector h_to_f(const DegreeVector& h);

/// Evaluates a descending-power coefficient list at an integer point.
std::int64_t evaluate_descending(const DegreeVector& coefficients, std::int64_t y);

struct SearchBounds {
  int max_variables = 8;
  std::uint64_t max_nodes = 1'000'000;
};

enum class SearchStatus {
  Found,
  /// The bounded search completed without finding a witness, which proves
  /// that none exists.
  Absent,
  /// The node budget ran out, or a cap prevented the search from being
  /// exhaustive; nothing is proved.
  Inconclusive,
};

std::string_view search_status_name(SearchStatus status) noexcept;

struct IdealWitness {
  SearchStatus status = SearchStatus::Absent;
  std::optional<OrderIdeal> ideal;
  std::uint64_t nodes_used = 0;
};

struct ShellableWitness {
  SearchStatus status = SearchStatus::Absent;
  std::optional<OrderIdeal> ideal;
  std::optional<MShelling> shelling;
  std::uint64_t nodes_used = 0;
};

/// Searches for a pure order ideal whose degree sequence equals h (read up
/// to trailing zeros). Any such ideal touches exactly h[1] variables and has
/// exactly h[d] generators, all of degree d, so the search runs over
/// generator antichains of that exact shape in graded-lex order and is
/// exhaustive unless a bound interferes: h[1] above max_variables or an
/// exhausted node budget yield Inconclusive, never Absent.
IdealWitness find_pure_order_ideal_witness(const DegreeVector& h, const SearchBounds& bounds);

/// Same search with candidates additionally filtered through
/// is_discrete_polymatroid.
IdealWitness find_pm_witness(const DegreeVector& h, const SearchBounds& bounds);

/// Same search filtered through the brute-force shellability oracle;
/// returns the oracle's shelling along with the ideal. Candidate ideals
/// larger than oracle_cap make the search Inconclusive.
ShellableWitness find_shellable_witness(const DegreeVector& h, const SearchBounds& bounds,
                                        std::size_t oracle_cap = kDefaultOracleCap);

}  // namespace mshell

#endif  // MSHELL_HVECTOR_HPP
