#ifndef MSHELL_MONOMIAL_HPP
#define MSHELL_MONOMIAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mshell {

/// A monomial over a fixed variable set, stored as its exponent vector.
/// The ambient variable count is the vector length; the all-zeros vector is
/// the monomial 1. Exponents are non-negative and arity 0 is rejected.
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int variables);
  /// x_{var_index}^exponent with 0-based var_index.
  static Monomial power(int variables, int var_index, int exponent);

  int variables() const noexcept { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int exponent(int var_index) const;
  int degree() const noexcept;
  bool is_one() const noexcept;

  /// True iff *this divides other, i.e. exponents are componentwise <=.
  bool divides(const Monomial& other) const;
  /// Componentwise difference; requires divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const;
  /// Componentwise sum.
  Monomial times(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

private:
  std::vector<int> exponents_;
};

/// Graded lexicographic order: first by total degree, then lexicographically
/// on exponent vectors. Canonical iteration order throughout the library.
bool grlex_less(const Monomial& a, const Monomial& b) noexcept;

inline bool operator<(const Monomial& a, const Monomial& b) noexcept {
  return grlex_less(a, b);
}

/// All monomials of the given total degree, sorted in graded-lex order.
std::vector<Monomial> monomials_of_degree(int variables, int degree);

/// Readable form such as "x1*x3^2"; the unit monomial prints as "1".
std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace mshell

#endif  // MSHELL_MONOMIAL_HPP
