#include "mshell/monomial.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "mshell/errors.hpp"

namespace mshell {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) {
    throw DimensionError("Monomial: at least one variable is required");
  }
  for (int e : exponents_) {
    if (e < 0) {
      throw DomainError("Monomial: exponents must be non-negative");
    }
  }
}

Monomial Monomial::one(int variables) {
  if (variables < 1) {
    throw DimensionError("Monomial::one: at least one variable is required");
  }
  return Monomial(std::vector<int>(static_cast<std::size_t>(variables), 0));
}

Monomial Monomial::power(int variables, int var_index, int exponent) {
  if (variables < 1) {
    throw DimensionError("Monomial::power: at least one variable is required");
  }
  if (var_index < 0 || var_index >= variables) {
    throw DimensionError("Monomial::power: variable index out of range");
  }
  if (exponent < 0) {
    throw DomainError("Monomial::power: exponent must be non-negative");
  }
  std::vector<int> exps(static_cast<std::size_t>(variables), 0);
  exps[static_cast<std::size_t>(var_index)] = exponent;
  return Monomial(std::move(exps));
}

int Monomial::exponent(int var_index) const {
  if (var_index < 0 || var_index >= variables()) {
    throw DimensionError("Monomial::exponent: variable index out of range");
  }
  return exponents_[static_cast<std::size_t>(var_index)];
}

int Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::is_one() const noexcept {
  for (int e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  if (variables() != other.variables()) {
    throw DimensionError("Monomial::divides: arity mismatch");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw DomainError("Monomial::divided_by: " + to_string(divisor) +
                      " does not divide " + to_string(*this));
  }
  std::vector<int> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps[i] -= divisor.exponents_[i];
  }
  return Monomial(std::move(exps));
}

Monomial Monomial::times(const Monomial& other) const {
  if (variables() != other.variables()) {
    throw DimensionError("Monomial::times: arity mismatch");
  }
  std::vector<int> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps[i] += other.exponents_[i];
  }
  return Monomial(std::move(exps));
}

bool grlex_less(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

namespace {

void emit_monomials(int variables, int slot, int remaining, std::vector<int>& exps,
                    std::vector<Monomial>& out) {
  if (slot == variables - 1) {
    exps[static_cast<std::size_t>(slot)] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    exps[static_cast<std::size_t>(slot)] = e;
    emit_monomials(variables, slot + 1, remaining - e, exps, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int variables, int degree) {
  if (variables < 1) {
    throw DimensionError("monomials_of_degree: at least one variable is required");
  }
  if (degree < 0) {
    throw DomainError("monomials_of_degree: degree must be non-negative");
  }
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(variables), 0);
  emit_monomials(variables, 0, degree, exps, out);
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.variables(); ++i) {
    const int e = m.exponents()[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (e > 1) os << '^' << e;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << to_string(m);
}

}  // namespace mshell
