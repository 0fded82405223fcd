#include "mshell/degree_vector.hpp"

#include <numeric>
#include <ostream>

namespace mshell {

std::int64_t DegreeVector::sum() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

DegreeVector DegreeVector::normalized() const {
  std::vector<std::int64_t> out(entries_);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return DegreeVector(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const DegreeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ", ";
    os << v[i];
  }
  return os << ')';
}

}  // namespace mshell
