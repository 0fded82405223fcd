#ifndef MSHELL_DEGREE_VECTOR_HPP
#define MSHELL_DEGREE_VECTOR_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace mshell {

/// Integer sequence indexed from 0. Degree sequences of order ideals use it
/// with entry i counting members of total degree i (trailing entry nonzero by
/// construction); the f/h transforms use it as a coefficient list in the
/// descending-power convention, where trailing zeros are meaningful and, for
/// inputs that are not actual face counts, entries may go negative.
class DegreeVector {
public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<std::int64_t> entries)
      : entries_(std::move(entries)) {}

  static DegreeVector zeros(std::size_t length) {
    return DegreeVector(std::vector<std::int64_t>(length, 0));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::int64_t sum() const noexcept;

  /// Copy with trailing zero entries removed; may be empty.
  DegreeVector normalized() const;

  bool operator==(const DegreeVector&) const = default;

private:
  std::vector<std::int64_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const DegreeVector& v);

}  // namespace mshell

#endif  // MSHELL_DEGREE_VECTOR_HPP
