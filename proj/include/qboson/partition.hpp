#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qboson {

/// Weakly decreasing tuple of naturals, trailing zeros kept explicitly.
///
/// The length is the particle number n; parts()[j] is the site occupied by
/// particle j. The empty partition is the unique element of Lambda_0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t j) const { return parts_[j]; }
  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& as_vector() const noexcept { return parts_; }

  /// Largest part, 0 for the empty partition.
  int max_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// lambda + e_j when it is still a partition, otherwise nullopt (j is 0-based).
  std::optional<Partition> raised(std::size_t j) const;
  /// lambda - e_j when it is still a partition, otherwise nullopt (j is 0-based).
  std::optional<Partition> lowered(std::size_t j) const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// m_l(lambda): number of parts equal to l.
std::size_t multiplicity(const Partition& lambda, int l);

/// beta*_l lambda: insert one part of size l.
Partition insert_part(const Partition& lambda, int l);

/// beta_l lambda: remove one part of size l. Throws part_absent_error when m_l = 0.
Partition delete_part(const Partition& lambda, int l);

/// All lambda in Lambda_n with lambda_1 <= max_part, in ascending lexicographic
/// order of the (weakly decreasing) tuples. Size is binomial(max_part + n, n).
std::vector<Partition> enumerate(std::size_t n, int max_part);

std::string to_string(const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

}  // namespace qboson
