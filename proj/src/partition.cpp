#include "qboson/partition.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qboson/errors.hpp"

namespace qboson {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (j > 0 && parts[j] > parts[j - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(parts_); }

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

std::optional<Partition> Partition::raised(std::size_t j) const {
  if (j >= parts_.size()) return std::nullopt;
  if (j > 0 && parts_[j - 1] == parts_[j]) return std::nullopt;
  Partition out = *this;
  ++out.parts_[j];
  return out;
}

std::optional<Partition> Partition::lowered(std::size_t j) const {
  if (j >= parts_.size() || parts_[j] == 0) return std::nullopt;
  if (j + 1 < parts_.size() && parts_[j + 1] == parts_[j]) return std::nullopt;
  Partition out = *this;
  --out.parts_[j];
  return out;
}

std::size_t multiplicity(const Partition& lambda, int l) {
  const auto parts = lambda.parts();
  return static_cast<std::size_t>(std::count(parts.begin(), parts.end(), l));
}

Partition insert_part(const Partition& lambda, int l) {
  if (l < 0) throw std::invalid_argument("part size must be non-negative");
  std::vector<int> parts = lambda.as_vector();
  // first position whose part is smaller than l
  auto pos = std::find_if(parts.begin(), parts.end(), [l](int p) { return p < l; });
  parts.insert(pos, l);
  return Partition(std::move(parts));
}

Partition delete_part(const Partition& lambda, int l) {
  std::vector<int> parts = lambda.as_vector();
  auto pos = std::find(parts.begin(), parts.end(), l);
  if (pos == parts.end())
    throw part_absent_error("part " + std::to_string(l) + " absent from " + to_string(lambda));
  parts.erase(pos);
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate(std::size_t n, int max_part) {
  if (max_part < 0) throw std::invalid_argument("part bound must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current(n);
  std::function<void(std::size_t, int)> fill = [&](std::size_t j, int bound) {
    if (j == n) {
      out.emplace_back(current);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      current[j] = v;
      fill(j + 1, v);
    }
  };
  fill(0, max_part);
  return out;
}

std::string to_string(const Partition& lambda) {
  std::ostringstream os;
  os << lambda;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  os << '(';
  for (std::size_t j = 0; j < lambda.length(); ++j) {
    if (j) os << ',';
    os << lambda[j];
  }
  return os << ')';
}

}  // namespace qboson
