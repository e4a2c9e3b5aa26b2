#include "qboson/fock.hpp"

#include <algorithm>
#include <cmath>

#include "qboson/errors.hpp"

namespace qboson {

FockVector::FockVector(int grade) : grade_(grade) {
  if (grade < -1) throw std::invalid_argument("Fock grade must be >= -1");
}

FockVector FockVector::ket(const Partition& lambda, amplitude value) {
  FockVector f(static_cast<int>(lambda.length()));
  f.set(lambda, value);
  return f;
}

void FockVector::check_key(const Partition& lambda) const {
  if (static_cast<int>(lambda.length()) != grade_)
    throw grade_mismatch_error("partition " + to_string(lambda) + " does not belong to grade " +
                               std::to_string(grade_));
}

amplitude FockVector::operator()(const Partition& lambda) const {
  auto it = amps_.find(lambda);
  return it == amps_.end() ? amplitude{} : it->second;
}

void FockVector::set(const Partition& lambda, amplitude value) {
  check_key(lambda);
  if (value == amplitude{})
    amps_.erase(lambda);
  else
    amps_[lambda] = value;
}

void FockVector::add(const Partition& lambda, amplitude value) {
  check_key(lambda);
  if (value == amplitude{}) return;
  auto [it, inserted] = amps_.try_emplace(lambda, value);
  if (!inserted) {
    it->second += value;
    if (it->second == amplitude{}) amps_.erase(it);
  }
}

int FockVector::max_part() const {
  int m = 0;
  for (const auto& [lambda, _] : amps_) m = std::max(m, lambda.max_part());
  return m;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.grade_ != grade_) throw grade_mismatch_error("adding Fock vectors of different grade");
  for (const auto& [lambda, v] : other.amps_) add(lambda, v);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  if (other.grade_ != grade_) throw grade_mismatch_error("subtracting Fock vectors of different grade");
  for (const auto& [lambda, v] : other.amps_) add(lambda, -v);
  return *this;
}

FockVector& FockVector::operator*=(amplitude s) {
  if (s == amplitude{}) {
    amps_.clear();
    return *this;
  }
  for (auto& [_, v] : amps_) v *= s;
  std::erase_if(amps_, [](const auto& kv) { return kv.second == amplitude{}; });
  return *this;
}

double max_abs_difference(const FockVector& f, const FockVector& g) {
  if (f.grade() != g.grade()) throw grade_mismatch_error("comparing Fock vectors of different grade");
  double m = 0;
  for (const auto& [lambda, v] : f.amplitudes()) m = std::max(m, std::abs(v - g(lambda)));
  for (const auto& [lambda, v] : g.amplitudes())
    if (f.amplitudes().find(lambda) == f.amplitudes().end()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const FockVector& f) {
  double m = 0;
  for (const auto& [_, v] : f.amplitudes()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace qboson
