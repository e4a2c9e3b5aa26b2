#pragma once

#include <stdexcept>
#include <string>

namespace qboson {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag used in CLI error reports.
  virtual const char* kind() const noexcept { return "error"; }
};

/// Parameters outside the region an operation requires.
class domain_error : public error {
public:
  using error::error;
  const char* kind() const noexcept override { return "domain"; }
};

/// A denominator fell below the hard singularity cutoff.
class singularity_error : public error {
public:
  using error::error;
  const char* kind() const noexcept override { return "singularity"; }
};

/// Spectral point too close to a wall of the alcove or its images.
class genericity_error : public error {
public:
  using error::error;
  const char* kind() const noexcept override { return "genericity"; }
};

class part_absent_error : public error {
public:
  using error::error;
  const char* kind() const noexcept override { return "part_absent"; }
};

class index_error : public error {
public:
  using error::error;
  const char* kind() const noexcept override { return "index"; }
};

class grade_mismatch_error : public error {
public:
  using error::error;
  const char* kind() const noexcept override { return "grade_mismatch"; }
};

/// Spectral point outside the regular set A_r (vanishing or tied group velocities).
class ordering_error : public error {
public:
  using error::error;
  const char* kind() const noexcept override { return "ordering"; }
};

}  // namespace qboson
