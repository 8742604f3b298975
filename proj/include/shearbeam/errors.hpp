// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shearbeam {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected configuration or parameter set. Maps to CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A named configuration field failed its invariant.
class FieldError : public ConfigError {
 public:
  FieldError(const std::string& kind, std::string field, const std::string& detail)
      : ConfigError(kind + "(\"" + field + "\")" + (detail.empty() ? "" : ": " + detail)),
        field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class NonPositiveParameter : public FieldError {
 public:
  explicit NonPositiveParameter(std::string field, const std::string& detail = {})
      : FieldError("NonPositiveParameter", std::move(field), detail) {}
};

class InvalidMesh : public FieldError {
 public:
  explicit InvalidMesh(std::string field, const std::string& detail = {})
      : FieldError("InvalidMesh", std::move(field), detail) {}
};

class InvalidTimeStep : public FieldError {
 public:
  explicit InvalidTimeStep(std::string field, const std::string& detail = {})
      : FieldError("InvalidTimeStep", std::move(field), detail) {}
};

/// Probe points, strides, initial data and other non-physical settings.
class InvalidSetting : public FieldError {
 public:
  explicit InvalidSetting(std::string field, const std::string& detail = {})
      : FieldError("InvalidSetting", std::move(field), detail) {}
};

/// File system failure. Maps to CLI exit code 3.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Linear solve failed or produced an unacceptable residual. Maps to CLI exit code 4.
class SolverFailure : public Error {
 public:
  explicit SolverFailure(const std::string& what, double residual = 0.0)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Zero pivot during factorization.
class SingularSystem : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

/// Too few samples in an energy fit window.
class DegenerateWindow : public Error {
 public:
  using Error::Error;
};

}  // namespace shearbeam
