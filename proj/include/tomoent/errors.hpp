// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tomoent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad shape, bad parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A state that must be normalized was not.
class NormalizationError : public Error {
 public:
  NormalizationError(const std::string& what, double deficit)
      : Error(what), deficit_(deficit) {}
  /// 1 - <psi|psi>.
  double deficit() const noexcept { return deficit_; }

 private:
  double deficit_;
};

/// Truncation or discretization is too coarse for the requested accuracy
/// (Fock cutoff leakage, quadrature grid too small).
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A time series cannot support the requested analysis (constant data,
/// no embedding dimension found, too few neighbors).
class DegenerateSeriesError : public Error {
 public:
  using Error::Error;
};

/// Malformed experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tomoent
