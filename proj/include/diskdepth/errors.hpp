// Copyright (c) 2026 The diskdepth authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diskdepth {

enum class ErrorKind {
  InvalidInput,    // bad arguments, non-finite coordinates, malformed files
  DegenerateInput, // e.g. collinear triple passed to circumcenter/incircle
  Degeneracy,      // general-position violation detected mid-computation
  Consistency,     // an internal guarantee the algorithms rely on failed
  Io,
  Usage,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Offending point indices, when the failure names specific points.
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

[[noreturn]] inline void throw_invalid(std::string msg) {
  throw Error(ErrorKind::InvalidInput, std::move(msg));
}

[[noreturn]] inline void throw_degenerate(std::string msg, std::vector<std::size_t> witness = {}) {
  throw Error(ErrorKind::DegenerateInput, std::move(msg), std::move(witness));
}

[[noreturn]] inline void throw_degeneracy(std::string msg, std::vector<std::size_t> witness = {}) {
  throw Error(ErrorKind::Degeneracy, std::move(msg), std::move(witness));
}

[[noreturn]] inline void throw_consistency(std::string msg) {
  throw Error(ErrorKind::Consistency, std::move(msg));
}

} // namespace diskdepth
