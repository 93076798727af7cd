// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gibbsxy {

enum class ErrorKind {
  InvalidModel,       // odd or non-positive chain length, bad parameter values
  InvalidArgument,    // malformed input to an operation (sizes, indices, vectors)
  Domain,             // mathematically undefined request (negative beta, arccos > 1)
  ResourceLimit,      // a configured size cap was exceeded
  UnsupportedSector,  // odd fermion number for the degeneracy formulas
  OptimizationFailed,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace gibbsxy
