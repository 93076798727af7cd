// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/error.hpp"

namespace gibbsxy {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidModel:
      return "invalid-model";
    case ErrorKind::InvalidArgument:
      return "invalid-argument";
    case ErrorKind::Domain:
      return "domain";
    case ErrorKind::ResourceLimit:
      return "resource-limit";
    case ErrorKind::UnsupportedSector:
      return "unsupported-sector";
    case ErrorKind::OptimizationFailed:
      return "optimization-failed";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gibbsxy
