// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace gibbsxy {

namespace {

void read_positive(const char* name, int& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec == std::errc{} && ptr == end && value > 0) out = value;
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  read_positive("GIBBSXY_ANALYTIC_SITES", limits.analytic_sites);
  read_positive("GIBBSXY_DENSE_SITES", limits.dense_sites);
  read_positive("GIBBSXY_MAX_QUBITS", limits.max_qubits);
  return limits;
}

}  // namespace gibbsxy
