// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace gibbsxy {

/// Size caps guarding the exponential enumerations. These are configuration,
/// not physics: raise them through the environment if you have the memory.
struct Limits {
  int analytic_sites = 16;  // 2^(N-1) levels per sector
  int dense_sites = 12;     // 2^N x 2^N dense matrices
  int max_qubits = 24;      // statevector length 2^n

  /// Defaults overridden by GIBBSXY_ANALYTIC_SITES, GIBBSXY_DENSE_SITES and
  /// GIBBSXY_MAX_QUBITS when set to positive integers.
  static Limits from_env();
};

}  // namespace gibbsxy
