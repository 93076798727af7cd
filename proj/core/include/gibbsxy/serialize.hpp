// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "gibbsxy/degeneracy.hpp"
#include "gibbsxy/gibbs.hpp"
#include "gibbsxy/grover_rudolph.hpp"
#include "gibbsxy/reduced_xy.hpp"
#include "gibbsxy/sector_spectrum.hpp"
#include "gibbsxy/statevector.hpp"
#include "gibbsxy/vqa.hpp"

// Text output for the CLI and test fixtures. JSON floats use the shortest
// representation that round-trips; CSV floats use %.17g. Every function is
// deterministic in its arguments.

namespace gibbsxy {

/// printf("%.17g"), with "nan" / "inf" / "-inf" spelled out.
std::string format_double(double x);

std::string spectrum_csv_header();  // parity,modes,energy
std::string spectrum_csv_rows(const SectorSpectrum& spectrum);
std::string spectrum_json(std::span<const SectorSpectrum> sectors, double dense_residual);

std::string degeneracy_csv_header();  // n_sites,n_fermions,degree,count
std::string degeneracy_csv_rows(const DegeneracyProfile& profile);
std::string degeneracy_json(const DegeneracyProfile& profile);

std::string angles_json(const GRAngles& angles);
std::string reduced_report_json(const ReducedFitReport& report);

/// [{"index": i, "re": .., "im": ..}, ...]
std::string statevector_json(const Statevector& state);

std::string gibbs_json(const ModelParams& model, const GibbsTarget& target);

std::string vqa_config_json(const VqaConfig& config);
std::string vqa_result_json(const VqaResult& result);

}  // namespace gibbsxy
