#pragma once

#include "cli/run_config.hpp"
#include "cli/table.hpp"
#include "geab/verify.hpp"

namespace geab::cli {

/// Columns: S, value, region, branch. Rows ordered by S.
Table cmd_profile(const RunConfig& cfg);

/// One record. Solenoid columns: scenario, A, S, maxwell_phase,
/// ge_correction, ratio, total_phase, branch, units. Tube columns:
/// scenario, A, S1, S2, maxwell_delta_phi, podolsky_delta_phi,
/// maxwell_phase, podolsky_phase, total_phase, branch, units.
/// units is "normalized" or "SI" (radians and volts).
Table cmd_phase(const RunConfig& cfg);

/// Phase records over A log-spaced on [A-min, A-max], ascending.
/// Solenoid columns: A, S, ge_correction, ratio, branch.
/// Tube columns: A, S1, S2, podolsky_delta_phi, branch.
Table cmd_sweep(const RunConfig& cfg);

/// Columns: level, module, name, observed, tolerance, passed.
Table verify_table(const verify::Report& report);

}  // namespace geab::cli
