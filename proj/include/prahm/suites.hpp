#pragma once
// Verification suites behind the `verify` subcommand: each suite runs a set
// of named checks against the current configuration and reports one line per
// check. Also the fixed-schema CSV producers behind the export subcommands,
// kept as pure string builders so byte-determinism is testable directly.
#include <string>
#include <utility>
#include <vector>

#include "prahm/config.hpp"
#include "prahm/mode.hpp"

namespace prahm {

enum class Suite { maxwell, helical, packet, interaction, ladder, txline };

// One verification line. cmp_ge false means pass iff measured <= tolerance,
// true means pass iff measured >= tolerance.
struct CheckLine {
  std::string name;
  double measured{0.0};
  double tolerance{0.0};
  bool cmp_ge{false};
  bool pass{false};
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> checks;
  bool all_pass() const;
};

Suite suite_from_name(const std::string& name);
SuiteReport run_suite(Suite s, const RunConfig& cfg);

// name = "all" runs every suite in order; otherwise the named one.
std::vector<SuiteReport> run_suites(const std::string& name, const RunConfig& cfg);

std::string format_reports(const std::vector<SuiteReport>& reports);

// Deterministic smooth random field pair for power-balance identity checks:
// per-slot transverse trigonometric polynomials on the mode's cell times a
// carrier wave, with per-slot temporal phases shared between the two fields.
// With z_modulated the slot amplitudes also vary slowly along z, which gives
// the stencil error of the balance evaluation a visible O(h^2) component;
// without it the cell/period quadrature cancels the stencil error entirely
// and the imbalance sits at rounding level for any step.
std::pair<FieldFn, FieldFn> random_balance_pair(unsigned seed,
                                                const ModeSpec& spec,
                                                bool z_modulated = false);

// CSV producers; schemas are fixed and rows are deterministically ordered.
std::string synth_csv(const RunConfig& cfg, int M, double phi, int Q,
                      int steps = 257);
std::string sweep_csv(const RunConfig& cfg, double from, double to, int steps);
std::string dispersion_csv(const RunConfig& cfg, const std::vector<int>& Ms);
std::string txline_csv(const RunConfig& cfg, double zeta);
std::string spectrum_csv(const RunConfig& cfg, const std::vector<int>& Ms,
                         int Q);

}  // namespace prahm
