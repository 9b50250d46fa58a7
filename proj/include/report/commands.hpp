#pragma once

#include <optional>
#include <string>

#include "report/json.hpp"

// The command-line operations, callable in-process.  Each returns the JSON
// record and the exit status the command line reports.
namespace report {

enum class ExitCode : int {
  Ok = 0,
  Parse = 1,
  Domain = 2,    // domain, precision, singularity or hypothesis errors
  Uncovered = 3,
  Oracle = 4,    // oracle disagreement or a violated invariant
  Resource = 5,
};

struct CommandResult {
  Json record;
  ExitCode code = ExitCode::Ok;
};

/// Coupling given either as rho itself or as J with rho = exp_p(J).
struct ModelSpec {
  long p = 0;
  long q = 0;
  std::optional<std::string> rho;
  std::optional<std::string> exp_of;
  int digits = 30;
};

/// ParseError when both or neither of rho and exp_of are given, or a
/// literal does not parse.  Truncated inputs carry enough digits for a
/// catalog verified to spec.digits.
potts::ModelParams build_params(const ModelSpec& spec);

/// Strong-transition probe backed by the finite-volume witness search.
potts::WitnessProbe common_witness_probe(int levels);

struct ClassifyOptions {
  ModelSpec model;
  int witness_levels = 10;
};

/// Regime, catalog, prediction check, transition and witness trajectories.
/// Uncovered regimes exit 3; a published prediction that disagrees with the
/// computed catalog is reported in "prediction" without changing the exit code.
CommandResult classify(const ClassifyOptions& opts);

struct RootsOptions {
  long p = 0;
  std::string a;
  std::string b;
  int digits = 20;
  std::optional<int> oracle_depth;
};

/// Root count and roots of y^3 + a y = b in Z_p^*; exit 4 when the oracle disagrees.
CommandResult roots(const RootsOptions& opts);

enum class SimulateCheck { Compatibility, Recursion, Norms };

struct SimulateOptions {
  ModelSpec model;
  int n = 1;
  SimulateCheck check = SimulateCheck::Compatibility;
  /// Restrict to one catalog label ("mu1"); every measure otherwise.
  std::optional<std::string> measure;
};

/// Finite-volume checks with the fixed-point field of each catalogued root;
/// exit 4 when any check fails, 5 when the slice exceeds the budget.
CommandResult simulate(const SimulateOptions& opts);

struct ScanOptions {
  long p = 0;
  long q_from = 3;
  long q_to = 3;
  std::optional<std::string> rho;
  std::optional<std::string> exp_of;
  int digits = 30;
};

/// One compact record per q in [q_from, q_to], in order; per-point failures
/// are recorded inline.  Exit 4 if any point hits an invariant violation.
CommandResult scan(const ScanOptions& opts);

/// Maps the library's exceptions to exit codes and an error record.
CommandResult error_result(const std::exception& e, const std::string& command);

}  // namespace report
