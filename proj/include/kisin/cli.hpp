#pragma once

// Batch front-end shared by the kisin executable and the Python module.
//
// Instance configs are JSON objects:
//   {"p": 3, "n": 4, "f": 1,                  (or "eps": [...] instead of f)
//    "b": {"caruso": {"m": 2}}                (or {"tau": [[...]], "w": [[...]]}),
//    "mu": [[5, 3, 3, 1]],
//    "d", "field_deg", "box", "alcove_reduce", "from", "to", "variant", "out"}
// A report produced by an earlier run is also accepted; its "instance"
// member is used.

#include "kisin/report.hpp"

#include <string>
#include <vector>

namespace kisin {

enum ExitCode : int {
  exit_ok = 0,
  exit_invalid = 2,
  exit_precondition = 3,
  exit_theorem = 4,
};

struct RunResult {
  int exit_code = exit_ok;
  std::string output; // JSON or DOT, newline terminated
  std::string error;  // message for stderr, empty on success
};

/// The two disconnected examples: (a) GL_4, b = u^(2,0,2,0)(1243),
/// mu = (2p-1, p, p, 1); (b) Res GL_3 over F_{p^2},
/// b = (u^(2,0,1)(123), u^(0,0,1)), mu = ((p+1,0,0), (p,p,0)).
struct Counterexample {
  FrobeniusDatum datum;
  Cochar mu;
  std::vector<Cochar> expected; // sorted
};
Counterexample counterexample(char variant, int p);

/// Commands: normal-form, strata, graph, multicopy, chain-gl3,
/// oracle-count, verify-counterexample.
RunResult run(const std::string &command, const Json &config);

/// Full command line, argv[0] excluded.
RunResult run_args(const std::vector<std::string> &args);

} // namespace kisin
