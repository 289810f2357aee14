#pragma once

#include <string>
#include <vector>

namespace a2web {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;         // counts, or the first counterexample
  double seconds = 0.0;
};

struct VerifyBounds {
  int phi_max_n = 3;      // A1, A5 sweeps (and A8 flow round trips)
  int psi_max_ell = 6;    // A2
  int tl_max_ell = 6;     // A3
  int depth_max_n = 3;    // A4
  int algebra_max_k = 3;  // A6
  int dim_max_k = 3;      // A7
  int flow_max_n = 3;     // A8
  int hook_max_size = 8;  // A9
  int confluence_max_k = 3;  // A10
  int confluence_orders = 25;

  // the bounds the acceptance criteria pin
  static VerifyBounds acceptance();
  // cmd_verify bounds derived from --max-n/--max-k/--max-ell
  static VerifyBounds from_cli(int max_n, int max_k, int max_ell);
};

// Runs the acceptance checks A1..A10 within the given bounds. A failed check
// carries a serialized counterexample or the failing instances in `detail`.
std::vector<CheckResult> run_verification(const VerifyBounds& bounds);

}  // namespace a2web
