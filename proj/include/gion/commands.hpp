#pragma once

#include "gion/record.hpp"

#include <iosfwd>
#include <string>

namespace gion {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitVerificationFailed = 3;

struct SolveArgs {
  double p = 0;
  std::string q;  // decimal or num/den
  double tol = 1e-12;
  OutputFormat format = OutputFormat::Text;
};

/// Solves (p, q) and prints the record; exit 2 with the violated bound
/// named on infeasible input, exit 1 on internal errors.
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct ForwardArgs {
  std::string param;  // phi | r | x | t
  std::string value;  // number; phi accepts a rad (default) or deg suffix
  std::string scale = "unit";  // unit | natural
  OutputFormat format = OutputFormat::Text;
};

/// Evaluates one forward parametrization chain; exit 2 outside the
/// parameter's feasible range.
int cmd_forward(const ForwardArgs& args, std::ostream& out, std::ostream& err);

struct ScanArgs {
  int n = 100;
  std::string output;
};

/// Writes a CSV table (t, q, p, a, m, s, d at unit radius) over an n-point
/// grid of (0, t0]; exit 1 when the path is unwritable.
int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err);

struct PlotArgs {
  std::string kind;  // q_of_t | phi_of_q
  std::string output;
};

/// Renders a 400-sample SVG line plot; exit 1 when the path is unwritable.
int cmd_plot(const PlotArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  double p = 0;
  std::string q;
  OutputFormat format = OutputFormat::Text;
};

/// Solves, then cross-validates against the constraint-based
/// reconstruction; exit 0 iff the max relative deviation is <= 1e-8,
/// exit 3 on verification failure, exit 2 on infeasible input.
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct CertifyArgs {
  long long q_num = 0;
  long long q_den = 1;
  OutputFormat format = OutputFormat::Text;
};

/// Prints the exact coefficients of P(t, q), the Sturm root count on
/// (0, 14/25], and the irreducibility certificate for q = q_num/q_den.
int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace gion
