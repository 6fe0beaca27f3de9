// Command line front end. All numerics live in the library; this file only
// maps flags onto the command argument structs.

#include <CLI11.hpp>

#include "gion/commands.hpp"
#include "gion/record.hpp"

#include <iostream>
#include <string>

namespace {

gion::OutputFormat format_of(const std::string& name) {
  return gion::parse_output_format(name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver for the Gion shrine geometry problem"};
  app.require_subcommand(1);

  const auto format_validator =
      CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case);

  // solve
  auto* solve = app.add_subcommand(
      "solve", "Recover the four lengths from the aggregates p and q");
  gion::SolveArgs solve_args;
  std::string solve_format = "text";
  solve->add_option("--p", solve_args.p, "Total length p = a+m+s+d")
      ->required();
  solve
      ->add_option("--q", solve_args.q,
                   "Aggregate ratio q = m/a+d/m+s/d, decimal or n/d")
      ->required();
  solve->add_option("--tol", solve_args.tol, "Root refinement tolerance");
  solve->add_option("--format", solve_format, "Output format")
      ->check(format_validator);

  // forward
  auto* forward = app.add_subcommand(
      "forward", "Compute the four lengths from a single parameter");
  gion::ForwardArgs forward_args;
  std::string forward_format = "text";
  auto* opt_phi = forward->add_option(
      "--phi", forward_args.value,
      "Segment half-angle, radians by default ('deg'/'rad' suffix)");
  auto* opt_r =
      forward->add_option("--r", forward_args.value,
                          "Inscribed-circle radius at unit arc radius");
  auto* opt_x =
      forward->add_option("--x", forward_args.value, "x = sqrt(1-2r)");
  auto* opt_t =
      forward->add_option("--t", forward_args.value, "Ratio t = d/a");
  opt_phi->excludes(opt_r)->excludes(opt_x)->excludes(opt_t);
  opt_r->excludes(opt_x)->excludes(opt_t);
  opt_x->excludes(opt_t);
  forward
      ->add_option("--scale", forward_args.scale,
                   "Scale of the reported lengths")
      ->check(CLI::IsMember({"unit", "natural"}));
  forward->add_option("--format", forward_format, "Output format")
      ->check(format_validator);

  // scan
  auto* scan = app.add_subcommand(
      "scan", "Tabulate t, q and the unit-radius lengths over (0, t0]");
  gion::ScanArgs scan_args;
  scan->add_option("--n", scan_args.n, "Number of rows");
  scan->add_option("--output", scan_args.output, "CSV file to write")
      ->required();

  // plot
  auto* plot = app.add_subcommand("plot", "Render a curve of the family");
  gion::PlotArgs plot_args;
  plot->add_option("--kind", plot_args.kind, "Curve to draw")
      ->required()
      ->check(CLI::IsMember({"q_of_t", "phi_of_q"}));
  plot->add_option("--output", plot_args.output, "SVG file to write")
      ->required();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Solve, then cross-check against the geometric construction");
  gion::VerifyArgs verify_args;
  std::string verify_format = "text";
  verify->add_option("--p", verify_args.p, "Total length p")->required();
  verify->add_option("--q", verify_args.q, "Aggregate ratio q")->required();
  verify->add_option("--format", verify_format, "Output format")
      ->check(format_validator);

  // certify
  auto* certify = app.add_subcommand(
      "certify",
      "Exact root count and irreducibility certificate for a rational q");
  gion::CertifyArgs certify_args;
  std::string certify_format = "text";
  certify->add_option("--q-num", certify_args.q_num, "Numerator of q")
      ->required();
  certify->add_option("--q-den", certify_args.q_den, "Denominator of q")
      ->required();
  certify->add_option("--format", certify_format, "Output format")
      ->check(format_validator);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      solve_args.format = format_of(solve_format);
      return gion::cmd_solve(solve_args, std::cout, std::cerr);
    }
    if (forward->parsed()) {
      if (opt_phi->count()) {
        forward_args.param = "phi";
      } else if (opt_r->count()) {
        forward_args.param = "r";
      } else if (opt_x->count()) {
        forward_args.param = "x";
      } else if (opt_t->count()) {
        forward_args.param = "t";
      } else {
        std::cerr << "gion forward: exactly one of --phi, --r, --x, --t is "
                     "required\n";
        return gion::kExitInternal;
      }
      forward_args.format = format_of(forward_format);
      return gion::cmd_forward(forward_args, std::cout, std::cerr);
    }
    if (scan->parsed()) {
      return gion::cmd_scan(scan_args, std::cout, std::cerr);
    }
    if (plot->parsed()) {
      return gion::cmd_plot(plot_args, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      verify_args.format = format_of(verify_format);
      return gion::cmd_verify(verify_args, std::cout, std::cerr);
    }
    if (certify->parsed()) {
      certify_args.format = format_of(certify_format);
      return gion::cmd_certify(certify_args, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "gion: " << e.what() << "\n";
    return gion::kExitInternal;
  }
  return gion::kExitInternal;
}
