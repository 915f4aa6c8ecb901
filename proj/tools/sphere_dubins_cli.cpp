#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sphere_dubins/commands.hpp"

namespace sd = sphere_dubins;

int main(int argc, char** argv)
{
  CLI::App app{"Shortest Dubins paths on the unit sphere"};
  app.set_version_flag("--version", std::string(sd::kVersion));
  app.require_subcommand(1);

  sd::PlanOptions plan_opts;
  std::string input;
  std::string output;
  double r = 0.0;
  int samples = 0;
  double residual_tol = 0.0;

  const auto add_query_flags = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "Query document (JSON); stdin when omitted");
    cmd->add_option("--output", output, "Output file; stdout when omitted");
    cmd->add_option("--r", r, "Turning radius, overrides the document");
    cmd->add_option("--samples", samples, "Samples per segment, overrides the document");
    cmd->add_option("--residual-tol", residual_tol, "Frobenius acceptance tolerance");
  };
  CLI::App* plan_cmd = app.add_subcommand("plan", "Plan the shortest verified path and print a JSON report");
  add_query_flags(plan_cmd);
  CLI::App* sample_cmd = app.add_subcommand("sample", "Sample the best path as CSV (segment_index,s,x,y,z)");
  add_query_flags(sample_cmd);

  sd::VerifyOptions verify_opts;
  std::string verify_output;
  double verify_tol = 0.0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Round-trip every family on seeded random instances");
  verify_cmd->add_option("--seed", verify_opts.seed, "Base seed")->capture_default_str();
  verify_cmd->add_option("--trials", verify_opts.trials, "Instances per family and radius")->capture_default_str();
  verify_cmd->add_option("--r", verify_opts.radii, "Turning radius; repeat for several (default 0.2 0.5 0.7071 0.8)")
      ->allow_extra_args(false);
  verify_cmd->add_option("--residual-tol", verify_tol, "Frobenius acceptance tolerance");
  verify_cmd->add_option("--output", verify_output, "Output file; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sd::kExitMalformed;
  }

  if (verify_cmd->parsed()) {
    if (verify_cmd->count("--residual-tol")) {
      verify_opts.residual_tol = verify_tol;
    }
    if (!verify_output.empty()) {
      verify_opts.output = verify_output;
    }
    return sd::cmd_verify(verify_opts, std::cout, std::cerr);
  }

  CLI::App* cmd = plan_cmd->parsed() ? plan_cmd : sample_cmd;
  if (!input.empty()) {
    plan_opts.input = input;
  }
  if (!output.empty()) {
    plan_opts.output = output;
  }
  if (cmd->count("--r")) {
    plan_opts.overrides.r = r;
  }
  if (cmd->count("--samples")) {
    plan_opts.overrides.samples_per_segment = samples;
  }
  if (cmd->count("--residual-tol")) {
    plan_opts.overrides.residual_tol = residual_tol;
  }
  if (cmd == plan_cmd) {
    return sd::cmd_plan(plan_opts, std::cin, std::cout, std::cerr);
  }
  return sd::cmd_sample(plan_opts, std::cin, std::cout, std::cerr);
}
