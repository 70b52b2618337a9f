// scarlab: command-line front end for the biased PXP chain toolkit.
//
//   scarlab <command> [--length L] [--g G]... [--t-max T] [--t-step DT]
//                     [--out DIR] [--cut-start S] [--tolerance TOL]
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include "scarlab/io/commands.hpp"
#include "scarlab/parallel.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace scarlab::io;

  CLI::App app{"Biased PXP chain: basis, spectra, dynamics, scars and entanglement"};
  app.set_help_all_flag("--help-all");

  std::string command_str;
  std::optional<int> length;
  std::vector<double> g_list;
  std::optional<double> t_max;
  std::optional<double> t_step;
  std::string out_dir = ".";
  int cut_start = 0;
  double tolerance = 1e-12;
  bool dump_operator = false;
  bool inject_sign_flip = false;

  const auto names = command_names();
  app.add_option("command", command_str, "One of: basis spectrum evolve scars pnup entropy fig2 fig3 fig4 verify")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--length,-L", length, "Number of sites (even, 4..24)")
      ->check([](const std::string& s) -> std::string {
        try {
          const int v = std::stoi(s);
          if (v % 2 != 0) return "length must be even";
          if (v < 4 || v > 24) return "length must lie in [4, 24]";
        } catch (const std::exception&) {
          return "length must be an integer";
        }
        return {};
      });
  app.add_option("--g", g_list, "Bias parameter; repeat for several values")->take_all();
  app.add_option("--t-max", t_max, "Final time of the evolution grid");
  app.add_option("--t-step", t_step, "Spacing of the evolution grid");
  app.add_option("--out,-o", out_dir, "Output directory");
  app.add_option("--cut-start", cut_start, "First site of the half-chain region A");
  app.add_option("--tolerance", tolerance, "Similarity residual threshold used by verify");
  app.add_flag("--dump-operator", dump_operator, "spectrum: also write H_g in coordinate format");
  app.add_flag("--inject-sign-flip", inject_sign_flip, "verify: corrupt one H_g entry (self-test)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  RunConfig config = default_config(*parse_command(command_str));
  if (length) config.length = *length;
  if (!g_list.empty()) config.g_list = g_list;
  if (t_max) config.t_max = *t_max;
  if (t_step) config.t_step = *t_step;
  config.out_dir = out_dir;
  config.cut_start = cut_start;
  config.tolerance = tolerance;
  config.dump_operator = dump_operator;
  config.inject_sign_flip = inject_sign_flip;

  scarlab::configure_threads_from_env();
  try {
    return run(config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}
