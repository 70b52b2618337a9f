#ifndef SCARLAB_IO_COMMANDS_HPP
#define SCARLAB_IO_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scarlab::io {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Command { basis, spectrum, evolve, scars, pnup, entropy, fig2, fig3, fig4, verify };

std::string_view command_name(Command c);
std::optional<Command> parse_command(std::string_view name);
std::vector<std::string> command_names();

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::verify;
  int length = 10;
  std::vector<double> g_list{-1.0, 0.0, 1.0};
  double t_max = 40.0;
  double t_step = 0.02;
  std::filesystem::path out_dir = ".";
  int cut_start = 0;
  double tolerance = 1e-12;
  bool dump_operator = false;
  /// Test hook for `verify`: negate one stored entry of every H_g.
  bool inject_sign_flip = false;
};

/// Command-specific defaults: fig2 L = 18, fig3/fig4 L = 16, verify L = 10,
/// everything else L = 12; g = {-1, 0, 1}; t in [0, 40] step 0.02.
RunConfig default_config(Command command);

/// Throws UsageError on any invalid field.
void validate(const RunConfig& config);

/// One row of the verify table.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/// Runs every invariant check at the configured size without short-circuiting.
std::vector<CheckResult> run_verify_checks(const RunConfig& config);

int cmd_basis(const RunConfig& config, std::ostream& log);
int cmd_spectrum(const RunConfig& config, std::ostream& log);
int cmd_evolve(const RunConfig& config, std::ostream& log);
int cmd_scars(const RunConfig& config, std::ostream& log);
int cmd_pnup(const RunConfig& config, std::ostream& log);
int cmd_entropy(const RunConfig& config, std::ostream& log);
int cmd_fig2(const RunConfig& config, std::ostream& log);
int cmd_fig3(const RunConfig& config, std::ostream& log);
int cmd_fig4(const RunConfig& config, std::ostream& log);
int cmd_verify(const RunConfig& config, std::ostream& log);

/// Validates, dispatches on config.command and maps UsageError to exit 2.
int run(const RunConfig& config, std::ostream& log);

/// CSV file names produced by the figure commands.
std::string trace_file_name(int length, double g);
std::string pnup_file_name(int length, double g);
std::string entropy_file_name(int length, double g);

}  // namespace scarlab::io

#endif  // SCARLAB_IO_COMMANDS_HPP
