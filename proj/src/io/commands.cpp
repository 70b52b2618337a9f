#include "scarlab/io/commands.hpp"

#include "scarlab/basis.hpp"
#include "scarlab/eigensystem.hpp"
#include "scarlab/entanglement.hpp"
#include "scarlab/evolution.hpp"
#include "scarlab/io/csv.hpp"
#include "scarlab/io/manifest.hpp"
#include "scarlab/operators.hpp"
#include "scarlab/spectral.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace scarlab::io {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 10> kCommands{{
    {Command::basis, "basis"},
    {Command::spectrum, "spectrum"},
    {Command::evolve, "evolve"},
    {Command::scars, "scars"},
    {Command::pnup, "pnup"},
    {Command::entropy, "entropy"},
    {Command::fig2, "fig2"},
    {Command::fig3, "fig3"},
    {Command::fig4, "fig4"},
    {Command::verify, "verify"},
}};

constexpr int kVerifyMaxLength = 12;
constexpr double kOracleTimeMax = 30.0;
constexpr double kOracleRtol = 1e-10;

nlohmann::json config_json(const RunConfig& c) {
  return {{"command", std::string(command_name(c.command))},
          {"length", c.length},
          {"g", c.g_list},
          {"t_max", c.t_max},
          {"t_step", c.t_step},
          {"cut_start", c.cut_start},
          {"tolerance", c.tolerance},
          {"dump_operator", c.dump_operator}};
}

nlohmann::json scar_json(const ScarLabeling& s) {
  return {{"rule", s.rule},
          {"spacing", s.spacing},
          {"exclusion", s.exclusion},
          {"count", s.scar_indices.size()},
          {"indices", s.scar_indices},
          {"ambiguous", s.ambiguous},
          {"ambiguous_picks", s.ambiguous_picks}};
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw UsageError("output directory " + dir.string() + " is not writable");
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  return out;
}

// Shared preamble of the commands that need the H_0 eigensystem.
struct Pipeline {
  ConstrainedBasis basis;
  EigenSystem eig;
  RunManifest manifest;

  explicit Pipeline(const RunConfig& config)
      : basis(enumerate_basis(config.length)), manifest(config_json(config)) {
    manifest.set_dimension(basis.dim());
    StageTimer timer;
    eig = eigendecompose_h0(basis);
    manifest.add_stage_time("eigendecompose_h0", timer.seconds());
  }
};

void finish(RunManifest& manifest, const RunConfig& config, std::ostream& log) {
  const auto path = config.out_dir / (std::string(command_name(config.command)) + "_manifest.json");
  manifest.write(path);
  log << "wrote " << path.string() << '\n';
}

template <typename Writer>
void emit(RunManifest& manifest, const RunConfig& config, const std::string& name, std::ostream& log,
          Writer&& writer) {
  const auto path = config.out_dir / name;
  {
    std::ofstream out = open_output(path);
    writer(out);
  }
  manifest.add_artifact(path, config.out_dir);
  log << "wrote " << path.string() << '\n';
}

int evolve_impl(const RunConfig& config, std::ostream& log) {
  prepare_out_dir(config.out_dir);
  Pipeline p(config);
  const std::vector<double> grid = make_time_grid(config.t_max, config.t_step);
  for (double g : config.g_list) {
    StageTimer timer;
    const EvolutionTrace trace = evolve_similarity(p.basis, p.eig, g, grid);
    p.manifest.add_stage_time("evolve_similarity", timer.seconds());
    emit(p.manifest, config, trace_file_name(config.length, g), log,
         [&](std::ostream& out) { write_trace_csv(out, trace); });
  }
  finish(p.manifest, config, log);
  return kExitOk;
}

int pnup_impl(const RunConfig& config, std::ostream& log) {
  prepare_out_dir(config.out_dir);
  Pipeline p(config);
  const Eigen::VectorXd overlaps = scar_overlaps(p.eig, p.basis);
  const ScarLabeling scars = identify_scars(p.eig, p.basis, overlaps);
  p.manifest.set_scar_criterion(scar_json(scars));
  for (double g : config.g_list) {
    StageTimer timer;
    std::vector<NupDistribution> rows;
    rows.reserve(static_cast<std::size_t>(p.eig.dim()));
    for (Index a = 0; a < p.eig.dim(); ++a) rows.push_back(p_nup(p.eig, p.basis, g, a));
    p.manifest.add_stage_time("p_nup", timer.seconds());
    emit(p.manifest, config, pnup_file_name(config.length, g), log,
         [&](std::ostream& out) { write_pnup_csv(out, config.length, p.eig, overlaps, scars, rows); });
  }
  finish(p.manifest, config, log);
  return kExitOk;
}

int entropy_impl(const RunConfig& config, std::ostream& log) {
  prepare_out_dir(config.out_dir);
  Pipeline p(config);
  const ScarLabeling scars = identify_scars(p.eig, p.basis);
  p.manifest.set_scar_criterion(scar_json(scars));
  p.manifest.add_tolerance("schmidt_cutoff", kSchmidtCutoff);
  for (double g : config.g_list) {
    StageTimer timer;
    const auto records = entropy_sweep(p.eig, p.basis, g, CutSpec{config.cut_start});
    p.manifest.add_stage_time("entropy_sweep", timer.seconds());
    emit(p.manifest, config, entropy_file_name(config.length, g), log,
         [&](std::ostream& out) { write_entropy_csv(out, records, scars); });
  }
  finish(p.manifest, config, log);
  return kExitOk;
}

std::string file_name(const char* stem, int length, double g) {
  return std::string(stem) + "_L" + std::to_string(length) + "_g" + format_g_label(g) + ".csv";
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommands) {
    if (n == name) return cmd;
  }
  return std::nullopt;
}

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& entry : kCommands) names.emplace_back(entry.second);
  return names;
}

std::string trace_file_name(int length, double g) { return file_name("trace", length, g); }
std::string pnup_file_name(int length, double g) { return file_name("pnup", length, g); }
std::string entropy_file_name(int length, double g) { return file_name("entropy", length, g); }

RunConfig default_config(Command command) {
  RunConfig c;
  c.command = command;
  switch (command) {
    case Command::fig2: c.length = 18; break;
    case Command::fig3:
    case Command::fig4: c.length = 16; break;
    case Command::verify: c.length = 10; break;
    default: c.length = 12; break;
  }
  return c;
}

void validate(const RunConfig& c) {
  try {
    require_valid_length(c.length);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.command == Command::verify && c.length > kVerifyMaxLength) {
    throw UsageError("verify runs at L <= " + std::to_string(kVerifyMaxLength));
  }
  if (c.g_list.empty()) throw UsageError("at least one g value is required");
  for (double g : c.g_list) {
    if (!std::isfinite(g)) throw UsageError("g values must be finite");
  }
  if (!(c.t_max > 0.0) || !std::isfinite(c.t_max)) throw UsageError("--t-max must be positive");
  if (!(c.t_step > 0.0) || !std::isfinite(c.t_step)) throw UsageError("--t-step must be positive");
  if (c.cut_start < 0 || c.cut_start >= c.length) throw UsageError("--cut-start must lie in [0, L)");
  if (!(c.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
}

std::vector<CheckResult> run_verify_checks(const RunConfig& config) {
  std::vector<CheckResult> results;
  auto record = [&](std::string name, double value, double threshold) {
    const bool ok = std::isfinite(value) && value < threshold;
    results.push_back({std::move(name), value, threshold, ok});
  };
  auto label = [](const char* what, double g) { return std::string(what) + "[g=" + format_g_label(g) + "]"; };

  const int length = config.length;
  const ConstrainedBasis basis = enumerate_basis(length);

  long long brute = 0;
  for (Bits b = 0; b < (Bits{1} << length); ++b) brute += satisfies_blockade(b, length) ? 1 : 0;
  record("basis_dimension_vs_brute_force", std::abs(static_cast<double>(basis.dim() - brute)), 0.5);

  for (double g : config.g_list) {
    OperatorMatrix h = build_h(basis, {length, g});
    if (config.inject_sign_flip && h.matrix.nonZeros() > 0) h.matrix.valuePtr()[0] *= -1.0;
    record(label("similarity_residual", g), check_similarity(basis, g, h, config.tolerance).residual,
           config.tolerance);
  }

  const EigenSystem eig = eigendecompose_h0(basis);
  const OperatorMatrix h0 = build_h(basis, {length, 0.0});
  record("h0_reconstruction_residual", reconstruction_residual(h0, eig), 1e-10 * static_cast<double>(basis.dim()));
  record("h0_orthonormality_residual", orthonormality_residual(eig), 1e-10);

  std::vector<double> nonzero_g;
  for (double g : config.g_list) {
    if (g != 0.0) nonzero_g.push_back(g);
  }
  if (!nonzero_g.empty()) {
    const SpectrumInvariance inv = spectrum_invariance(basis, nonzero_g);
    record("isospectrality_distance", inv.max_distance, 1e-6);
    record("isospectrality_max_imag", inv.max_imag, 1e-8);
  }

  std::vector<double> grid = make_time_grid(config.t_max, config.t_step);
  std::vector<double> oracle_grid;
  for (double t : grid) {
    if (t <= kOracleTimeMax + 1e-12) oracle_grid.push_back(t);
  }

  std::vector<EvolutionTrace> traces;
  for (double g : config.g_list) {
    traces.push_back(evolve_similarity(basis, eig, g, grid));
    const EvolutionTrace& exact = traces.back();
    const EvolutionTrace direct =
        evolve_direct(basis, g, neel_states(basis).z2bar, oracle_grid, kOracleRtol);
    double dev = 0.0;
    for (Index k = 0; k < direct.size(); ++k) dev = std::max(dev, std::abs(direct.p_z2bar[k] - exact.p_z2bar[k]));
    record(label("propagator_oracle_max_dp", g), dev, 1e-6);

    double norm_dev = 0.0;
    const Index stride = std::max<Index>(1, exact.size() / 25);
    for (Index k = 0; k < exact.size(); k += stride) {
      const double log_sum = norm_decomposition(basis, eig, g, exact.times[k]).log_sum();
      norm_dev = std::max(norm_dev, std::abs(std::expm1(log_sum - exact.log_norm_sq[k])));
    }
    record(label("norm_identity_rel", g), norm_dev, 1e-10);

    const OperatorMatrix hg = build_h(basis, {length, g});
    double residual = 0.0;
    for (Index a = 0; a < eig.dim(); ++a) {
      const Eigen::VectorXd v = right_eigvec(eig, basis, g, a);
      const double r = (hg.matrix * v - eig.energies[a] * v).cwiseAbs().maxCoeff();
      residual = std::max(residual, r / (1e-8 * std::abs(eig.energies[a]) + 1e-10));
    }
    record(label("right_eigvec_scaled_residual", g), residual, 1.0);

    double route = 0.0;
    for (Index a = 0; a < eig.dim(); ++a) {
      const Eigen::VectorXd explicit_p = group_by_nup(basis, right_eigvec(eig, basis, g, a));
      route = std::max(route, (explicit_p - p_nup(eig, basis, g, a).p).cwiseAbs().maxCoeff());
    }
    record(label("p_nup_two_route", g), route, 1e-12);
  }

  double amp_dev = 0.0;
  for (const EvolutionTrace& t : traces) {
    amp_dev = std::max(amp_dev, (t.amp_z2 - traces.front().amp_z2).cwiseAbs().maxCoeff());
    amp_dev = std::max(amp_dev, (t.amp_z2bar - traces.front().amp_z2bar).cwiseAbs().maxCoeff());
  }
  record("neel_amplitude_g_independence", amp_dev, 1e-10);

  const ScarLabeling scars = identify_scars(eig, basis);
  record("scar_count_minus_L_plus_1",
         std::abs(static_cast<double>(scars.scar_indices.size()) - static_cast<double>(length + 1)), 0.5);
  return results;
}

int cmd_verify(const RunConfig& config, std::ostream& log) {
  const std::vector<CheckResult> results = run_verify_checks(config);
  bool all = true;
  char line[192];
  std::snprintf(line, sizeof line, "%-40s %14s %12s  %s\n", "check", "value", "threshold", "status");
  log << line;
  for (const CheckResult& r : results) {
    std::snprintf(line, sizeof line, "%-40s %14.6e %12.3e  %s\n", r.name.c_str(), r.value, r.threshold,
                  r.passed ? "PASS" : "FAIL");
    log << line;
    all = all && r.passed;
  }
  log << (all ? "all checks passed\n" : "some checks FAILED\n");
  return all ? kExitOk : kExitCheckFailure;
}

int cmd_basis(const RunConfig& config, std::ostream& log) {
  prepare_out_dir(config.out_dir);
  const ConstrainedBasis basis = enumerate_basis(config.length);
  RunManifest manifest(config_json(config));
  manifest.set_dimension(basis.dim());
  emit(manifest, config, "basis_L" + std::to_string(config.length) + ".csv", log,
       [&](std::ostream& out) { write_basis_csv(out, basis); });
  finish(manifest, config, log);
  return kExitOk;
}

int cmd_spectrum(const RunConfig& config, std::ostream& log) {
  prepare_out_dir(config.out_dir);
  Pipeline p(config);
  emit(p.manifest, config, "spectrum_L" + std::to_string(config.length) + ".csv", log,
       [&](std::ostream& out) { write_spectrum_csv(out, p.eig); });
  if (config.dump_operator) {
    for (double g : config.g_list) {
      const OperatorMatrix h = build_h(p.basis, {config.length, g});
      emit(p.manifest, config, "h_L" + std::to_string(config.length) + "_g" + format_g_label(g) + ".coo", log,
           [&](std::ostream& out) { write_coordinate(out, h); });
    }
  }
  finish(p.manifest, config, log);
  return kExitOk;
}

int cmd_evolve(const RunConfig& config, std::ostream& log) { return evolve_impl(config, log); }
int cmd_fig2(const RunConfig& config, std::ostream& log) { return evolve_impl(config, log); }

int cmd_scars(const RunConfig& config, std::ostream& log) {
  prepare_out_dir(config.out_dir);
  Pipeline p(config);
  const Eigen::VectorXd overlaps = scar_overlaps(p.eig, p.basis);
  const ScarLabeling scars = identify_scars(p.eig, p.basis, overlaps);
  p.manifest.set_scar_criterion(scar_json(scars));
  emit(p.manifest, config, "scars_L" + std::to_string(config.length) + ".csv", log,
       [&](std::ostream& out) { write_scars_csv(out, p.eig, overlaps, scars); });
  finish(p.manifest, config, log);
  return kExitOk;
}

int cmd_pnup(const RunConfig& config, std::ostream& log) { return pnup_impl(config, log); }
int cmd_fig3(const RunConfig& config, std::ostream& log) { return pnup_impl(config, log); }
int cmd_entropy(const RunConfig& config, std::ostream& log) { return entropy_impl(config, log); }
int cmd_fig4(const RunConfig& config, std::ostream& log) { return entropy_impl(config, log); }

int run(const RunConfig& config, std::ostream& log) {
  try {
    validate(config);
    switch (config.command) {
      case Command::basis: return cmd_basis(config, log);
      case Command::spectrum: return cmd_spectrum(config, log);
      case Command::evolve: return cmd_evolve(config, log);
      case Command::scars: return cmd_scars(config, log);
      case Command::pnup: return cmd_pnup(config, log);
      case Command::entropy: return cmd_entropy(config, log);
      case Command::fig2: return cmd_fig2(config, log);
      case Command::fig3: return cmd_fig3(config, log);
      case Command::fig4: return cmd_fig4(config, log);
      case Command::verify: return cmd_verify(config, log);
    }
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace scarlab::io
