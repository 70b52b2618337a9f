#ifndef SCARLAB_IO_MANIFEST_HPP
#define SCARLAB_IO_MANIFEST_HPP

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <string>

namespace scarlab::io {

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Provenance record written next to the CSVs of one command run.
class RunManifest {
 public:
  explicit RunManifest(nlohmann::json config);

  void set_dimension(long long dim) { doc_["basis_dimension"] = dim; }
  void add_tolerance(const std::string& name, double value) { doc_["tolerances"][name] = value; }
  void set_scar_criterion(nlohmann::json record) { doc_["scar_criterion"] = std::move(record); }
  void add_stage_time(const std::string& stage, double seconds);

  /// Hashes the file and lists it under "artifacts" by its name relative to
  /// the output directory.
  void add_artifact(const std::filesystem::path& path, const std::filesystem::path& out_dir);

  const nlohmann::json& json() const noexcept { return doc_; }
  void write(const std::filesystem::path& path) const;

 private:
  nlohmann::json doc_;
};

/// Wall-clock stopwatch for manifest stage timings.
class StageTimer {
 public:
  StageTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace scarlab::io

#endif  // SCARLAB_IO_MANIFEST_HPP
