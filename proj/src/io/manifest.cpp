#include "scarlab/io/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace scarlab::io {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for hashing");

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 initialisation failed");
  }
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);

  std::string hex;
  hex.reserve(2 * len);
  char pair[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(pair, sizeof pair, "%02x", digest[i]);
    hex += pair;
  }
  return hex;
}

RunManifest::RunManifest(nlohmann::json config) {
  doc_["format_version"] = 1;
  doc_["config"] = std::move(config);
  doc_["stages"] = nlohmann::json::object();
  doc_["tolerances"] = nlohmann::json::object();
  doc_["artifacts"] = nlohmann::json::array();
}

void RunManifest::add_stage_time(const std::string& stage, double seconds) {
  doc_["stages"][stage] = doc_["stages"].value(stage, 0.0) + seconds;
}

void RunManifest::add_artifact(const std::filesystem::path& path, const std::filesystem::path& out_dir) {
  doc_["artifacts"].push_back({{"file", std::filesystem::relative(path, out_dir).generic_string()},
                               {"sha256", sha256_file(path)}});
}

void RunManifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path.string());
  out << doc_.dump(2) << '\n';
}

}  // namespace scarlab::io
