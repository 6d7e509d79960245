#include "output.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>

#include "eqrank/types.hpp"

namespace eqrank::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string num(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw InvariantError("cannot format number");
  return {buf.data(), end};
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string brief(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw InvariantError("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return sha256_hex(bytes);
}

void Log::info(const std::string& msg) {
  std::cerr << "eqrank: " << msg << '\n';
  text_ += msg + '\n';
}

void Log::warn(const std::string& msg) {
  std::cerr << "eqrank: warning: " << msg << '\n';
  text_ += "warning: " + msg + '\n';
}

OutputDir::OutputDir(fs::path root, std::string command)
    : root_(std::move(root)), command_(std::move(command)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw InputError("cannot create output directory " + root_.string() + ": " + ec.message());
}

void OutputDir::write(const std::string& name, std::string_view contents) {
  const fs::path target = path(name);
  const fs::path tmp = path(name + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
  std::erase_if(written_, [&](const auto& w) { return w.first == name; });
  written_.emplace_back(name, sha256_hex(contents));
}

void OutputDir::commit(const ordered_json& config, const std::vector<std::string>& inputs,
                       const Log& log) {
  write(command_ + ".log", log.text());

  ordered_json manifest;
  const fs::path manifest_path = path("manifest.json");
  if (fs::exists(manifest_path)) {
    std::ifstream in(manifest_path);
    manifest = ordered_json::parse(in, nullptr, false);
    if (manifest.is_discarded() || !manifest.is_object()) manifest = ordered_json();
  }
  if (manifest.empty()) {
    manifest["format"] = "eqrank-manifest";
    manifest["version"] = 1;
    manifest["runs"] = ordered_json::object();
  }
  ordered_json run;
  run["tool_version"] = EQRANK_VERSION;
  run["config"] = config;
  run["config_sha256"] = sha256_hex(config.dump());
  ordered_json in = ordered_json::array();
  for (const auto& p : inputs) in.push_back({{"path", p}, {"sha256", sha256_file(p)}});
  run["inputs"] = std::move(in);
  ordered_json out = ordered_json::object();
  for (const auto& [name, digest] : written_) out[name] = digest;
  run["outputs"] = std::move(out);
  manifest["runs"][command_] = std::move(run);

  const std::string text = manifest.dump(2) + "\n";
  std::ofstream file(manifest_path, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) throw InputError("cannot write " + manifest_path.string());
}

}  // namespace eqrank::cli
