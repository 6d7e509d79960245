#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace eqrank::cli {

/// Shortest decimal text that reads back as the same double.
std::string num(double x);
/// Fixed six-decimal text, for ratios shown in reports.
std::string fixed(double x, int digits = 6);
/// Six significant digits, for human-readable reports.
std::string brief(double x);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Messages go to stderr as they happen and to <command>.log on commit.
class Log {
 public:
  void info(const std::string& msg);
  void warn(const std::string& msg);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

/// Output directory of one command run. Files are written atomically
/// through a temporary name; the manifest records a hash of each.
class OutputDir {
 public:
  OutputDir(std::filesystem::path root, std::string command);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path path(const std::string& name) const { return root_ / name; }
  void write(const std::string& name, std::string_view contents);

  /// Records the run in manifest.json, keeping entries of other commands.
  void commit(const nlohmann::ordered_json& config, const std::vector<std::string>& inputs,
              const Log& log);

 private:
  std::filesystem::path root_;
  std::string command_;
  std::vector<std::pair<std::string, std::string>> written_;
};

}  // namespace eqrank::cli
