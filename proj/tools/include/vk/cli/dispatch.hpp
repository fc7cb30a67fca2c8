#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace vk::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string model = "grid_sphere";
  std::size_t n = 8;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string basepoint;
  std::string format = "text";
  std::size_t tietze_steps = 0;
  std::size_t retries = 10000;
  std::size_t min_length = 4;
  /// 0 means 4n.
  std::size_t max_length = 0;
  std::size_t max_arc_edges = 3;
  bool pipeline = true;
  bool witness = false;
  /// auto | holds | violated | any
  std::string expect = "auto";
  std::string output;
};

nlohmann::json to_json(const RunConfig& c);

enum class Status { ok, violation, error };

std::string_view to_string(Status s);

struct Report {
  std::string subcommand;
  nlohmann::json config;
  nlohmann::json result;
  Status status = Status::ok;
  /// Human-readable rendering of `result`.
  std::string text;
};

nlohmann::json to_json(const Report& r);

/// 0 ok, 2 violation, 1 error.
int exit_code(Status s);

/// Runs one configured subcommand. Bad input surfaces as vk::Error.
Report run(const RunConfig& config);

/// Parses argv, runs the subcommand, prints the report, returns the exit code.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vk::cli
