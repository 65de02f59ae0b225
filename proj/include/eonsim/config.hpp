#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eonsim/cost.hpp"
#include "eonsim/simengine.hpp"

namespace eonsim {

// A sweep as described by a run configuration file.
struct RunConfig {
  std::filesystem::path topology_path;
  std::size_t slots = kDefaultSlots;
  std::vector<CostSpec> metrics;
  std::vector<Load> loads;
  std::vector<std::uint64_t> seeds;
  std::uint64_t num_demands = 10000;
  std::uint64_t warmup_demands = 0;
  std::filesystem::path output_path;
  bool emit_outcome_log = false;
};

struct ConfigCheck {
  std::optional<RunConfig> config;  // set iff diagnostics is empty
  std::vector<std::string> diagnostics;

  bool ok() const { return config.has_value(); }
};

// Parses and validates a JSON run configuration (comments allowed). Relative
// paths are resolved against `base_dir`. Every violation is reported, not
// just the first. Referenced files are not opened here.
ConfigCheck validate_config(std::string_view raw_text,
                            const std::filesystem::path& base_dir = {});

// Reads the file and validates it with its directory as base_dir. An
// unreadable file is reported as a diagnostic.
ConfigCheck load_config(const std::filesystem::path& path);

// Directory that receives per-run outcome logs for a given results file:
// "out/sweep.csv" -> "out/sweep_outcomes".
std::filesystem::path outcome_log_dir(const std::filesystem::path& output_path);

// File name of one run's outcome log inside outcome_log_dir.
std::string outcome_log_name(const SimResult& result);

}  // namespace eonsim
