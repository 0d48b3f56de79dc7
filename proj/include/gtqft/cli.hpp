#pragma once

#include "gtqft/finite_group.hpp"
#include "gtqft/hom_enum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gtqft::cli {

struct JobConfig {
  std::string group = "S3"; // shorthand (Z5/S4/D6), inline JSON, or a file path
  std::int64_t budget = 100'000'000;
  int parallel = 1;
  std::string format = "json"; // json | csv
  std::uint64_t seed = 2026;
  bool raw = false;        // also emit the raw counting matrix
  bool normalized = false; // also emit the normalized counting matrix
  bool count_only = false;
};

FiniteGroup group_from_spec(const std::string& spec);
EnumOptions enum_options(const JobConfig& cfg);

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

CommandResult cmd_homs(const std::string& presentation_path, const JobConfig& cfg);
CommandResult cmd_classes(const std::string& presentation_path, const JobConfig& cfg);
CommandResult cmd_tqft(const std::string& cospan_path, const JobConfig& cfg);
/// Composes left to right; with group_given also checks the matrix-product
/// identity and fails on mismatch.
CommandResult cmd_compose(const std::vector<std::string>& cospan_paths, const JobConfig& cfg,
                          bool group_given);
CommandResult cmd_verify(const std::vector<std::string>& suites, const JobConfig& cfg);
CommandResult cmd_example(const std::string& name, const JobConfig& cfg, bool group_given);

const std::vector<std::string>& example_names();

} // namespace gtqft::cli
