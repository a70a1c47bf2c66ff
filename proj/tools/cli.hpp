#pragma once

#include "io.hpp"

#include "conelab/lattice.hpp"
#include "conelab/roots.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace conelab::cli {

enum class Subcommand {
  LatticeInfo,
  RootsEnum,
  RootsWalk,
  ClassifyAbelian,
  HermitianReduce,
  HermitianVerifyRemark,
  ConeCheck,
  Fixtures,
};

/// Everything a run depends on; two runs with equal configs and equal input
/// files print identical bytes.
struct RunConfig {
  Subcommand subcommand = Subcommand::Fixtures;
  std::string lattice_path;
  std::string group_path;
  std::string matrix_path;
  std::string form_path;
  std::string delta_path;
  std::string samples_path;
  std::string polarization;           // comma-separated h
  std::string start_vector;           // comma-separated D
  std::vector<std::string> excluded;  // comma-separated roots
  long long bound = 1;
  std::uint64_t seed = 0;
  long long sample_count = 1000;
  int ball_radius = 3;
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t walk_cap = kDefaultWalkCap;
};

/// 0 success, 1 verification failure, 2 usage or input error.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit status for a typed error escaping a subcommand.
int exit_code_for(ErrorKind kind);

io::Json classify_report(const IntMatrix& matrix);
io::Json coverage_report(const CoverageReport& report);

}  // namespace conelab::cli
