#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spindefect/dynamics.hpp"
#include "spindefect/model.hpp"

namespace spindefect::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kNumericalError = 3,
  kIoError = 4,
};

enum class Format { Csv, Json };

/// Fully resolved settings for one subcommand run.
struct RunConfig {
  std::string subcommand;
  ChainSpec spec;
  Site sender = 0;
  std::optional<Site> receiver;
  double t_max = 30.0;
  double dt = 0.1;
  long j_max = 10;
  double alpha_min = -4.0;
  double alpha_max = 4.0;
  double alpha_step = 0.1;
  Method method = Method::Oracle;
  Format format = Format::Csv;
  std::string out_path;  // empty: write to the output stream
};

/// One cell of an output table; an empty optional is a missing value.
struct Cell {
  std::optional<double> number;
  std::string text;
  bool integral = false;

  static Cell real(double v) { return Cell{v, {}, false}; }
  static Cell integer(long v) { return Cell{static_cast<double>(v), {}, true}; }
  static Cell label(std::string s) { return Cell{std::nullopt, std::move(s), false}; }
  static Cell missing() { return Cell{}; }
};

/// Column-oriented result of a subcommand plus free-form metadata.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, double>> meta;
};

/// %.9e, the fixed float format of every output file.
std::string format_real(double value);

std::string to_csv(const Table& table);
std::string to_json(const Table& table, const RunConfig& config);

Table cmd_spectrum(const RunConfig& config);
Table cmd_localized(const RunConfig& config);
Table cmd_evolve(const RunConfig& config);
Table cmd_transport(const RunConfig& config);

/// Parses arguments (argv[0] excluded), runs the subcommand and writes the
/// result to config.out_path or `out`. Diagnostics go to `err`. Returns an
/// ExitCode; no output file is written on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spindefect::cli
