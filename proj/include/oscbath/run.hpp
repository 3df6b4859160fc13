#pragma once

#include <string>
#include <vector>

#include "oscbath/config.hpp"

namespace oscbath {

// Flat numeric result table; every command renders to one.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

Table run_command(const RunConfig& cfg);

// Deterministic serializations: 17 significant digits, '.' decimal point.
std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Executes the command and writes the result to cfg.out_path (or stdout).
// Returns 0; failures propagate as oscbath::Error for the caller to map
// onto exit codes.
int run(const RunConfig& cfg);

} // namespace oscbath
