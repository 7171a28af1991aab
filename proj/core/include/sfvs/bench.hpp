#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfvs/generators.hpp"

namespace sfvs {

struct BenchRecord {
  int id = 0;
  GenSpec spec;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t terminals = 0;
  int k = 0;
  std::string answer;          // "yes", "no" or empty on error
  std::string kernel_outcome;  // "reduced", "trivial-yes", "trivial-no", or empty when not run
  std::optional<std::size_t> kernel_clique_side;
  std::optional<std::size_t> kernel_vertices;
  std::int64_t solver_nodes = 0;
  int solver_max_depth = 0;
  double kernel_ms = 0;
  double solve_ms = 0;
  std::string error;
};

/// Column names, in order.
const std::vector<std::string>& bench_columns();

/// Generates the instance, kernelizes split families, and solves every
/// family. Failures are stored in `error` instead of thrown.
BenchRecord run_bench_case(int id, const GenSpec& spec);

/// Runs the suite in order; records come back sorted by id.
std::vector<BenchRecord> run_bench(const std::vector<GenSpec>& suite);

std::string format_csv_row(const BenchRecord& r);

/// Appends records to `path`, writing the header only when the file is new or empty.
void append_csv(const std::string& path, const std::vector<BenchRecord>& records);

}  // namespace sfvs
