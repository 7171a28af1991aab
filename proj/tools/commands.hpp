#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sfvs/generators.hpp"

namespace sfvs::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kRejected = 3 };

struct Common {
  std::string input;
  std::optional<int> k;  // overrides the budget in the file
  bool json = false;
};

struct SolveArgs {
  Common common;
  std::string trace_path;  // JSON lines, one per applied step
};

struct KernelizeArgs {
  Common common;
  std::string emit_kernel;
};

struct OracleArgs {
  Common common;
  std::size_t max_n = 24;
  std::string export_3hs;
};

struct VerifyArgs {
  Common common;
  std::string set;  // 1-based list
};

struct GenArgs {
  GenSpec spec;
  std::string output;  // empty: stdout
};

struct BenchArgs {
  GenSpec spec;  // seed is the first seed
  int count = 10;
  std::string output;
};

int run_solve(const SolveArgs& a, std::ostream& out);
int run_kernelize(const KernelizeArgs& a, std::ostream& out);
int run_oracle(const OracleArgs& a, std::ostream& out);
int run_verify(const VerifyArgs& a, std::ostream& out);
int run_gen(const GenArgs& a, std::ostream& out);
int run_bench(const BenchArgs& a, std::ostream& out);

}  // namespace sfvs::cli
