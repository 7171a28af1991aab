#include "sfvs/bench.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sfvs/kernel.hpp"
#include "sfvs/solver.hpp"

namespace sfvs {
namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

bool is_split_family(Family f) { return f == Family::SplitRandom || f == Family::VcReduction; }

// Commas and quotes in error messages would break the row.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

template <class T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "";
}

std::string fixed3(double x) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(3);
  o << x;
  return o.str();
}

}  // namespace

const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> cols = {
      "id",           "family",           "seed",           "n",         "m",
      "terminals",    "k",                "answer",         "kernel_outcome",
      "kernel_clique_side", "kernel_vertices", "solver_nodes", "solver_max_depth",
      "kernel_ms",    "solve_ms",         "error"};
  return cols;
}

BenchRecord run_bench_case(int id, const GenSpec& spec) {
  BenchRecord r;
  r.id = id;
  r.spec = spec;
  try {
    const Instance inst = generate(spec);
    r.n = inst.graph.vertex_count();
    r.m = inst.graph.edge_count();
    r.terminals = inst.terminals.size();
    r.k = inst.budget;
    if (is_split_family(spec.family)) {
      const auto start = std::chrono::steady_clock::now();
      const KernelOutcome out = kernelize(inst);
      r.kernel_ms = ms_since(start);
      switch (out.kind) {
        case OutcomeKind::Reduced:
          r.kernel_outcome = "reduced";
          r.kernel_clique_side = out.partition.clique_side.size();
          r.kernel_vertices = out.instance.graph.vertex_count();
          break;
        case OutcomeKind::TrivialYes: r.kernel_outcome = "trivial-yes"; break;
        case OutcomeKind::TrivialNo: r.kernel_outcome = "trivial-no"; break;
      }
    }
    const auto start = std::chrono::steady_clock::now();
    const SolveResult s = solve(inst);
    r.solve_ms = ms_since(start);
    r.answer = s.yes ? "yes" : "no";
    r.solver_nodes = s.nodes_visited;
    r.solver_max_depth = s.max_depth;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<BenchRecord> run_bench(const std::vector<GenSpec>& suite) {
  std::vector<BenchRecord> out;
  out.reserve(suite.size());
  for (std::size_t i = 0; i < suite.size(); ++i) out.push_back(run_bench_case(static_cast<int>(i), suite[i]));
  return out;
}

std::string format_csv_row(const BenchRecord& r) {
  std::ostringstream o;
  o << r.id << ',' << family_name(r.spec.family) << ',' << r.spec.seed << ',' << r.n << ',' << r.m << ','
    << r.terminals << ',' << r.k << ',' << r.answer << ',' << r.kernel_outcome << ','
    << opt(r.kernel_clique_side) << ',' << opt(r.kernel_vertices) << ',' << r.solver_nodes << ','
    << r.solver_max_depth << ',' << fixed3(r.kernel_ms) << ',' << fixed3(r.solve_ms) << ','
    << csv_field(r.error);
  return o.str();
}

void append_csv(const std::string& path, const std::vector<BenchRecord>& records) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path + " for appending");
  if (fresh) {
    const auto& cols = bench_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
  }
  for (const BenchRecord& r : records) out << format_csv_row(r) << '\n';
}

}  // namespace sfvs
