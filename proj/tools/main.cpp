#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace sfvs::cli;

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-i,--input", c.input, "instance file")->required()->check(CLI::ExistingFile);
  sub->add_option("--k", c.k, "override the budget from the file");
  sub->add_flag("--json", c.json, "machine-readable output");
}

void add_spec(CLI::App* sub, sfvs::GenSpec& s, std::string& family) {
  sub->add_option("--family", family, "split-random, chordal-random, vc-reduction, planted, planted-no")
      ->required();
  sub->add_option("--seed", s.seed, "random seed");
  sub->add_option("--n", s.n, "vertex count (chordal, vc and planted families)");
  sub->add_option("--clique-size", s.clique_size, "clique side size, or maximum clique size");
  sub->add_option("--independent-size", s.independent_size, "independent side size");
  sub->add_option("--p", s.p, "edge probability");
  sub->add_option("--terminal-fraction", s.terminal_fraction, "probability that a vertex is a terminal");
  sub->add_option("--k", s.k, "budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset feedback vertex set on chordal and split graphs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "decide a chordal instance by branching");
  add_common(c_solve, solve.common);
  c_solve->add_option("--trace", solve.trace_path, "write the successful path as JSON lines");

  KernelizeArgs kern;
  auto* c_kern = app.add_subcommand("kernelize", "shrink a split instance");
  add_common(c_kern, kern.common);
  c_kern->add_option("--emit-kernel", kern.emit_kernel, "write the kernel instance here");

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "exhaustive decision for small instances");
  add_common(c_oracle, oracle.common);
  c_oracle->add_option("--max-oracle-n", oracle.max_n, "refuse graphs with more vertices")->capture_default_str();
  c_oracle->add_option("--export-3hs", oracle.export_3hs, "write the terminal-triangle hitting set instance");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "check a vertex set against an instance");
  add_common(c_verify, verify.common);
  c_verify->add_option("--set", verify.set, "vertices, e.g. 1,4,7")->required();

  GenArgs gen;
  std::string gen_family;
  auto* c_gen = app.add_subcommand("gen", "generate an instance");
  add_spec(c_gen, gen.spec, gen_family);
  c_gen->add_option("-o,--output", gen.output, "output file (default stdout)");

  BenchArgs bench;
  std::string bench_family;
  auto* c_bench = app.add_subcommand("bench", "run a seeded suite and append CSV rows");
  add_spec(c_bench, bench.spec, bench_family);
  c_bench->add_option("--count", bench.count, "number of seeds")->capture_default_str();
  c_bench->add_option("-o,--output", bench.output, "CSV file (appended)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  auto family = [](const std::string& name, sfvs::GenSpec& s) {
    auto f = sfvs::parse_family(name);
    if (!f) {
      std::cerr << "error: unknown family " << name << '\n';
      return false;
    }
    s.family = *f;
    return true;
  };

  if (*c_solve) return run_solve(solve, std::cout);
  if (*c_kern) return run_kernelize(kern, std::cout);
  if (*c_oracle) return run_oracle(oracle, std::cout);
  if (*c_verify) return run_verify(verify, std::cout);
  if (*c_gen) return family(gen_family, gen.spec) ? run_gen(gen, std::cout) : kUsage;
  if (*c_bench) return family(bench_family, bench.spec) ? run_bench(bench, std::cout) : kUsage;
  return kUsage;
}
