#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include <nlohmann/json.hpp>

#include "sfvs/bench.hpp"
#include "sfvs/chordal.hpp"
#include "sfvs/instance_io.hpp"
#include "sfvs/kernel.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/solver.hpp"

namespace sfvs::cli {
namespace {

using nlohmann::json;

// Files and output use 1-based identifiers.
json ids(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

std::string text_ids(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

json edge_ids(const std::vector<Edge>& es) {
  json a = json::array();
  for (const Edge& e : es) a.push_back({e.u + 1, e.v + 1});
  return a;
}

json step_json(const RuleStep& s) {
  return {{"rule", s.rule},
          {"deleted_vertices", ids(s.deleted_vertices)},
          {"deleted_edges", edge_ids(s.deleted_edges)},
          {"picked", ids(s.picked)},
          {"delta_k", s.delta_k},
          {"detail", s.detail}};
}

Instance load(const Common& c) {
  Instance inst = load_instance(c.input);
  if (c.k) inst.budget = *c.k;
  return inst;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Maps library exceptions onto exit codes.
template <class F>
int guarded(bool as_json, std::ostream& out, F&& body) {
  auto fail = [&](int code, const std::string& kind, const std::string& msg,
                  const std::vector<Vertex>* cert) {
    std::cerr << "error: " << msg << '\n';
    if (cert) std::cerr << "certificate: " << text_ids(*cert) << '\n';
    if (as_json) {
      json j = {{"error", kind}, {"message", msg}};
      if (cert) j["certificate"] = ids(*cert);
      out << j.dump() << '\n';
    }
    return code;
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(kUsage, "parse", e.what(), nullptr);
  } catch (const StructureError& e) {
    return fail(kRejected, "structure", e.what(), &e.certificate);
  } catch (const GuardError& e) {
    return fail(kRejected, "guard", e.what(), nullptr);
  } catch (const ContractViolation& e) {
    return fail(kUsage, "usage", e.what(), nullptr);
  } catch (const std::invalid_argument& e) {
    return fail(kUsage, "usage", e.what(), nullptr);
  } catch (const std::runtime_error& e) {
    return fail(kUsage, "io", e.what(), nullptr);
  }
}

const char* outcome_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Reduced: return "reduced";
    case OutcomeKind::TrivialYes: return "trivial-yes";
    case OutcomeKind::TrivialNo: return "trivial-no";
  }
  return "?";
}

}  // namespace

int run_solve(const SolveArgs& a, std::ostream& out) {
  return guarded(a.common.json, out, [&] {
    const Instance inst = load(a.common);
    const auto t0 = std::chrono::steady_clock::now();
    const SolveResult r = solve(inst);
    const double ms = elapsed_ms(t0);
    if (!a.trace_path.empty()) {
      auto f = open_out(a.trace_path);
      for (const RuleStep& s : r.trace) f << step_json(s).dump() << '\n';
    }
    if (a.common.json) {
      json j = {{"answer", r.yes ? "yes" : "no"},
                {"solution", ids(r.solution)},
                {"nodes_visited", r.nodes_visited},
                {"max_depth", r.max_depth},
                {"wall_ms", ms}};
      out << j.dump() << '\n';
    } else {
      out << (r.yes ? "YES" : "NO") << " k=" << inst.budget << " nodes=" << r.nodes_visited << '\n';
      if (r.yes) out << "solution: " << text_ids(r.solution) << '\n';
    }
    return r.yes ? kYes : kNo;
  });
}

int run_kernelize(const KernelizeArgs& a, std::ostream& out) {
  return guarded(a.common.json, out, [&] {
    const Instance inst = load(a.common);
    const auto t0 = std::chrono::steady_clock::now();
    const KernelOutcome k = kernelize(inst);
    const double ms = elapsed_ms(t0);
    std::map<std::string, int> counts;
    for (const RuleStep& s : k.trace) ++counts[s.rule];
    if (!a.emit_kernel.empty()) {
      auto f = open_out(a.emit_kernel);
      if (k.kind == OutcomeKind::Reduced) {
        const Compacted c = compact(k.instance);
        f << "c kernel of " << a.common.input << "; source ids " << text_ids(c.original) << '\n';
        write_instance(f, c.instance);
      } else {
        // Constant-size stand-ins: the empty instance, or one terminal triangle with k = 0.
        f << "c " << outcome_name(k.kind) << '\n';
        f << (k.kind == OutcomeKind::TrivialYes ? "p sfvs 0 0 0\n" : "p sfvs 3 3 0\ne 1 2\ne 1 3\ne 2 3\nt 1\n");
      }
    }
    if (a.common.json) {
      json j = {{"outcome", outcome_name(k.kind)}, {"steps", k.trace.size()}, {"rules", counts},
                {"wall_ms", ms}};
      if (k.kind == OutcomeKind::Reduced) {
        j["k"] = k.instance.budget;
        j["vertices"] = k.instance.graph.vertex_count();
        j["edges"] = k.instance.graph.edge_count();
        j["clique_side"] = k.partition.clique_side.size();
        j["independent_side"] = k.partition.independent_side.size();
      }
      out << j.dump() << '\n';
    } else {
      out << outcome_name(k.kind);
      if (k.kind == OutcomeKind::Reduced) {
        out << " k=" << k.instance.budget << " n=" << k.instance.graph.vertex_count()
            << " m=" << k.instance.graph.edge_count() << " |K|=" << k.partition.clique_side.size();
      }
      out << " steps=" << k.trace.size() << '\n';
    }
    return k.kind == OutcomeKind::TrivialNo ? kNo : kYes;
  });
}

int run_oracle(const OracleArgs& a, std::ostream& out) {
  return guarded(a.common.json, out, [&] {
    const Instance inst = load(a.common);
    if (!a.export_3hs.empty()) open_out(a.export_3hs) << format_3hs(export_3hs(inst));
    const OracleResult r = oracle_decide(inst, OracleMode::Auto, a.max_n);
    if (a.common.json) {
      json j = {{"answer", r.yes ? "yes" : "no"}};
      if (r.solution) j["solution"] = ids(*r.solution);
      out << j.dump() << '\n';
    } else {
      out << (r.yes ? "YES" : "NO") << '\n';
      if (r.solution) out << "solution: " << text_ids(*r.solution) << '\n';
    }
    return r.yes ? kYes : kNo;
  });
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  return guarded(a.common.json, out, [&] {
    const Instance inst = load(a.common);
    const VertexSet s = parse_vertex_list(a.set);
    for (Vertex v : s) {
      if (!inst.graph.has_vertex(v)) throw ContractViolation("vertex " + std::to_string(v + 1) + " is not in the graph");
    }
    const bool fits = static_cast<int>(s.size()) <= inst.budget;
    const auto cycle = surviving_t_cycle(inst, s);
    const bool valid = fits && !cycle;
    if (a.common.json) {
      json j = {{"valid", valid}, {"size", s.size()}, {"k", inst.budget}};
      if (cycle) j["witness_cycle"] = ids(*cycle);
      if (!fits) j["reason"] = "size exceeds k";
      out << j.dump() << '\n';
    } else {
      out << (valid ? "valid" : "invalid");
      if (!fits) out << " (size " << s.size() << " > k=" << inst.budget << ")";
      if (cycle) out << " cycle: " << text_ids(*cycle);
      out << '\n';
    }
    return valid ? kYes : kNo;
  });
}

int run_gen(const GenArgs& a, std::ostream& out) {
  return guarded(false, out, [&] {
    const Instance inst = generate(a.spec);
    if (a.output.empty()) {
      write_instance(out, inst);
    } else {
      auto f = open_out(a.output);
      write_instance(f, inst);
    }
    return kYes;
  });
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  return guarded(false, out, [&] {
    if (a.count < 0) throw std::invalid_argument("count must be non-negative");
    std::vector<GenSpec> suite;
    for (int i = 0; i < a.count; ++i) {
      GenSpec s = a.spec;
      s.seed = a.spec.seed + static_cast<std::uint64_t>(i);
      suite.push_back(s);
    }
    const auto records = sfvs::run_bench(suite);
    append_csv(a.output, records);
    int failures = 0;
    for (const auto& r : records) failures += r.error.empty() ? 0 : 1;
    out << records.size() << " rows appended to " << a.output;
    if (failures) out << " (" << failures << " failed)";
    out << '\n';
    return kYes;
  });
}

}  // namespace sfvs::cli
