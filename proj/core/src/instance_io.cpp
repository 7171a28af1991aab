#include "sfvs/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sfvs {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long to_int(const std::string& tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

Vertex to_vertex(const std::string& tok, long long n, int line) {
  long long v = to_int(tok, line);
  if (v < 1 || v > n) {
    throw ParseError(line, "vertex " + tok + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_header = false;
  long long n = 0, m = 0;
  long long edges_seen = 0;
  int lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    const std::string& kind = tok[0];
    if (kind == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 5 || tok[1] != "sfvs") {
        throw ParseError(lineno, "expected 'p sfvs <n> <m> <k>'");
      }
      n = to_int(tok[2], lineno);
      m = to_int(tok[3], lineno);
      long long k = to_int(tok[4], lineno);
      if (n < 0 || m < 0) throw ParseError(lineno, "negative vertex or edge count");
      if (n > 100'000'000) throw ParseError(lineno, "vertex count too large");
      inst.graph = Graph(static_cast<std::size_t>(n));
      inst.budget = static_cast<int>(k);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "problem line must come first");
    if (kind == "e") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      Vertex u = to_vertex(tok[1], n, lineno);
      Vertex v = to_vertex(tok[2], n, lineno);
      if (u == v) throw ParseError(lineno, "self-loop on vertex " + tok[1]);
      if (inst.graph.has_edge(u, v)) {
        throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
      }
      inst.graph.add_edge(u, v);
      ++edges_seen;
    } else if (kind == "t") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 't <v>'");
      Vertex v = to_vertex(tok[1], n, lineno);
      auto pos = std::lower_bound(inst.terminals.begin(), inst.terminals.end(), v);
      if (pos != inst.terminals.end() && *pos == v) {
        throw ParseError(lineno, "duplicate terminal " + tok[1]);
      }
      inst.terminals.insert(pos, v);
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing problem line");
  if (edges_seen != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(edges_seen));
  }
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  const Graph& g = inst.graph;
  if (g.vertex_count() != g.capacity()) {
    throw ContractViolation("write_instance: instance has deleted vertices, compact it first");
  }
  out << "p sfvs " << g.vertex_count() << ' ' << g.edge_count() << ' ' << inst.budget << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  for (Vertex t : inst.terminals) out << "t " << t + 1 << '\n';
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Compacted compact(const Instance& inst) {
  Compacted c;
  c.original = inst.graph.vertices();
  std::vector<Vertex> index(inst.graph.capacity(), -1);
  for (std::size_t i = 0; i < c.original.size(); ++i) {
    index[c.original[i]] = static_cast<Vertex>(i);
  }
  c.instance.graph = Graph(c.original.size());
  for (const Edge& e : inst.graph.edges()) c.instance.graph.add_edge(index[e.u], index[e.v]);
  for (Vertex t : inst.terminals) c.instance.terminals.push_back(index[t]);
  normalize(c.instance.terminals);
  c.instance.budget = inst.budget;
  return c;
}

VertexSet parse_vertex_list(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  VertexSet out;
  for (const auto& tok : split_ws(spaced)) {
    long long v = to_int(tok, 0);
    if (v < 1) throw ParseError(0, "vertex ids are 1-based, got " + tok);
    out.push_back(static_cast<Vertex>(v - 1));
  }
  normalize(out);
  return out;
}

}  // namespace sfvs
