#include "sfvs/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sfvs/chordal.hpp"
#include "sfvs/graph_algorithms.hpp"
#include "sfvs/oracle.hpp"

namespace sfvs {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = engine_.max() - engine_.max() % range;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<int>(draw % range);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::string family_name(Family f) {
  switch (f) {
    case Family::SplitRandom: return "split-random";
    case Family::ChordalRandom: return "chordal-random";
    case Family::VcReduction: return "vc-reduction";
    case Family::Planted: return "planted";
    case Family::PlantedNo: return "planted-no";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::SplitRandom, Family::ChordalRandom, Family::VcReduction, Family::Planted,
                   Family::PlantedNo}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

// Graph under construction, labelled in creation order.
struct Draft {
  int n = 0;
  std::set<std::pair<int, int>> edges;
  std::vector<char> terminal;

  int fresh() {
    terminal.push_back(0);
    return n++;
  }
  void connect(int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); }
  void clique(const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) connect(c[i], c[j]);
    }
  }
  Graph graph() const {
    Graph g(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }
};

std::vector<int> sample(Rng& rng, std::vector<int> pool, int r) {
  for (int i = 0; i < r; ++i) std::swap(pool[i], pool[rng.uniform(i, static_cast<int>(pool.size()) - 1)]);
  pool.resize(r);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Random clique tree growth: each new clique is a nonempty subset of an
// existing one plus fresh vertices.
Draft grow_chordal(Rng& rng, int n, int cmax) {
  if (n < 1) throw std::invalid_argument("chordal generator: n must be positive");
  if (cmax < 2) throw std::invalid_argument("chordal generator: clique size must be at least 2");
  Draft d;
  std::vector<std::vector<int>> cliques;
  std::vector<int> first;
  const int s = rng.uniform(std::min(2, n), std::min(cmax, n));
  for (int i = 0; i < s; ++i) first.push_back(d.fresh());
  d.clique(first);
  cliques.push_back(first);
  while (d.n < n) {
    const auto& base = cliques[rng.uniform(0, static_cast<int>(cliques.size()) - 1)];
    const int r = rng.uniform(1, std::min(static_cast<int>(base.size()), cmax - 1));
    std::vector<int> c = sample(rng, base, r);
    const int f = rng.uniform(1, std::min(cmax - r, n - d.n));
    for (int i = 0; i < f; ++i) c.push_back(d.fresh());
    d.clique(c);
    cliques.push_back(std::move(c));
  }
  return d;
}

Instance finish(Rng& rng, const Draft& d, int k) {
  std::vector<Vertex> perm(d.n);
  for (int i = 0; i < d.n; ++i) perm[i] = i;
  for (int i = d.n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
  Instance inst;
  inst.graph = Graph(static_cast<std::size_t>(d.n));
  for (auto [a, b] : d.edges) inst.graph.add_edge(perm[a], perm[b]);
  for (int v = 0; v < d.n; ++v) {
    if (d.terminal[v]) inst.terminals.push_back(perm[v]);
  }
  normalize(inst.terminals);
  inst.budget = k;
  return inst;
}

void mark_terminals(Rng& rng, Draft& d, double fraction) {
  for (int v = 0; v < d.n; ++v) d.terminal[v] = rng.chance(fraction) ? 1 : 0;
}

void check_common(const GenSpec& s) {
  if (s.k < 0) throw std::invalid_argument("k must be non-negative");
  if (s.p < 0 || s.p > 1) throw std::invalid_argument("edge probability must lie in [0,1]");
  if (s.terminal_fraction < 0 || s.terminal_fraction > 1) {
    throw std::invalid_argument("terminal fraction must lie in [0,1]");
  }
}

Instance split_random(Rng& rng, const GenSpec& s) {
  if (s.clique_size < 0 || s.independent_size < 0) throw std::invalid_argument("split sides must be non-negative");
  Draft d;
  std::vector<int> k;
  for (int i = 0; i < s.clique_size; ++i) k.push_back(d.fresh());
  d.clique(k);
  for (int i = 0; i < s.independent_size; ++i) {
    const int v = d.fresh();
    for (int u : k) {
      if (rng.chance(s.p)) d.connect(u, v);
    }
  }
  mark_terminals(rng, d, s.terminal_fraction);
  return finish(rng, d, s.k);
}

Instance chordal_random(Rng& rng, const GenSpec& s) {
  Draft d = grow_chordal(rng, s.n, s.clique_size);
  mark_terminals(rng, d, s.terminal_fraction);
  return finish(rng, d, s.k);
}

Instance vc_reduction(Rng& rng, const GenSpec& s) {
  if (s.n < 0) throw std::invalid_argument("n must be non-negative");
  Graph g(static_cast<std::size_t>(s.n));
  for (int a = 0; a < s.n; ++a) {
    for (int b = a + 1; b < s.n; ++b) {
      if (rng.chance(s.p)) g.add_edge(a, b);
    }
  }
  return vc_to_sfvs(g, s.k);
}

Instance planted(Rng& rng, const GenSpec& s) {
  if (s.clique_size < 3) throw std::invalid_argument("planted needs clique size >= 3");
  // A random tree is a T-forest for every terminal set.
  Draft d = grow_chordal(rng, s.n, 2);
  mark_terminals(rng, d, s.terminal_fraction);
  // Each planted vertex sees a clique, so chordality is kept; deleting all
  // of them gives back the tree.
  for (int i = 0; i < s.k; ++i) {
    const Graph g = d.graph();
    const auto cliques = maximal_cliques(g, require_chordal(g));
    std::vector<VertexSet> pool;
    for (const auto& c : cliques) {
      if (c.size() >= 2 && std::any_of(c.begin(), c.end(), [&](Vertex v) { return d.terminal[v] != 0; })) {
        pool.push_back(c);
      }
    }
    if (pool.empty()) pool = cliques;
    const VertexSet& c = pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
    const int size = std::min(static_cast<int>(c.size()), s.clique_size - 1);
    const std::vector<int> nbrs =
        sample(rng, std::vector<int>(c.begin(), c.end()), rng.uniform(std::min(2, size), size));
    const int v = d.fresh();
    for (int u : nbrs) d.connect(u, v);
    d.terminal[v] = rng.chance(s.terminal_fraction) ? 1 : 0;
  }
  return finish(rng, d, s.k);
}

Instance planted_no(Rng& rng, const GenSpec& s) {
  const int need = s.k + 1;
  if (s.n < 3 * need) throw std::invalid_argument("planted-no needs n >= 3(k+1)");
  if (s.clique_size < 3) throw std::invalid_argument("planted-no needs clique size >= 3");
  for (int attempt = 0; attempt < 200; ++attempt) {
    Draft d = grow_chordal(rng, s.n, s.clique_size);
    mark_terminals(rng, d, s.terminal_fraction);
    const Graph g = d.graph();
    auto cliques = maximal_cliques(g, require_chordal(g));
    for (int i = static_cast<int>(cliques.size()) - 1; i > 0; --i) std::swap(cliques[i], cliques[rng.uniform(0, i)]);
    std::vector<char> used(d.n, 0);
    int found = 0;
    for (const auto& c : cliques) {
      std::vector<int> free;
      for (Vertex v : c) {
        if (!used[v]) free.push_back(v);
      }
      while (free.size() >= 3 && found < need) {
        for (int j = 0; j < 3; ++j) used[free[j]] = 1;
        d.terminal[free[rng.uniform(0, 2)]] = 1;
        free.erase(free.begin(), free.begin() + 3);
        ++found;
      }
    }
    if (found == need) return finish(rng, d, s.k);
  }
  throw std::invalid_argument("planted-no: could not place k+1 disjoint triangles");
}

}  // namespace

Instance generate(const GenSpec& spec) {
  check_common(spec);
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::SplitRandom: return split_random(rng, spec);
    case Family::ChordalRandom: return chordal_random(rng, spec);
    case Family::VcReduction: return vc_reduction(rng, spec);
    case Family::Planted: return planted(rng, spec);
    case Family::PlantedNo: return planted_no(rng, spec);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace sfvs
