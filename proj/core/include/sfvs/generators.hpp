#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "sfvs/graph.hpp"

namespace sfvs {

enum class Family {
  SplitRandom,    // |K| = clique_size, |I| = independent_size, K-I edges with probability p
  ChordalRandom,  // n vertices grown along a random clique tree, cliques of at most clique_size
  VcReduction,    // random G(n, p) pushed through vc_to_sfvs with budget k
  Planted,        // random tree plus k planted vertices on cliques; always YES
  PlantedNo,      // chordal graph carrying k+1 disjoint terminal triangles; always NO
};

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

struct GenSpec {
  Family family = Family::SplitRandom;
  int n = 12;
  int clique_size = 5;
  int independent_size = 10;
  double p = 0.3;
  double terminal_fraction = 0.3;
  int k = 3;
  std::uint64_t seed = 1;
};

/// Deterministic: equal specs give equal instances. Vertex identifiers are
/// shuffled so that they carry no construction order (vc-reduction keeps the
/// labelling of vc_to_sfvs). Throws std::invalid_argument on infeasible
/// parameters.
Instance generate(const GenSpec& spec);

/// Integer and probability draws that do not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  /// Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sfvs
