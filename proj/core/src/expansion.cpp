#include "sfvs/expansion.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sfvs {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Index-based copy of a view; sides are addressed by position.
struct Local {
  const BipartiteView* view = nullptr;
  std::vector<std::vector<int>> adj_p;
  std::vector<std::vector<int>> adj_q;

  explicit Local(const BipartiteView& b) : view(&b) {
    validate_view(b);
    adj_p.resize(b.side_p.size());
    adj_q.resize(b.side_q.size());
    for (auto [p, q] : b.edges) {
      int pi = static_cast<int>(std::lower_bound(b.side_p.begin(), b.side_p.end(), p) -
                                b.side_p.begin());
      int qi = static_cast<int>(std::lower_bound(b.side_q.begin(), b.side_q.end(), q) -
                                b.side_q.begin());
      adj_p[pi].push_back(qi);
      adj_q[qi].push_back(pi);
    }
    for (auto& a : adj_p) std::sort(a.begin(), a.end());
    for (auto& a : adj_q) std::sort(a.begin(), a.end());
  }

  int np() const { return static_cast<int>(adj_p.size()); }
  int nq() const { return static_cast<int>(adj_q.size()); }
};

// Matching of t clones per active P-vertex into active Q-vertices.
struct CloneMatching {
  int t = 1;
  std::vector<int> clone_to_q;  // clone c = p*t + j
  std::vector<int> q_to_clone;
};

class Matcher {
 public:
  Matcher(const Local& g, const std::vector<char>& active_p, const std::vector<char>& active_q,
          int t)
      : g_(g), active_p_(active_p), active_q_(active_q), t_(t) {}

  CloneMatching run() {
    CloneMatching m;
    m.t = t_;
    m.clone_to_q.assign(static_cast<std::size_t>(g_.np()) * t_, -1);
    m.q_to_clone.assign(g_.nq(), -1);
    m_ = &m;
    for (int p = 0; p < g_.np(); ++p) {
      if (!active_p_[p]) continue;
      for (int j = 0; j < t_; ++j) {
        seen_.assign(g_.nq(), 0);
        augment(p * t_ + j);
      }
    }
    return m;
  }

 private:
  bool augment(int clone) {
    for (int q : g_.adj_p[clone / t_]) {
      if (!active_q_[q] || seen_[q]) continue;
      seen_[q] = 1;
      if (m_->q_to_clone[q] == -1 || augment(m_->q_to_clone[q])) {
        m_->q_to_clone[q] = clone;
        m_->clone_to_q[clone] = q;
        return true;
      }
    }
    return false;
  }

  const Local& g_;
  const std::vector<char>& active_p_;
  const std::vector<char>& active_q_;
  int t_;
  CloneMatching* m_ = nullptr;
  std::vector<char> seen_;
};

struct Piece {
  std::vector<int> x;  // P indices, ascending
  std::vector<int> y;  // Q indices, ascending
  std::vector<std::pair<int, int>> m;
};

// Alternating reachability from unmatched active Q-vertices. Empty when every
// active Q-vertex is matched.
std::optional<Piece> reachable_piece(const Local& g, const std::vector<char>& active_p,
                                     const std::vector<char>& active_q, const CloneMatching& cm) {
  const int t = cm.t;
  std::vector<char> reached_p(g.np(), 0), reached_q(g.nq(), 0);
  std::deque<int> queue;
  for (int q = 0; q < g.nq(); ++q) {
    if (active_q[q] && cm.q_to_clone[q] == -1) {
      reached_q[q] = 1;
      queue.push_back(q);
    }
  }
  if (queue.empty()) return std::nullopt;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int p : g.adj_q[q]) {
      if (!active_p[p] || reached_p[p]) continue;
      reached_p[p] = 1;
      for (int j = 0; j < t; ++j) {
        int partner = cm.clone_to_q[p * t + j];
        if (partner == -1) {
          throw std::logic_error("expansion: augmenting path left in a maximum matching");
        }
        if (!reached_q[partner]) {
          reached_q[partner] = 1;
          queue.push_back(partner);
        }
      }
    }
  }
  Piece piece;
  for (int p = 0; p < g.np(); ++p) {
    if (!reached_p[p]) continue;
    piece.x.push_back(p);
    for (int j = 0; j < t; ++j) piece.m.emplace_back(p, cm.clone_to_q[p * t + j]);
  }
  for (int q = 0; q < g.nq(); ++q) {
    if (reached_q[q]) piece.y.push_back(q);
  }
  return piece;
}

// Smallest subset of `from.x` closed under "neighbours of my partners",
// paired with exactly its partners.
Piece tight_piece(const Local& g, const std::vector<char>& active_p, const CloneMatching& cm,
                  const Piece& from) {
  const int t = cm.t;
  std::vector<int> best;
  for (int start : from.x) {
    std::vector<char> in(g.np(), 0);
    std::vector<int> members{start};
    in[start] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      int p = members[i];
      for (int j = 0; j < t; ++j) {
        for (int r : g.adj_q[cm.clone_to_q[p * t + j]]) {
          if (active_p[r] && !in[r]) {
            in[r] = 1;
            members.push_back(r);
          }
        }
      }
    }
    if (best.empty() || members.size() < best.size()) best = members;
  }
  std::sort(best.begin(), best.end());
  Piece piece;
  piece.x = best;
  for (int p : best) {
    for (int j = 0; j < t; ++j) {
      int q = cm.clone_to_q[p * t + j];
      piece.m.emplace_back(p, q);
      piece.y.push_back(q);
    }
  }
  std::sort(piece.y.begin(), piece.y.end());
  return piece;
}

ExpansionResult to_result(const Local& g, const std::vector<int>& x, const std::vector<int>& y,
                          const std::vector<std::pair<int, int>>& m,
                          std::optional<int> witness) {
  const BipartiteView& b = *g.view;
  ExpansionResult r;
  for (int p : x) r.x.push_back(b.side_p[p]);
  for (int q : y) r.y.push_back(b.side_q[q]);
  for (auto [p, q] : m) r.expansion_edges.emplace_back(b.side_p[p], b.side_q[q]);
  normalize(r.x);
  normalize(r.y);
  std::sort(r.expansion_edges.begin(), r.expansion_edges.end());
  if (witness) r.unsaturated_witness = b.side_q[*witness];
  return r;
}

std::optional<int> first_unsaturated(const std::vector<int>& y,
                                     const std::vector<std::pair<int, int>>& m, int nq) {
  std::vector<char> sat(nq, 0);
  for (auto [p, q] : m) sat[q] = 1;
  for (int q : y) {
    if (!sat[q]) return q;
  }
  return std::nullopt;
}

void require_no_isolated_q(const Local& g) {
  for (int q = 0; q < g.nq(); ++q) {
    if (g.adj_q[q].empty()) {
      throw ContractViolation("expansion: vertex " + std::to_string(g.view->side_q[q]) +
                              " of Q is isolated");
    }
  }
}

}  // namespace

void validate_view(const BipartiteView& b) {
  auto sorted_set = [](const VertexSet& s) {
    return std::is_sorted(s.begin(), s.end()) &&
           std::adjacent_find(s.begin(), s.end()) == s.end();
  };
  if (!sorted_set(b.side_p) || !sorted_set(b.side_q)) {
    throw ContractViolation("bipartite view: sides must be sorted sets");
  }
  if (!set_intersection(b.side_p, b.side_q).empty()) {
    throw ContractViolation("bipartite view: sides overlap");
  }
  if (!std::is_sorted(b.edges.begin(), b.edges.end()) ||
      std::adjacent_find(b.edges.begin(), b.edges.end()) != b.edges.end()) {
    throw ContractViolation("bipartite view: edges must be sorted and distinct");
  }
  for (auto [p, q] : b.edges) {
    if (!contains(b.side_p, p) || !contains(b.side_q, q)) {
      throw ContractViolation("bipartite view: edge " + std::to_string(p) + "-" +
                              std::to_string(q) + " leaves the view");
    }
  }
}

EdgeList maximum_matching(const BipartiteView& b) {
  Local g(b);
  std::vector<char> ap(g.np(), 1), aq(g.nq(), 1);
  auto cm = Matcher(g, ap, aq, 1).run();
  EdgeList out;
  for (int p = 0; p < g.np(); ++p) {
    if (cm.clone_to_q[p] != -1) out.emplace_back(b.side_p[p], b.side_q[cm.clone_to_q[p]]);
  }
  return out;
}

std::optional<std::string> expansion_violation(const BipartiteView& b, int t,
                                               const ExpansionResult& r,
                                               bool require_witness) {
  if (r.x.empty() || r.y.empty()) return "x or y is empty";
  for (Vertex p : r.x) {
    if (!contains(b.side_p, p)) return "x is not inside P";
  }
  for (Vertex q : r.y) {
    if (!contains(b.side_q, q)) return "y is not inside Q";
  }
  std::map<Vertex, int> per_p;
  VertexSet saturated;
  for (auto [p, q] : r.expansion_edges) {
    if (!std::binary_search(b.edges.begin(), b.edges.end(), std::make_pair(p, q))) {
      return "expansion edge is not an edge of the view";
    }
    if (!contains(r.x, p) || !contains(r.y, q)) return "expansion edge leaves x-y";
    ++per_p[p];
    saturated.push_back(q);
  }
  for (Vertex p : r.x) {
    if (per_p[p] != t) return "vertex of x is not incident with exactly t expansion edges";
  }
  std::size_t raw = saturated.size();
  normalize(saturated);
  if (saturated.size() != raw || saturated.size() != static_cast<std::size_t>(t) * r.x.size()) {
    return "expansion does not saturate exactly t|x| distinct vertices";
  }
  for (auto [p, q] : b.edges) {
    if (contains(r.y, q) && !contains(r.x, p)) return "a vertex of y has a neighbour outside x";
  }
  if (r.unsaturated_witness) {
    Vertex w = *r.unsaturated_witness;
    if (!contains(r.y, w)) return "witness is not in y";
    if (contains(saturated, w)) return "witness is saturated";
  } else if (require_witness) {
    return "missing unsaturated witness";
  }
  return std::nullopt;
}

namespace detail {

ExpansionResult witness_loop(const BipartiteView& b, int t, ExpansionCore core) {
  Local g(b);
  std::vector<char> ap(g.np(), 1), aq(g.nq(), 1);
  std::vector<int> x, y;
  std::vector<std::pair<int, int>> m;
  auto finish = [&](std::optional<int> witness) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return to_result(g, x, y, m, witness);
  };
  for (;;) {
    // step 1
    auto cm = Matcher(g, ap, aq, t).run();
    auto piece = reachable_piece(g, ap, aq, cm);
    if (!piece || piece->x.empty()) {
      throw std::logic_error("expansion: witness loop premises failed");
    }
    if (core == ExpansionCore::Tight) *piece = tight_piece(g, ap, cm, *piece);
    x.insert(x.end(), piece->x.begin(), piece->x.end());
    y.insert(y.end(), piece->y.begin(), piece->y.end());
    m.insert(m.end(), piece->m.begin(), piece->m.end());
    if (piece->y.size() > static_cast<std::size_t>(t) * piece->x.size()) {
      return finish(first_unsaturated(piece->y, piece->m, g.nq()));
    }
    std::vector<char> in_x(g.np(), 0), in_y(g.nq(), 0);
    for (int p : piece->x) in_x[p] = 1;
    for (int q : piece->y) in_y[q] = 1;
    for (int q = 0; q < g.nq(); ++q) {
      if (!aq[q] || in_y[q]) continue;
      bool outside = std::any_of(g.adj_q[q].begin(), g.adj_q[q].end(),
                                 [&](int p) { return ap[p] && !in_x[p]; });
      if (!outside) {
        y.push_back(q);
        return finish(q);
      }
    }
    // steps 2 and 3: set the closed piece aside and recurse on the rest
    for (int p : piece->x) ap[p] = 0;
    for (int q : piece->y) aq[q] = 0;
  }
}

}  // namespace detail

ExpansionResult find_expansion(const BipartiteView& b, int t) {
  if (t < 1) throw ContractViolation("find_expansion: t must be positive");
  Local g(b);
  if (b.side_p.empty()) throw ContractViolation("find_expansion: P is empty");
  if (b.side_q.size() < static_cast<std::size_t>(t) * b.side_p.size()) {
    throw ContractViolation("find_expansion: requires |Q| >= t|P|");
  }
  require_no_isolated_q(g);

  std::vector<char> ap(g.np(), 1), aq(g.nq(), 1);
  auto cm = Matcher(g, ap, aq, t).run();
  ExpansionResult r;
  if (auto piece = reachable_piece(g, ap, aq, cm)) {
    r = to_result(g, piece->x, piece->y, piece->m, first_unsaturated(piece->y, piece->m, g.nq()));
  } else {
    // every Q-vertex is matched, so all clones are matched and |Q| = t|P|
    std::vector<int> x(g.np()), y(g.nq());
    for (int i = 0; i < g.np(); ++i) x[i] = i;
    for (int i = 0; i < g.nq(); ++i) y[i] = i;
    std::vector<std::pair<int, int>> m;
    for (int c = 0; c < g.np() * t; ++c) m.emplace_back(c / t, cm.clone_to_q[c]);
    r = to_result(g, x, y, m, std::nullopt);
  }
  if (!expansion_violation(b, t, r, false)) return r;

  auto ell = maximum_matching(b).size();
  if (b.side_q.size() > static_cast<std::size_t>(t) * ell) {
    r = detail::witness_loop(b, t, detail::ExpansionCore::Standard);
    if (!expansion_violation(b, t, r, false)) return r;
  }
  throw std::logic_error("find_expansion: could not certify an expansion");
}

ExpansionResult find_matching_expansion_with_witness(const BipartiteView& b, int t) {
  if (t < 1) throw ContractViolation("find_matching_expansion_with_witness: t must be positive");
  Local g(b);
  auto ell = maximum_matching(b).size();
  if (b.side_q.size() <= static_cast<std::size_t>(t) * ell) {
    throw ContractViolation("find_matching_expansion_with_witness: requires |Q| > t*matching");
  }
  require_no_isolated_q(g);
  auto r = detail::witness_loop(b, t, detail::ExpansionCore::Standard);
  if (auto bad = expansion_violation(b, t, r, true)) {
    throw std::logic_error("find_matching_expansion_with_witness: " + *bad);
  }
  return r;
}

}  // namespace sfvs
