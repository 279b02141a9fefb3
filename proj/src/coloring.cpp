#include <algorithm>
#include <set>
#include <string>

#include "latcol/coloring.hpp"

namespace latcol {

int colors_used(const EdgeColoring& c) {
  std::set<int> used;
  for (int x : c.color)
    if (x >= 0) used.insert(x);
  return static_cast<int>(used.size());
}

const char* to_string(ExactStatus s) {
  switch (s) {
    case ExactStatus::kSat: return "SAT";
    case ExactStatus::kUnsat: return "UNSAT";
    case ExactStatus::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

EdgeColoring greedy_proper(const MultiGraph& g) {
  if (has_self_loop(g)) throw std::invalid_argument("greedy_proper: graph has a self-loop");
  // used[v] holds the colors already present at v.
  std::vector<std::vector<bool>> used(g.vertex_count);
  EdgeColoring out{std::vector<int>(g.edges.size(), kUncolored), 0};
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    auto& cu = used[e.u];
    auto& cv = used[e.v];
    int c = 0;
    while ((c < static_cast<int>(cu.size()) && cu[c]) || (c < static_cast<int>(cv.size()) && cv[c])) ++c;
    for (auto* vec : {&cu, &cv}) {
      if (static_cast<int>(vec->size()) <= c) vec->resize(c + 1, false);
      (*vec)[c] = true;
    }
    out.color[i] = c;
    out.k = std::max(out.k, c + 1);
  }
  return out;
}

int chromatic_index_bruteforce(const MultiGraph& g) {
  const std::size_t ne = g.edges.size();
  if (ne > kBruteforceMaxEdges)
    throw std::invalid_argument("chromatic_index_bruteforce: " + std::to_string(ne) + " edges exceeds limit of " +
                                std::to_string(kBruteforceMaxEdges));
  if (has_self_loop(g)) throw std::invalid_argument("chromatic_index_bruteforce: graph has a self-loop");
  if (ne == 0) return 0;

  const std::uint32_t full = (1u << ne) - 1;
  // conflict[i]: edges sharing an endpoint with edge i (parallel edges included).
  std::vector<std::uint32_t> conflict(ne, 0);
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < ne; ++j) {
      if (i == j) continue;
      const auto& a = g.edges[i];
      const auto& b = g.edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) conflict[i] |= 1u << j;
    }
  std::vector<bool> matching(full + 1, false);
  matching[0] = true;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int low = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    matching[s] = matching[rest] && (conflict[low] & rest) == 0;
  }
  // best[s]: fewest matchings partitioning s. The matching covering the lowest
  // edge of s is enumerated among submasks of s containing that edge.
  constexpr int kInf = 1 << 20;
  std::vector<int> best(full + 1, kInf);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t others = s ^ low;
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      const std::uint32_t m = sub | low;
      if (matching[m] && best[s ^ m] + 1 < best[s]) best[s] = best[s ^ m] + 1;
      if (sub == 0) break;
    }
  }
  return best[full];
}

ProperReport verify_proper(const MultiGraph& g, const EdgeColoring& c) {
  ProperReport out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i >= c.color.size() || c.color[i] < 0 || (c.k > 0 && c.color[i] >= c.k)) out.uncolored.push_back(i);
  }
  if (out.partial()) return out;
  const auto inc = incidence(g);
  for (std::size_t v = 0; v < inc.size(); ++v) {
    const auto& list = inc[v];
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b)
        if (c.color[list[a]] == c.color[list[b]]) out.conflicts.push_back({v, list[a], list[b]});
  }
  return out;
}

bool color_classes_are_matchings(const MultiGraph& g, const EdgeColoring& c) {
  std::set<std::pair<std::size_t, int>> seen;  // (vertex, color)
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.u == e.v) return false;
    if (!seen.insert({e.u, c.color[i]}).second) return false;
    if (!seen.insert({e.v, c.color[i]}).second) return false;
  }
  return true;
}

}  // namespace latcol
