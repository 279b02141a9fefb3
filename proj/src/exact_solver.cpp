// Complete edge-coloring search: forward checking with conflict-directed
// backjumping over the line graph, dynamic most-constrained-edge ordering.

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "latcol/coloring.hpp"

namespace latcol {
namespace {

class LevelSet {
 public:
  explicit LevelSet(std::size_t capacity = 0) : words_((capacity + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void merge(const LevelSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }
  void insert_below(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) insert(i);
  }
  // Largest member, or -1 if empty.
  [[nodiscard]] long max() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w] != 0) return static_cast<long>(w * 64 + 63 - std::countl_zero(words_[w]));
    }
    return -1;
  }

 private:
  std::vector<std::uint64_t> words_;
};

class ExactSolver {
 public:
  ExactSolver(const MultiGraph& g, int k, std::optional<std::uint64_t> budget)
      : g_(g), k_(k), full_(k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1), budget_(budget),
        ne_(g.edges.size()) {}

  ExactResult solve() {
    ExactResult result;
    if (ne_ == 0) {
      result.status = ExactStatus::kSat;
      result.coloring = {{}, k_};
      return result;
    }
    if (trivially_unsat()) return result;
    build();

    const auto status = search();
    result.status = status;
    result.steps = steps_;
    if (status == ExactStatus::kSat) result.coloring = {color_, k_};
    return result;
  }

 private:
  struct Level {
    std::size_t edge = 0;
    std::uint64_t remaining = 0;
    std::size_t trail_mark = 0;
    bool pinned = false;
    bool chronological = false;
    LevelSet conflict;
  };

  // Max degree and overfull tests: a class of k matchings covers at most
  // k * floor(|V|/2) edges of any component.
  bool trivially_unsat() const {
    if (max_degree(g_) > k_) return true;
    const auto comp = connected_components(g_);
    const std::size_t nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::size_t> nv(nc, 0), nedge(nc, 0);
    for (std::size_t v = 0; v < g_.vertex_count; ++v) ++nv[comp[v]];
    for (const auto& e : g_.edges) ++nedge[comp[e.u]];
    for (std::size_t c = 0; c < nc; ++c)
      if (nedge[c] > static_cast<std::size_t>(k_) * (nv[c] / 2)) return true;
    return false;
  }

  void build() {
    inc_.assign(g_.vertex_count, {});
    for (std::size_t i = 0; i < ne_; ++i) {
      inc_[g_.edges[i].u].push_back(i);
      inc_[g_.edges[i].v].push_back(i);
    }
    const auto deg = degrees(g_);
    adj_.assign(ne_, {});
    for (std::size_t i = 0; i < ne_; ++i) {
      auto& a = adj_[i];
      for (const auto v : {g_.edges[i].u, g_.edges[i].v})
        for (const auto f : inc_[v])
          if (f != i) a.push_back(f);
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    // Static tie-break: larger endpoint-degree sum first, then edge id.
    std::vector<std::size_t> order(ne_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return deg[g_.edges[a].u] + deg[g_.edges[a].v] > deg[g_.edges[b].u] + deg[g_.edges[b].v];
    });
    rank_.assign(ne_, 0);
    for (std::size_t r = 0; r < ne_; ++r) rank_[order[r]] = r;

    domain_.assign(ne_, full_);
    removed_by_.assign(ne_ * static_cast<std::size_t>(k_), -1);
    color_.assign(ne_, kUncolored);
    color_count_.assign(static_cast<std::size_t>(k_), 0);
    unassigned_.resize(ne_);
    std::iota(unassigned_.begin(), unassigned_.end(), 0);
    position_.resize(ne_);
    std::iota(position_.begin(), position_.end(), 0);
    levels_.reserve(ne_);
  }

  void add_reasons(std::size_t f, std::uint64_t colors, LevelSet& out) const {
    for (std::uint64_t m = colors; m != 0; m &= m - 1) {
      const int c = std::countr_zero(m);
      const int r = removed_by_[f * static_cast<std::size_t>(k_) + c];
      if (r >= 0) out.insert(static_cast<std::size_t>(r));
    }
  }

  void mark_assigned(std::size_t e) {
    const std::size_t p = position_[e];
    const std::size_t last = unassigned_.back();
    unassigned_[p] = last;
    position_[last] = p;
    unassigned_.pop_back();
  }

  void mark_unassigned(std::size_t e) {
    position_[e] = unassigned_.size();
    unassigned_.push_back(e);
  }

  // Pigeonhole at vertex v: its uncolored edges need as many distinct colors.
  bool vertex_ok(std::size_t v, LevelSet& reasons) const {
    std::uint64_t avail = 0;
    int open = 0;
    for (const auto f : inc_[v]) {
      if (color_[f] != kUncolored) continue;
      ++open;
      avail |= domain_[f];
    }
    if (std::popcount(avail) >= open) return true;
    const std::uint64_t missing = full_ & ~avail;
    for (const auto f : inc_[v])
      if (color_[f] == kUncolored) add_reasons(f, missing, reasons);
    return false;
  }

  // Assigns c to e at level `lvl` and forward-checks. On failure, fills
  // `reasons` with the levels responsible (possibly including `lvl`).
  bool assign(std::size_t lvl, std::size_t e, int c, LevelSet& reasons) {
    color_[e] = c;
    ++color_count_[static_cast<std::size_t>(c)];
    mark_assigned(e);
    const std::uint64_t bit = std::uint64_t{1} << c;
    touched_.clear();
    for (const auto f : adj_[e]) {
      if (color_[f] != kUncolored || (domain_[f] & bit) == 0) continue;
      domain_[f] &= ~bit;
      removed_by_[f * static_cast<std::size_t>(k_) + c] = static_cast<int>(lvl);
      trail_.push_back({static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(c)});
      if (domain_[f] == 0) {
        add_reasons(f, full_, reasons);
        return false;
      }
      touched_.push_back(g_.edges[f].u);
      touched_.push_back(g_.edges[f].v);
    }
    touched_.push_back(g_.edges[e].u);
    touched_.push_back(g_.edges[e].v);
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    for (const auto v : touched_)
      if (!vertex_ok(v, reasons)) return false;
    return true;
  }

  void unassign(const Level& lv) {
    while (trail_.size() > lv.trail_mark) {
      const auto [f, c] = trail_.back();
      trail_.pop_back();
      domain_[f] |= std::uint64_t{1} << c;
    }
    const std::size_t e = lv.edge;
    if (color_[e] != kUncolored) {
      --color_count_[static_cast<std::size_t>(color_[e])];
      color_[e] = kUncolored;
      mark_unassigned(e);
    }
  }

  [[nodiscard]] long select_edge() const {
    long best = -1;
    int best_size = 65;
    for (const auto e : unassigned_) {
      const int size = std::popcount(domain_[e]);
      if (size < best_size || (size == best_size && rank_[e] < rank_[static_cast<std::size_t>(best)])) {
        best = static_cast<long>(e);
        best_size = size;
      }
    }
    return best;
  }

  [[nodiscard]] int max_color_in_use() const {
    for (int c = k_ - 1; c >= 0; --c)
      if (color_count_[static_cast<std::size_t>(c)] > 0) return c;
    return -1;
  }

  Level& push_level(std::size_t e) {
    levels_.emplace_back();
    Level& lv = levels_.back();
    lv.edge = e;
    lv.trail_mark = trail_.size();
    lv.conflict = LevelSet(ne_);
    return lv;
  }

  // Palette symmetry: the edges at a maximum-degree vertex are pairwise
  // adjacent, so any coloring can be permuted to give them colors 0, 1, ...
  bool pin_star() {
    const auto deg = degrees(g_);
    const auto v0 = static_cast<std::size_t>(std::max_element(deg.begin(), deg.end()) - deg.begin());
    std::vector<std::size_t> star = inc_[v0];
    std::sort(star.begin(), star.end(), [&](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
    LevelSet scratch(ne_);
    int c = 0;
    for (const auto e : star) {
      Level& lv = push_level(e);
      lv.pinned = true;
      ++steps_;
      if (!assign(levels_.size() - 1, e, c++, scratch)) return false;
    }
    return true;
  }

  ExactStatus search() {
    if (!pin_star()) return ExactStatus::kUnsat;
    LevelSet reasons(ne_);
    LevelSet cs(ne_);
    bool descend = true;
    for (;;) {
      if (descend) {
        const long pick = select_edge();
        if (pick < 0) return ExactStatus::kSat;
        const auto e = static_cast<std::size_t>(pick);
        const int limit = max_color_in_use() + 1;  // fresh colors only in ascending order
        const std::uint64_t allowed = limit + 1 >= 64 ? full_ : ((std::uint64_t{1} << (limit + 1)) - 1);
        Level& lv = push_level(e);
        lv.remaining = domain_[e] & allowed;
        lv.chronological = (domain_[e] & ~allowed) != 0;
      }
      const std::size_t lvl = levels_.size() - 1;
      Level& lv = levels_[lvl];
      if (lv.remaining != 0) {
        const int c = std::countr_zero(lv.remaining);
        lv.remaining &= lv.remaining - 1;
        ++steps_;
        if (budget_ && steps_ > *budget_) return ExactStatus::kBudgetExceeded;
        reasons.clear();
        if (assign(lvl, lv.edge, c, reasons)) {
          descend = true;
          continue;
        }
        reasons.erase(lvl);
        lv.conflict.merge(reasons);
        unassign(lv);
        descend = false;
        continue;
      }

      // Every value of this edge failed: jump to the deepest responsible level.
      cs = lv.conflict;
      add_reasons(lv.edge, full_ & ~domain_[lv.edge], cs);
      if (lv.chronological) cs.insert_below(lvl);
      cs.erase(lvl);
      levels_.pop_back();
      const long h = cs.max();
      if (h < 0 || levels_[static_cast<std::size_t>(h)].pinned) return ExactStatus::kUnsat;
      while (levels_.size() > static_cast<std::size_t>(h) + 1) {
        unassign(levels_.back());
        levels_.pop_back();
      }
      Level& target = levels_.back();
      unassign(target);
      cs.erase(static_cast<std::size_t>(h));
      target.conflict.merge(cs);
      descend = false;
    }
  }

  const MultiGraph& g_;
  int k_;
  std::uint64_t full_;
  std::optional<std::uint64_t> budget_;
  std::size_t ne_;
  std::uint64_t steps_ = 0;

  std::vector<std::vector<std::size_t>> inc_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> rank_;
  std::vector<std::uint64_t> domain_;
  std::vector<int> removed_by_;
  std::vector<int> color_;
  std::vector<int> color_count_;
  std::vector<std::size_t> unassigned_;
  std::vector<std::size_t> position_;
  std::vector<Level> levels_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> trail_;
  std::vector<std::size_t> touched_;
};

}  // namespace

ExactResult exact_color(const MultiGraph& g, int k, std::optional<std::uint64_t> step_budget) {
  if (k < 1 || k > 64) throw std::invalid_argument("exact_color: k must be in [1, 64], got " + std::to_string(k));
  if (has_self_loop(g)) throw std::invalid_argument("exact_color: graph has a self-loop");
  return ExactSolver(g, k, step_budget).solve();
}

}  // namespace latcol
