// Misra & Gries constructive edge coloring with at most max_degree + 1 colors.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "latcol/coloring.hpp"

namespace latcol {
namespace {

constexpr int kNone = -1;

class MisraGries {
 public:
  MisraGries(const MultiGraph& g, MisraGriesStats& stats)
      : g_(g), stats_(stats), palette_(max_degree(g) + 1),
        at_(g.vertex_count * static_cast<std::size_t>(palette_), kNone),
        color_(g.edges.size(), kUncolored) {}

  EdgeColoring run() {
    std::vector<std::size_t> order(g_.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto ka = std::minmax(g_.edges[a].u, g_.edges[a].v);
      const auto kb = std::minmax(g_.edges[b].u, g_.edges[b].v);
      return ka != kb ? ka < kb : a < b;
    });
    for (const auto e : order) color_edge(e);
    EdgeColoring out{color_, 0};
    for (int c : color_) out.k = std::max(out.k, c + 1);
    return out;
  }

 private:
  [[nodiscard]] int& slot(std::size_t v, int c) { return at_[v * static_cast<std::size_t>(palette_) + c]; }
  [[nodiscard]] int slot(std::size_t v, int c) const { return at_[v * static_cast<std::size_t>(palette_) + c]; }
  [[nodiscard]] bool is_free(std::size_t v, int c) const { return slot(v, c) == kNone; }

  [[nodiscard]] std::size_t other(std::size_t e, std::size_t v) const {
    return g_.edges[e].u == v ? g_.edges[e].v : g_.edges[e].u;
  }

  void set_color(std::size_t e, int c) {
    const auto& ed = g_.edges[e];
    if (color_[e] != kUncolored) {
      slot(ed.u, color_[e]) = kNone;
      slot(ed.v, color_[e]) = kNone;
    }
    color_[e] = c;
    if (c != kUncolored) {
      slot(ed.u, c) = static_cast<int>(e);
      slot(ed.v, c) = static_cast<int>(e);
    }
  }

  [[nodiscard]] int free_color(std::size_t v) const {
    for (int c = 0; c < palette_; ++c)
      if (is_free(v, c)) return c;
    throw std::logic_error("misra_gries: no free color at a vertex");
  }

  // Fan entries are edge ids of edges (u, f_i); entry 0 is the uncolored edge.
  std::vector<std::size_t> maximal_fan(std::size_t u, std::size_t first_edge) {
    std::vector<std::size_t> fan{first_edge};
    std::vector<std::size_t> members{other(first_edge, u)};
    for (;;) {
      const std::size_t last = members.back();
      bool extended = false;
      for (int c = 0; c < palette_ && !extended; ++c) {
        ++stats_.fan_steps;
        if (!is_free(last, c)) continue;
        const int e = slot(u, c);
        if (e == kNone) continue;
        const std::size_t x = other(static_cast<std::size_t>(e), u);
        if (std::find(members.begin(), members.end(), x) != members.end()) continue;
        fan.push_back(static_cast<std::size_t>(e));
        members.push_back(x);
        extended = true;
      }
      if (!extended) return fan;
    }
  }

  // Swaps colors c and d along the maximal path from u that alternates d, c, d, ...
  void invert_cd_path(std::size_t u, int c, int d) {
    std::vector<std::size_t> path;
    std::size_t x = u;
    int want = d;
    for (;;) {
      ++stats_.path_steps;
      const int e = slot(x, want);
      if (e == kNone) break;
      if (!path.empty() && static_cast<std::size_t>(e) == path.back()) break;
      path.push_back(static_cast<std::size_t>(e));
      x = other(static_cast<std::size_t>(e), x);
      want = want == d ? c : d;
    }
    std::vector<int> old(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      old[i] = color_[path[i]];
      set_color(path[i], kUncolored);
    }
    for (std::size_t i = 0; i < path.size(); ++i) set_color(path[i], old[i] == c ? d : c);
  }

  [[nodiscard]] bool is_fan_prefix(std::size_t u, const std::vector<std::size_t>& fan, std::size_t len) const {
    if (color_[fan[0]] != kUncolored) return false;
    for (std::size_t j = 1; j < len; ++j) {
      const int cj = color_[fan[j]];
      if (cj == kUncolored || !is_free(other(fan[j - 1], u), cj)) return false;
    }
    return true;
  }

  void color_edge(std::size_t e) {
    const std::size_t u = std::min(g_.edges[e].u, g_.edges[e].v);
    const auto fan = maximal_fan(u, e);
    const int c = free_color(u);
    const int d = free_color(other(fan.back(), u));
    if (c != d) invert_cd_path(u, c, d);

    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (is_free(other(fan[i], u), d) && is_fan_prefix(u, fan, i + 1)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw std::logic_error("misra_gries: no fan vertex admits the path color");
    for (std::size_t j = 0; j < w; ++j) {
      const int next = color_[fan[j + 1]];
      set_color(fan[j + 1], kUncolored);
      set_color(fan[j], next);
    }
    set_color(fan[w], d);
  }

  const MultiGraph& g_;
  MisraGriesStats& stats_;
  int palette_;
  std::vector<int> at_;  // (vertex, color) -> edge id
  std::vector<int> color_;
};

void require_simple(const MultiGraph& g) {
  if (has_self_loop(g)) throw std::invalid_argument("misra_gries: graph has a self-loop");
  if (has_multi_edge(g)) throw std::invalid_argument("misra_gries: graph has parallel edges");
}

}  // namespace

EdgeColoring misra_gries_instrumented(const MultiGraph& g, MisraGriesStats& stats) {
  require_simple(g);
  return MisraGries(g, stats).run();
}

EdgeColoring misra_gries(const MultiGraph& g) {
  MisraGriesStats stats;
  return misra_gries_instrumented(g, stats);
}

}  // namespace latcol
