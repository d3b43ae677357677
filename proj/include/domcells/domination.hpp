#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "domcells/error.hpp"
#include "domcells/graph.hpp"
#include "domcells/vertex_set.hpp"

namespace domcells {

// Limits for gamma_exact. Node limits are deterministic; time limits are not.
struct SolverBudget {
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::uint64_t> node_limit;

  static SolverBudget unlimited() { return {}; }
  static SolverBudget seconds(double s) {
    return {std::chrono::milliseconds(static_cast<std::int64_t>(s * 1000.0)), std::nullopt};
  }
  static SolverBudget nodes(std::uint64_t n) { return {std::nullopt, n}; }
};

struct GammaResult {
  std::size_t gamma = 0;
  VertexSet witness;
  bool proven_optimal = false;
  // Proven lower bound on the domination number; equals gamma when proven.
  std::size_t lower_bound = 0;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

inline bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw Error(ErrorKind::InvalidArgument, "vertex set universe differs from graph order");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    bool hit = false;
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// First vertex left undominated by s, if any.
inline std::optional<Vertex> first_undominated(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    bool hit = false;
    for (Vertex w : g.neighbors(v)) hit = hit || s.contains(w);
    if (!hit) return v;
  }
  return std::nullopt;
}

inline VertexSet greedy_upper_bound(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::InvalidArgument, "empty graph");
  const auto closed = closed_neighborhoods(g);
  VertexSet uncovered = VertexSet::full(g.order());
  VertexSet chosen(g.order());
  while (!uncovered.empty()) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::size_t gain = (closed[v] & uncovered).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    chosen.insert(best);
    uncovered -= closed[best];
  }
  return chosen;
}

// gamma(P_n) = ceil(n / 3).
inline std::size_t gamma_path(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "path length must be positive");
  return (n + 2) / 3;
}

namespace detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
    return n;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  friend Bits andnot(const Bits& a, const Bits& b) {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] & ~b.w[i];
    return r;
  }
  Bits& operator|=(const Bits& b) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= b.w[i];
    return *this;
  }
  friend bool intersects(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < W; ++i)
      if (a.w[i] & b.w[i]) return true;
    return false;
  }
  friend std::size_t count_and(const Bits& a, const Bits& b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < W; ++i) n += static_cast<std::size_t>(std::popcount(a.w[i] & b.w[i]));
    return n;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < W; ++i) {
      auto x = w[i];
      while (x) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

struct SharedBudget {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<std::uint64_t> node_limit;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  bool tick() {
    ++nodes;
    if (node_limit && nodes > *node_limit) exhausted = true;
    if (deadline && (nodes & 1023U) == 0 && std::chrono::steady_clock::now() > *deadline)
      exhausted = true;
    return !exhausted;
  }
};

struct ComponentResult {
  std::vector<std::size_t> witness;  // local ids
  std::size_t lower_bound = 0;
  bool proven = false;
};

// Set cover over closed neighborhoods of one connected component.
//
// Branching: the uncovered vertex with the fewest allowed dominators; its
// allowed dominators are tried by decreasing coverage (ties: smallest id),
// and each tried dominator is forbidden in later sibling branches.
// Bounds: the incumbent starts from greedy plus redundancy removal; a node is
// pruned when depth + LB >= incumbent, where LB is the largest of
//   ceil(|U| / max coverage),
//   a dual-ascent weighting of the uncovered vertices,
//   a greedy packing of uncovered vertices with disjoint dominator sets,
//   a Lagrangian bound (subgradient), whose reduced costs also fix columns.
// Allowed vertices whose new coverage is dominated by another's are dropped.
template <std::size_t W>
class SetCoverSearch {
 public:
  SetCoverSearch(const std::vector<std::vector<std::size_t>>& adjacency, SharedBudget& budget)
      : n_(adjacency.size()), budget_(budget), closed_(n_), cover_(n_), slack_(n_), ascent_(n_, 0.0), warm_(n_, 0.0), row_of_(n_, 0) {
    for (std::size_t v = 0; v < n_; ++v) {
      closed_[v].set(v);
      for (auto w : adjacency[v]) closed_[v].set(w);
    }
  }

  ComponentResult run() {
    Bits<W> all;
    for (std::size_t v = 0; v < n_; ++v) all.set(v);
    best_ = greedy_with_pruning(all);
    std::size_t root_lb = lower_bound(all, all);
    if (root_lb < best_.size()) {
      const double lag = lagrangian(all, all, best_.size());
      root_lb = std::max(root_lb, static_cast<std::size_t>(std::ceil(lag - 1e-6)));
    }
    ComponentResult out;
    if (root_lb >= best_.size()) {
      out.witness = best_;
      out.lower_bound = best_.size();
      out.proven = true;
      return out;
    }
    current_.clear();
    search(all, all);
    out.witness = best_;
    out.proven = !budget_.exhausted;
    out.lower_bound = out.proven ? best_.size() : root_lb;
    return out;
  }

 private:
  std::vector<std::size_t> greedy_with_pruning(const Bits<W>& all) const {
    Bits<W> uncovered = all;
    std::vector<std::size_t> chosen;
    while (uncovered.any()) {
      std::size_t best = 0;
      std::size_t gain = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        const std::size_t g = count_and(closed_[v], uncovered);
        if (g > gain) {
          gain = g;
          best = v;
        }
      }
      chosen.push_back(best);
      uncovered = andnot(uncovered, closed_[best]);
    }
    // Drop members whose removal keeps the set dominating.
    for (std::size_t k = chosen.size(); k-- > 0;) {
      Bits<W> covered;
      for (std::size_t j = 0; j < chosen.size(); ++j)
        if (j != k) covered |= closed_[chosen[j]];
      if (andnot(all, covered).any() == false) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  // Returns a lower bound on the number of allowed vertices still needed, or
  // a value larger than n_ when some uncovered vertex has no allowed dominator.
  std::size_t lower_bound(const Bits<W>& uncovered, const Bits<W>& allowed) {
    const std::size_t u_count = uncovered.count();
    if (u_count == 0) return 0;
    std::size_t max_cover = 0;
    allowed.for_each([&](std::size_t c) {
      cover_[c] = count_and(closed_[c], uncovered);
      max_cover = std::max(max_cover, cover_[c]);
    });
    if (max_cover == 0) return n_ + 1;
    const std::size_t ratio = (u_count + max_cover - 1) / max_cover;

    // Dual-feasible weights: start each uncovered vertex at 1 / (best
    // coverage of its dominators), then raise weights while every allowed
    // dominator's neighborhood total stays <= 1.
    bool infeasible = false;
    allowed.for_each([&](std::size_t c) { slack_[c] = 1.0; });
    double weight_sum = 0.0;
    uncovered.for_each([&](std::size_t u) {
      std::size_t best = 0;
      (closed_[u] & allowed).for_each([&](std::size_t c) { best = std::max(best, cover_[c]); });
      if (best == 0) {
        infeasible = true;
        return;
      }
      const double w = 1.0 / static_cast<double>(best);
      ascent_[u] = w;
      weight_sum += w;
      (closed_[u] & allowed).for_each([&](std::size_t c) { slack_[c] -= w; });
    });
    if (infeasible) return n_ + 1;
    const auto frac = static_cast<std::size_t>(std::ceil(weight_sum - 1e-9));
    uncovered.for_each([&](std::size_t u) {
      const Bits<W> doms = closed_[u] & allowed;
      double raise = 1.0;
      doms.for_each([&](std::size_t c) { raise = std::min(raise, slack_[c]); });
      if (raise <= 1e-12) return;
      ascent_[u] += raise;
      weight_sum += raise;
      doms.for_each([&](std::size_t c) { slack_[c] -= raise; });
    });
    const auto dual = static_cast<std::size_t>(std::ceil(weight_sum - 1e-7));

    Bits<W> blocked;
    std::size_t packing = 0;
    uncovered.for_each([&](std::size_t u) {
      const Bits<W> doms = closed_[u] & allowed;
      if (!intersects(doms, blocked)) {
        blocked |= doms;
        ++packing;
      }
    });
    return std::max({ratio, frac, dual, packing});
  }

  // Removes allowed vertices that cover nothing new, and those whose new
  // coverage is contained in another allowed vertex's (equal sets keep the
  // smaller id). Some optimal completion survives the removal.
  void drop_dominated(const Bits<W>& uncovered, Bits<W>& allowed) {
    const Bits<W> snapshot = allowed;
    snapshot.for_each([&](std::size_t c) {
      const Bits<W> mine = closed_[c] & uncovered;
      if (!mine.any()) {
        allowed.reset(c);
        return;
      }
      std::size_t anchor = 0;
      mine.for_each([&](std::size_t u) { anchor = u; });
      const std::size_t mine_count = mine.count();
      bool dominated = false;
      (closed_[anchor] & snapshot).for_each([&](std::size_t other) {
        if (dominated || other == c) return;
        const Bits<W> theirs = closed_[other] & uncovered;
        if (andnot(mine, theirs).any()) return;
        if (theirs.count() > mine_count || other < c) dominated = true;
      });
      if (dominated) allowed.reset(c);
    });
  }

  // Lagrangian bound for covering `uncovered` with `allowed` columns, via
  // subgradient steps from the better of the warm-start multipliers and the
  // dual-ascent weights. Leaves reduced costs of the best multipliers in
  // reduced_ and returns the bound value.
  double lagrangian(const Bits<W>& uncovered, const Bits<W>& allowed, std::size_t target) {
    rows_.clear();
    cols_.clear();
    uncovered.for_each([&](std::size_t u) { rows_.push_back(u); });
    allowed.for_each([&](std::size_t c) { cols_.push_back(c); });
    for (std::size_t r = 0; r < rows_.size(); ++r) row_of_[rows_[r]] = r;
    col_start_.assign(1, 0);
    col_rows_.clear();
    for (auto c : cols_) {
      (closed_[c] & uncovered).for_each([&](std::size_t u) { col_rows_.push_back(row_of_[u]); });
      col_start_.push_back(col_rows_.size());
    }

    auto evaluate = [&](const std::vector<double>& lambda, std::vector<double>& reduced) {
      double value = 0.0;
      for (double l : lambda) value += l;
      reduced.resize(cols_.size());
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        double rc = 1.0;
        for (std::size_t k = col_start_[j]; k < col_start_[j + 1]; ++k) rc -= lambda[col_rows_[k]];
        reduced[j] = rc;
        if (rc < 0.0) value += rc;
      }
      return value;
    };

    lambda_now_.resize(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) lambda_now_[r] = warm_[rows_[r]];
    double value = evaluate(lambda_now_, reduced_now_);
    double ascent_sum = 0.0;
    for (auto u : rows_) ascent_sum += ascent_[u];
    if (ascent_sum > value) {
      for (std::size_t r = 0; r < rows_.size(); ++r) lambda_now_[r] = ascent_[rows_[r]];
      value = evaluate(lambda_now_, reduced_now_);
    }
    double best_value = value;
    lambda_best_ = lambda_now_;
    reduced_ = reduced_now_;

    const double goal = static_cast<double>(target);
    double step_scale = 1.0;
    int stale = 0;
    std::vector<double>& grad = grad_;
    grad.resize(rows_.size());
    for (int iter = 0; iter < iterations_; ++iter) {
      if (std::ceil(best_value - 1e-6) >= goal) break;
      std::fill(grad.begin(), grad.end(), 1.0);
      for (std::size_t j = 0; j < cols_.size(); ++j)
        if (reduced_now_[j] < 0.0)
          for (std::size_t k = col_start_[j]; k < col_start_[j + 1]; ++k) grad[col_rows_[k]] -= 1.0;
      double norm = 0.0;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (lambda_now_[r] <= 0.0 && grad[r] < 0.0) grad[r] = 0.0;
        norm += grad[r] * grad[r];
      }
      if (norm == 0.0) break;
      const double t = step_scale * (goal - value) / norm;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        lambda_now_[r] = std::max(0.0, lambda_now_[r] + t * grad[r]);
      value = evaluate(lambda_now_, reduced_now_);
      if (value > best_value + 1e-9) {
        best_value = value;
        lambda_best_ = lambda_now_;
        reduced_ = reduced_now_;
        stale = 0;
      } else if (++stale >= 4) {
        step_scale *= 0.5;
        stale = 0;
      }
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) warm_[rows_[r]] = lambda_best_[r];
    return best_value;
  }

  void search(const Bits<W>& uncovered, Bits<W> allowed) {
    if (!budget_.tick()) return;
    if (!uncovered.any()) {
      if (current_.size() < best_.size()) {
        best_ = current_;
        std::sort(best_.begin(), best_.end());
      }
      return;
    }
    drop_dominated(uncovered, allowed);
    const std::size_t lb = lower_bound(uncovered, allowed);
    if (current_.size() + lb >= best_.size()) return;

    // Reduced-cost fixing against the remaining allowance.
    const std::size_t target = best_.size() - current_.size();
    const double bound = lagrangian(uncovered, allowed, target);
    if (std::ceil(bound - 1e-6) >= static_cast<double>(target)) return;
    std::vector<std::size_t> forced;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const double rc = reduced_[j];
      if (rc >= 0.0 && std::ceil(bound + rc - 1e-6) >= static_cast<double>(target))
        allowed.reset(cols_[j]);
      else if (rc < 0.0 && std::ceil(bound - rc - 1e-6) >= static_cast<double>(target))
        forced.push_back(cols_[j]);
    }
    if (!forced.empty()) {
      Bits<W> rest = uncovered;
      for (auto c : forced) {
        current_.push_back(c);
        rest = andnot(rest, closed_[c]);
        allowed.reset(c);
      }
      if (current_.size() < best_.size()) search(rest, allowed);
      current_.resize(current_.size() - forced.size());
      return;
    }

    std::size_t pivot = n_;
    std::size_t pivot_options = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](std::size_t u) {
      const std::size_t options = count_and(closed_[u], allowed);
      if (options < pivot_options) {
        pivot_options = options;
        pivot = u;
      }
    });
    if (pivot_options == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> children;  // (coverage, id)
    (closed_[pivot] & allowed).for_each([&](std::size_t c) { children.emplace_back(cover_[c], c); });
    std::sort(children.begin(), children.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    for (const auto& [coverage, c] : children) {
      if (current_.size() + 1 >= best_.size() || budget_.exhausted) break;
      current_.push_back(c);
      search(andnot(uncovered, closed_[c]), allowed);
      current_.pop_back();
      allowed.reset(c);
    }
  }

  std::size_t n_;
  SharedBudget& budget_;
  std::vector<Bits<W>> closed_;
  std::vector<std::size_t> cover_;
  std::vector<double> slack_;
  std::vector<double> ascent_;
  std::vector<double> warm_;
  int iterations_ = 30;
  // Per-node scratch for the Lagrangian bound.
  std::vector<std::size_t> rows_, cols_, row_of_, col_start_, col_rows_;
  std::vector<double> lambda_now_, lambda_best_, reduced_now_, reduced_, grad_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
};

inline ComponentResult solve_component(const std::vector<std::vector<std::size_t>>& adjacency,
                                       SharedBudget& budget) {
  const std::size_t n = adjacency.size();
  if (n <= 64) return SetCoverSearch<1>(adjacency, budget).run();
  if (n <= 128) return SetCoverSearch<2>(adjacency, budget).run();
  if (n <= 192) return SetCoverSearch<3>(adjacency, budget).run();
  if (n <= 256) return SetCoverSearch<4>(adjacency, budget).run();
  if (n <= 512) return SetCoverSearch<8>(adjacency, budget).run();
  if (n <= 1024) return SetCoverSearch<16>(adjacency, budget).run();
  if (n <= 4096) return SetCoverSearch<64>(adjacency, budget).run();
  throw Error(ErrorKind::InvalidArgument,
              "connected component of order " + std::to_string(n) + " exceeds exact solver limit 4096");
}

}  // namespace detail

// Exact domination number by branch and bound, solved per connected
// component. Deterministic for a given graph (and node budget).
inline GammaResult gamma_exact(const Graph& g, const SolverBudget& budget = {}) {
  if (g.order() == 0) throw Error(ErrorKind::InvalidArgument, "empty graph");
  const auto start = std::chrono::steady_clock::now();
  detail::SharedBudget shared;
  if (budget.time_limit) shared.deadline = start + *budget.time_limit;
  shared.node_limit = budget.node_limit;

  const std::size_t n = g.order();
  std::vector<std::size_t> component(n, n);
  GammaResult result;
  result.witness = VertexSet(n);
  result.proven_optimal = true;

  for (Vertex root = 0; root < n; ++root) {
    if (component[root] != n) continue;
    std::vector<Vertex> members{root};
    component[root] = root;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Vertex w : g.neighbors(members[head]))
        if (component[w] == n) {
          component[w] = root;
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    std::vector<std::size_t> local(n, 0);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
    std::vector<std::vector<std::size_t>> adjacency(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w : g.neighbors(members[i])) adjacency[i].push_back(local[w]);

    const auto part = detail::solve_component(adjacency, shared);
    for (auto v : part.witness) result.witness.insert(members[v]);
    result.lower_bound += part.lower_bound;
    result.proven_optimal = result.proven_optimal && part.proven;
  }
  result.gamma = result.witness.size();
  result.nodes_explored = shared.nodes;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace domcells
