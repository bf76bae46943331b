#pragma once

// Backtracking solver for magic labelings of an incidence structure, plus a
// plain permutation counter used as an independent oracle.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "magicpoly/properties.hpp"
#include "magicpoly/structure.hpp"
#include "magicpoly/verify.hpp"

namespace magicpoly {

enum class SearchMode { First, CountAll, EnumerateAll };
enum class SearchStatus { Complete, Truncated };

inline const char* to_string(SearchStatus s) {
  return s == SearchStatus::Complete ? "Complete" : "Truncated";
}

struct SearchOptions {
  SearchMode mode = SearchMode::First;
  bool fix_center = true;
  // Upper bound on branching assignments.
  std::optional<std::uint64_t> node_limit;
  bool parallel = false;
  // Worker count for parallel runs; 0 selects hardware concurrency.
  unsigned threads = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t count = 0;
  std::vector<Labeling> solutions;  // canonical (lexicographic) order
  std::uint64_t nodes_explored = 0;
};

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Budget {
  std::atomic<std::uint64_t> used{0};
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  std::atomic<bool> exhausted{false};

  bool take() {
    if (used.fetch_add(1, std::memory_order_relaxed) >= limit) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  std::uint64_t explored() const { return std::min(used.load(), limit); }
};

class Solver {
 public:
  Solver(const IncidenceStructure& s, std::int64_t u)
      : s_(&s),
        u_(u),
        n_(static_cast<std::int64_t>(s.point_count)),
        value_(s.point_count, 0),
        used_(s.point_count + 1, false),
        point_segs_(s.point_count),
        seg_sum_(s.segments.size(), 0),
        seg_open_(s.segments.size(), 0) {
    for (std::size_t i = 0; i < s.segments.size(); ++i) {
      seg_open_[i] = static_cast<int>(s.segments[i].points.size());
      for (auto p : s.segments[i].points) point_segs_[p].push_back(i);
    }
  }

  // Assigns p = v and propagates forced completions. On failure the state is
  // rolled back and false returned.
  bool assign_and_propagate(PointId p, std::int64_t v) {
    const std::size_t mark = trail_.size();
    if (!consistent_after(p, v)) {
      undo_to(mark);
      return false;
    }
    return true;
  }

  std::size_t trail_size() const { return trail_.size(); }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const PointId p = trail_.back();
      trail_.pop_back();
      const std::int64_t v = value_[p];
      for (auto sidx : point_segs_[p]) {
        seg_sum_[sidx] -= v;
        ++seg_open_[sidx];
      }
      used_[static_cast<std::size_t>(v)] = false;
      value_[p] = 0;
    }
  }

  // Fail-first: the unassigned point lying on the segment with the most
  // assigned points; ties go to the smallest id.
  std::optional<PointId> choose() const {
    std::optional<PointId> best;
    int best_score = -1;
    for (PointId p = 0; p < value_.size(); ++p) {
      if (value_[p] != 0) continue;
      int score = 0;
      for (auto sidx : point_segs_[p]) {
        const int assigned =
            static_cast<int>(s_->segments[sidx].points.size()) - seg_open_[sidx];
        score = std::max(score, assigned);
      }
      if (score > best_score) {
        best_score = score;
        best = p;
      }
    }
    return best;
  }

  bool is_used(std::int64_t v) const { return used_[static_cast<std::size_t>(v)]; }
  std::int64_t max_value() const { return n_; }
  Labeling labeling() const { return Labeling{value_}; }

 private:
  void put(PointId p, std::int64_t v) {
    value_[p] = v;
    used_[static_cast<std::size_t>(v)] = true;
    for (auto sidx : point_segs_[p]) {
      seg_sum_[sidx] += v;
      --seg_open_[sidx];
    }
    trail_.push_back(p);
  }

  bool consistent_after(PointId p, std::int64_t v) {
    if (v < 1 || v > n_ || is_used(v) || value_[p] != 0) return false;
    put(p, v);
    std::vector<std::size_t> queue(point_segs_[p].begin(), point_segs_[p].end());
    while (!queue.empty()) {
      const std::size_t sidx = queue.back();
      queue.pop_back();
      const int open = seg_open_[sidx];
      const std::int64_t need = u_ - seg_sum_[sidx];
      if (open == 0) {
        if (need != 0) return false;
        continue;
      }
      if (open == 1) {
        PointId last = 0;
        for (auto q : s_->segments[sidx].points) {
          if (value_[q] == 0) {
            last = q;
            break;
          }
        }
        if (need < 1 || need > n_ || is_used(need)) return false;
        put(last, need);
        for (auto other : point_segs_[last]) {
          if (other != sidx) queue.push_back(other);
        }
        continue;
      }
      // Open distinct values must fit between the smallest and largest sums
      // of `open` distinct labels.
      const std::int64_t lo = std::int64_t{open} * (open + 1) / 2;
      const std::int64_t hi = std::int64_t{open} * n_ - std::int64_t{open} * (open - 1) / 2;
      if (need < lo || need > hi) return false;
    }
    return true;
  }

  const IncidenceStructure* s_;
  std::int64_t u_;
  std::int64_t n_;
  std::vector<std::int64_t> value_;
  std::vector<bool> used_;
  std::vector<std::vector<std::size_t>> point_segs_;
  std::vector<std::int64_t> seg_sum_;
  std::vector<int> seg_open_;
  std::vector<PointId> trail_;
};

struct Collector {
  explicit Collector(SearchMode m) : mode(m) {}

  SearchMode mode;
  std::uint64_t count = 0;
  std::vector<Labeling> solutions;
};

// Returns true when the search should stop (first solution found, budget
// exhausted, or the caller asked to stop).
template <typename StopFn>
bool dfs(Solver& solver, Collector& out, Budget& budget, const StopFn& stop) {
  const auto var = solver.choose();
  if (!var) {
    ++out.count;
    if (out.mode != SearchMode::CountAll) out.solutions.push_back(solver.labeling());
    return out.mode == SearchMode::First;
  }
  for (std::int64_t v = 1; v <= solver.max_value(); ++v) {
    if (solver.is_used(v)) continue;
    if (stop()) return true;
    if (!budget.take()) return true;
    const std::size_t mark = solver.trail_size();
    if (solver.assign_and_propagate(*var, v)) {
      const bool halt = dfs(solver, out, budget, stop);
      solver.undo_to(mark);
      if (halt) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Finds, counts, or enumerates the magic labelings of `structure`.
///
/// Parallel runs split the tree at the first branching point; merged results
/// are canonically ordered and equal the serial ones whenever the search
/// completes. With a node limit the set reached by a truncated parallel run
/// depends on scheduling.
inline SearchResult solve(const IncidenceStructure& structure,
                          const SearchOptions& options) {
  SearchResult result;
  const MagicConstants mc = constants(structure.spec);
  if (!is_integral(mc.c) || !is_integral(mc.u)) return result;
  const std::int64_t u = mc.u.numerator();

  detail::Budget budget;
  if (options.node_limit) budget.limit = *options.node_limit;

  detail::Solver root(structure, u);
  if (options.fix_center && !root.assign_and_propagate(0, mc.c.numerator())) {
    return result;
  }

  auto finish = [&](std::uint64_t count, std::vector<Labeling> solutions) {
    std::sort(solutions.begin(), solutions.end());
    result.count = count;
    result.solutions = std::move(solutions);
    result.nodes_explored = budget.explored();
    result.status =
        budget.exhausted.load() ? SearchStatus::Truncated : SearchStatus::Complete;
    return result;
  };

  if (!options.parallel) {
    detail::Collector out{options.mode};
    detail::dfs(root, out, budget, [] { return false; });
    return finish(out.count, std::move(out.solutions));
  }

  const auto var = root.choose();
  if (!var) {
    // Fully determined by the center alone (never happens for n >= 3).
    detail::Collector out{options.mode};
    detail::dfs(root, out, budget, [] { return false; });
    return finish(out.count, std::move(out.solutions));
  }

  std::vector<std::int64_t> branch_values;
  for (std::int64_t v = 1; v <= root.max_value(); ++v) {
    if (!root.is_used(v)) branch_values.push_back(v);
  }
  std::vector<detail::Collector> branches(branch_values.size(),
                                          detail::Collector{options.mode});
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= branch_values.size()) return;
      if (b > first_hit.load()) continue;
      if (budget.exhausted.load()) return;
      if (!budget.take()) return;
      detail::Solver local = root;
      if (!local.assign_and_propagate(*var, branch_values[b])) continue;
      auto stop = [&] {
        return options.mode == SearchMode::First && first_hit.load() < b;
      };
      detail::dfs(local, branches[b], budget, stop);
      if (options.mode == SearchMode::First && branches[b].count > 0) {
        std::size_t cur = first_hit.load();
        while (b < cur && !first_hit.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };

  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(branch_values.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::uint64_t count = 0;
  std::vector<Labeling> solutions;
  if (options.mode == SearchMode::First) {
    for (auto& b : branches) {
      if (b.count > 0) {
        count = 1;
        solutions.push_back(std::move(b.solutions.front()));
        break;
      }
    }
    // A witness makes a First search complete even if other workers ran dry.
    if (count == 1) budget.exhausted.store(false);
  } else {
    for (auto& b : branches) {
      count += b.count;
      for (auto& l : b.solutions) solutions.push_back(std::move(l));
    }
  }
  return finish(count, std::move(solutions));
}

/// Counts labelings of `structure` by testing every permutation of 1..N and
/// requiring all segment sums to coincide. Guarded to N <= 11.
inline std::uint64_t brute_force_count(const IncidenceStructure& structure) {
  const std::size_t n = structure.point_count;
  if (n > 11) {
    throw TooLarge("brute force limited to 11 points, structure has " +
                   std::to_string(n));
  }
  std::vector<std::int64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    std::int64_t target = 0;
    for (std::size_t i = 0; i < structure.segments.size() && ok; ++i) {
      std::int64_t sum = 0;
      for (auto p : structure.segments[i].points) sum += perm[p];
      if (i == 0) {
        target = sum;
      } else {
        ok = sum == target;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace magicpoly
