#pragma once

// Explicit witnesses: closed-form labelings of P(n,2) and D(n,2), and a
// bounded search for P(n,4) within the complementary-ring hypothesis space.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "magicpoly/structure.hpp"
#include "magicpoly/verify.hpp"

namespace magicpoly {

enum class ConstructErrorCode { OddN, NTooSmall, InvalidBudget };

class ConstructionError : public std::invalid_argument {
 public:
  ConstructionError(ConstructErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  ConstructErrorCode code() const { return code_; }

 private:
  ConstructErrorCode code_;
};

/// Magic labeling of P(n,2) for even n >= 4, center n+1, magic sum 3(n+1).
inline Labeling p2(int n) {
  if (n < 4) {
    throw ConstructionError(ConstructErrorCode::NTooSmall,
                            "p2 requires n >= 4, got " + std::to_string(n));
  }
  if (n % 2 != 0) {
    throw ConstructionError(ConstructErrorCode::OddN,
                            "P(n,2) does not exist for odd n = " +
                                std::to_string(n));
  }
  const std::int64_t c = n + 1;
  if (n == 4) {
    return make_labeling(P(4, 2), c, {{2, 9, 4, 3, 8, 1, 6, 7}});
  }

  const int half = n / 2;
  std::vector<std::int64_t> x(static_cast<std::size_t>(n) + 1, 0);  // 1-based
  for (int i = 1; i <= half - 2; ++i) {
    x[i] = i % 2 == 1 ? i + 1 : n + i + 2;
    x[i + half] = i % 2 == 1 ? 2 * (n + 1) - i - 1 : n - i;
  }
  x[half - 1] = n + 3;
  x[half] = 1;
  // Antipodal vertices complete each other to 2c.
  x[n - 1] = 2 * c - x[half - 1];
  x[n] = 2 * c - x[half];

  const std::int64_t u = 3 * c;
  std::vector<std::int64_t> ring;
  ring.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const std::int64_t next = x[j == n ? 1 : j + 1];
    ring.push_back(x[j]);
    ring.push_back(u - x[j] - next);
  }
  return make_labeling(P(n, 2), c, {ring});
}

/// The value families of the D(n,2) construction, indexed from 1.
struct D2Parts {
  std::vector<std::int64_t> outer_vertices;  // z_1..z_{n-1}
  std::vector<std::int64_t> inner_vertices;  // z*_1..z*_{n-1}
  std::vector<std::int64_t> outer_mids;      // m_1..m_{n-2}
  std::vector<std::int64_t> inner_mids;      // m*_1..m*_{n-2}
  std::int64_t root = 0;
};

inline D2Parts d2_parts(int n) {
  if (n < 3) {
    throw ConstructionError(ConstructErrorCode::NTooSmall,
                            "d2 requires n >= 3, got " + std::to_string(n));
  }
  D2Parts parts;
  for (std::int64_t j = 1; j <= n - 1; ++j) {
    const bool odd = j % 2 == 1;
    parts.outer_vertices.push_back(odd ? j : 2 * n + j - 3);
    parts.inner_vertices.push_back(odd ? 4 * (n - 1) - j : 2 * n - j - 1);
  }
  for (std::int64_t j = 1; j <= n - 2; ++j) {
    parts.outer_mids.push_back(4 * (n - 1) - 2 * j);
    parts.inner_mids.push_back(2 * j);
  }
  parts.root = 2 * (n - 1);
  return parts;
}

/// Magic labeling of D(n,2) for n >= 3, root 2(n-1), magic sum 6(n-1).
inline Labeling d2(int n) {
  const D2Parts parts = d2_parts(n);
  auto interleave = [](const std::vector<std::int64_t>& vertices,
                       const std::vector<std::int64_t>& mids) {
    std::vector<std::int64_t> ring;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      ring.push_back(vertices[j]);
      if (j < mids.size()) ring.push_back(mids[j]);
    }
    return ring;
  };
  return make_labeling(D(n, 2), parts.root,
                       {interleave(parts.outer_vertices, parts.outer_mids),
                        interleave(parts.inner_vertices, parts.inner_mids)});
}

enum class P4Status { Found, Exhausted, BudgetExhausted };

inline const char* to_string(P4Status s) {
  switch (s) {
    case P4Status::Found: return "Found";
    case P4Status::Exhausted: return "Exhausted";
    case P4Status::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

struct P4Result {
  P4Status status = P4Status::Exhausted;
  std::optional<Labeling> labeling;
  std::uint64_t nodes = 0;
};

namespace detail {

class P4Search {
 public:
  P4Search(int n, std::uint64_t budget)
      : n_(n),
        len_(4 * n),
        c_(4 * n + 1),
        max_value_(8 * n + 1),
        budget_(budget),
        outer_(static_cast<std::size_t>(len_), 0),
        pair_used_(static_cast<std::size_t>(c_), false) {}

  P4Result run() {
    P4Result r;
    const bool found = place(0);
    r.nodes = nodes_;
    if (found) {
      r.status = P4Status::Found;
      std::vector<std::int64_t> inner(outer_.size());
      for (std::size_t q = 0; q < outer_.size(); ++q) inner[q] = 2 * c_ - outer_[q];
      r.labeling = make_labeling(P(n_, 4), c_, {outer_, inner});
    } else {
      r.status = out_of_budget_ ? P4Status::BudgetExhausted : P4Status::Exhausted;
    }
    return r;
  }

 private:
  // Complementary values v and 2c - v share one slot.
  std::size_t pair_of(std::int64_t v) const {
    return static_cast<std::size_t>(v < c_ ? v : 2 * c_ - v);
  }

  std::int64_t edge_partial(int pos) const {
    std::int64_t s = 0;
    for (int p = pos - pos % 4; p < pos; ++p) s += outer_[static_cast<std::size_t>(p)];
    return s;
  }

  bool try_value(int pos, std::int64_t v) {
    if (nodes_ >= budget_) {
      out_of_budget_ = true;
      return false;
    }
    ++nodes_;
    const auto slot = pair_of(v);
    outer_[static_cast<std::size_t>(pos)] = v;
    pair_used_[slot] = true;
    if (place(pos + 1)) return true;
    pair_used_[slot] = false;
    outer_[static_cast<std::size_t>(pos)] = 0;
    return false;
  }

  bool usable(std::int64_t v) const {
    return v >= 1 && v <= max_value_ && v != c_ && !pair_used_[pair_of(v)];
  }

  bool place(int pos) {
    const std::int64_t edge_sum = 5 * c_;
    if (pos == len_) {
      // The last edge wraps onto position 1.
      return last_edge_closes();
    }
    if (pos > 0 && pos % 4 == 0) {
      std::int64_t closed = 0;
      for (int p = pos - 4; p < pos; ++p) closed += outer_[static_cast<std::size_t>(p)];
      const std::int64_t forced = edge_sum - closed;
      return usable(forced) && try_value(pos, forced);
    }
    const std::int64_t partial = pos % 4 == 0 ? 0 : edge_partial(pos);
    const int remaining_after = 4 - pos % 4;  // includes the closing vertex
    for (std::int64_t v = 1; v <= max_value_; ++v) {
      if (partial + v + remaining_after > edge_sum) break;
      if (!usable(v)) continue;
      if (try_value(pos, v)) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  bool last_edge_closes() const {
    std::int64_t s = outer_[0];
    for (int p = len_ - 4; p < len_; ++p) s += outer_[static_cast<std::size_t>(p)];
    return s == 5 * c_;
  }

  int n_;
  int len_;
  std::int64_t c_;
  std::int64_t max_value_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::int64_t> outer_;
  std::vector<bool> pair_used_;
};

}  // namespace detail

/// Searches outer-ring assignments of P(n,4) whose values avoid complementary
/// pairs and whose edges sum to 5(4n+1); the inner ring is the complement
/// 2(4n+1) - x and the center is 4n+1. Values are tried in ascending order
/// position by position, so a found witness is the lexicographically least
/// outer ring. At most `budget` assignments are explored.
inline P4Result p4(int n, std::uint64_t budget) {
  if (n < 3) {
    throw ConstructionError(ConstructErrorCode::NTooSmall,
                            "p4 requires n >= 3, got " + std::to_string(n));
  }
  if (budget == 0) {
    throw ConstructionError(ConstructErrorCode::InvalidBudget,
                            "p4 budget must be positive");
  }
  return detail::P4Search(n, budget).run();
}

}  // namespace magicpoly
