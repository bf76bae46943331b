#include <algorithm>
#include <functional>
#include <optional>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "magicpoly/construct.hpp"
#include "magicpoly/search.hpp"

namespace magicpoly {
namespace {

using Values = std::vector<std::int64_t>;

// Splits a single-ring P(n,2) labeling into (vertices, midpoints).
std::pair<Values, Values> split_p2(const Labeling& l) {
  Values vertices, mids;
  for (std::size_t q = 1; q < l.size(); ++q) {
    (q % 2 == 1 ? vertices : mids).push_back(l.values[q]);
  }
  return {vertices, mids};
}

TEST(P2, FrozenExamples) {
  {
    const auto l = p2(6);
    EXPECT_EQ(split_p2(l).first, (Values{2, 9, 1, 12, 5, 13}));
    EXPECT_EQ(split_p2(l).second, (Values{10, 11, 8, 4, 3, 6}));
    EXPECT_EQ(l[0], 7);
  }
  {
    const auto l = p2(8);
    EXPECT_EQ(split_p2(l).first, (Values{2, 12, 11, 1, 16, 6, 7, 17}));
    EXPECT_EQ(split_p2(l).second, (Values{13, 4, 15, 10, 5, 14, 3, 8}));
    EXPECT_EQ(l[0], 9);
  }
  {
    const auto l = p2(4);
    EXPECT_EQ(split_p2(l).first, (Values{2, 4, 8, 6}));
    EXPECT_EQ(split_p2(l).second, (Values{9, 3, 1, 7}));
    EXPECT_EQ(l[0], 5);
  }
}

TEST(P2, SegmentSums) {
  for (int n : {4, 6, 8}) {
    const auto s = build(P(n, 2));
    const auto l = p2(n);
    for (const auto& seg : s.segments) {
      std::int64_t sum = 0;
      for (auto p : seg.points) sum += l[p];
      EXPECT_EQ(sum, 3 * (n + 1));
    }
  }
}

TEST(P2, MagicForEvenNUpTo40) {
  for (int n = 4; n <= 40; n += 2) {
    SCOPED_TRACE(n);
    const auto l = p2(n);
    ASSERT_TRUE(verify(build(P(n, 2)), l).is_magic);
    const auto [vertices, mids] = split_p2(l);
    const std::int64_t expected = std::int64_t{n} * (n + 1);
    EXPECT_EQ(std::accumulate(vertices.begin(), vertices.end(), std::int64_t{0}), expected);
    EXPECT_EQ(std::accumulate(mids.begin(), mids.end(), std::int64_t{0}), expected);
  }
}

TEST(P2, Errors) {
  try {
    p2(5);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.code(), ConstructErrorCode::OddN);
  }
  try {
    p2(2);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.code(), ConstructErrorCode::NTooSmall);
  }
}

TEST(D2, FrozenExamples) {
  EXPECT_EQ(d2(5), make_labeling(D(5, 2), 8,
                                 {{1, 14, 9, 12, 3, 10, 11}, {15, 2, 7, 4, 13, 6, 5}}));
  EXPECT_EQ(d2(3), make_labeling(D(3, 2), 4, {{1, 6, 5}, {7, 2, 3}}));
  EXPECT_EQ(d2(4), make_labeling(D(4, 2), 6, {{1, 10, 7, 8, 3}, {11, 2, 5, 4, 9}}));
}

TEST(D2, MagicAndBijectiveUpTo40) {
  for (int n = 3; n <= 40; ++n) {
    SCOPED_TRACE(n);
    const auto l = d2(n);
    const auto r = verify(build(D(n, 2)), l);
    ASSERT_TRUE(r.is_magic);
    EXPECT_EQ(r.center_value, 2 * (n - 1));
    Values sorted = l.values;
    std::sort(sorted.begin(), sorted.end());
    Values expected(static_cast<std::size_t>(4 * n - 5));
    std::iota(expected.begin(), expected.end(), 1);
    EXPECT_EQ(sorted, expected);
  }
}

// The value families coincide with the closed-form sets A1, A2, B1, B2, C1,
// C2 and {c}, which partition 1..4n-5.
TEST(D2, ValueFamiliesMatchClosedForms) {
  for (int n = 3; n <= 40; ++n) {
    SCOPED_TRACE(n);
    const auto parts = d2_parts(n);
    std::set<std::int64_t> a1, b1, a2, b2;
    for (std::size_t j = 1; j <= parts.outer_vertices.size(); ++j) {
      (j % 2 == 1 ? a1 : b1).insert(parts.outer_vertices[j - 1]);
      (j % 2 == 1 ? a2 : b2).insert(parts.inner_vertices[j - 1]);
    }
    auto range = [](std::int64_t from, std::int64_t to) {
      std::set<std::int64_t> s;
      for (auto v = from; v <= to; v += 2) s.insert(v);
      return s;
    };
    const bool odd = n % 2 == 1;
    EXPECT_EQ(a1, range(1, odd ? n - 2 : n - 1));
    EXPECT_EQ(b1, range(2 * n - 1, odd ? 3 * n - 4 : 3 * n - 5));
    EXPECT_EQ(a2, range(odd ? 3 * n - 2 : 3 * n - 3, 4 * n - 5));
    EXPECT_EQ(b2, range(odd ? n : n + 1, 2 * n - 3));
    EXPECT_EQ(std::set<std::int64_t>(parts.outer_mids.begin(), parts.outer_mids.end()),
              range(2 * n, 4 * n - 6));
    EXPECT_EQ(std::set<std::int64_t>(parts.inner_mids.begin(), parts.inner_mids.end()),
              range(2, 2 * n - 4));
    EXPECT_EQ(a1.size(), a2.size());
    EXPECT_EQ(a1.size(), static_cast<std::size_t>(odd ? (n - 1) / 2 : n / 2));
    EXPECT_EQ(b1.size(), static_cast<std::size_t>(odd ? (n - 1) / 2 : (n - 2) / 2));
    EXPECT_EQ(parts.outer_mids.size(), static_cast<std::size_t>(n - 2));
    EXPECT_EQ(parts.inner_mids.size(), static_cast<std::size_t>(n - 2));
  }
}

TEST(D2, Errors) {
  try {
    d2(2);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.code(), ConstructErrorCode::NTooSmall);
  }
}

void expect_p4_conditions(int n, const Labeling& l) {
  const std::int64_t c = 4 * n + 1;
  EXPECT_EQ(l[0], c);
  const auto spec = P(n, 4);
  const int len = ring_length(spec);
  std::set<std::int64_t> outer;
  for (int q = 1; q <= len; ++q) {
    const auto x = l[point_id(spec, {1, q})];
    EXPECT_EQ(x + l[point_id(spec, {2, q})], 2 * c);
    outer.insert(x);
  }
  for (auto v : outer) EXPECT_EQ(outer.count(2 * c - v), 0u);
  for (int i = 1; i <= n; ++i) {
    std::int64_t sum = 0;
    for (int j = 1; j <= 5; ++j) sum += l[point_id(spec, {1, ((i - 1) * 4 + j - 1) % len + 1})];
    EXPECT_EQ(sum, 5 * c);
  }
}

TEST(P4, WitnessForN4) {
  const auto r = p4(4, 100'000'000);
  ASSERT_EQ(r.status, P4Status::Found);
  ASSERT_TRUE(r.labeling);
  const auto report = verify(build(P(4, 4)), *r.labeling);
  EXPECT_TRUE(report.is_magic);
  EXPECT_EQ(report.layer_sums, (Values{136, 136, 136, 136}));
  expect_p4_conditions(4, *r.labeling);
}

TEST(P4, WitnessesForNUpTo10) {
  for (int n = 3; n <= 10; ++n) {
    SCOPED_TRACE(n);
    const auto r = p4(n, 10'000'000);
    ASSERT_EQ(r.status, P4Status::Found);
    EXPECT_TRUE(verify(build(P(n, 4)), *r.labeling).is_magic);
    expect_p4_conditions(n, *r.labeling);
  }
}

// Plain lexicographic enumeration of outer rings: distinct values from
// 1..8n+1 minus the center, no complementary pair, every cyclic 5-window
// starting at a vertex summing to 5c. Sums are checked only once an edge is
// complete.
std::optional<Values> least_outer_ring(int n) {
  const std::int64_t c = 4 * n + 1;
  const int len = 4 * n;
  Values ring;
  std::vector<bool> taken(static_cast<std::size_t>(2 * c), false);
  std::function<bool()> extend = [&]() -> bool {
    const int pos = static_cast<int>(ring.size());
    if (pos % 4 == 1 && pos > 1) {
      std::int64_t sum = 0;
      for (int p = pos - 5; p < pos; ++p) sum += ring[static_cast<std::size_t>(p)];
      if (sum != 5 * c) return false;
    }
    if (pos == len) {
      std::int64_t sum = ring[0];
      for (int p = len - 4; p < len; ++p) sum += ring[static_cast<std::size_t>(p)];
      return sum == 5 * c;
    }
    for (std::int64_t v = 1; v <= 2 * c - 1; ++v) {
      if (v == c) continue;
      const auto slot = static_cast<std::size_t>(std::min(v, 2 * c - v));
      if (taken[slot]) continue;
      taken[slot] = true;
      ring.push_back(v);
      if (extend()) return true;
      ring.pop_back();
      taken[slot] = false;
    }
    return false;
  };
  if (!extend()) return std::nullopt;
  return ring;
}

TEST(P4, AgreesWithLexicographicEnumeration) {
  for (int n : {3, 4}) {
    SCOPED_TRACE(n);
    const auto expected = least_outer_ring(n);
    const auto r = p4(n, 100'000'000);
    ASSERT_EQ(r.status == P4Status::Found, expected.has_value());
    if (!expected) continue;
    const auto spec = P(n, 4);
    Values outer;
    for (int q = 1; q <= ring_length(spec); ++q) outer.push_back((*r.labeling)[point_id(spec, {1, q})]);
    EXPECT_EQ(outer, *expected);
  }
}

TEST(P4, BudgetIsHonored) {
  const auto r = p4(4, 5);
  EXPECT_EQ(r.status, P4Status::BudgetExhausted);
  EXPECT_FALSE(r.labeling);
  EXPECT_LE(r.nodes, 5u);
}

TEST(P4, LargerBudgetFindsTheSameWitness) {
  const auto a = p4(4, 100'000'000);
  const auto b = p4(4, a.nodes);
  ASSERT_EQ(b.status, P4Status::Found);
  EXPECT_EQ(a.labeling, b.labeling);
}

TEST(P4, Errors) {
  EXPECT_THROW(p4(2, 100), ConstructionError);
  EXPECT_THROW(p4(4, 0), ConstructionError);
}

}  // namespace
}  // namespace magicpoly
