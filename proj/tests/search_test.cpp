#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "magicpoly/search.hpp"
#include "oracle.hpp"

namespace magicpoly {
namespace {

SearchOptions count_all() {
  SearchOptions o;
  o.mode = SearchMode::CountAll;
  return o;
}

SearchOptions enumerate_all() {
  SearchOptions o;
  o.mode = SearchMode::EnumerateAll;
  return o;
}

std::vector<StructureSpec> small_specs() {
  // N <= 9
  return {P(3, 2), P(4, 2), D(3, 1), D(4, 1), D(5, 1), D(6, 1), D(7, 1), D(8, 1),
          D(3, 2)};
}

TEST(Solve, P32HasNoLabeling) {
  const auto r = solve(build(P(3, 2)), count_all());
  EXPECT_EQ(r.status, SearchStatus::Complete);
  EXPECT_EQ(r.count, 0u);
}

TEST(Solve, P52HasNoLabeling) {
  const auto r = solve(build(P(5, 2)), count_all());
  EXPECT_EQ(r.status, SearchStatus::Complete);
  EXPECT_EQ(r.count, 0u);
}

TEST(Solve, P42MatchesPermutationOracle) {
  const auto r = solve(build(P(4, 2)), enumerate_all());
  EXPECT_EQ(r.status, SearchStatus::Complete);
  const auto expected = oracle::enumerate(oracle::p_segments(4, 2), 9);
  EXPECT_EQ(r.count, expected.size());
  ASSERT_EQ(r.solutions.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(r.solutions[i].values, expected[i]);
  }
}

TEST(Solve, D32MatchesPermutationOracle) {
  const auto r = solve(build(D(3, 2)), enumerate_all());
  const auto expected = oracle::enumerate(oracle::d_segments(3, 2), 7);
  ASSERT_EQ(expected.size(), 12u);
  EXPECT_EQ(r.count, 12u);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(r.solutions[i].values, expected[i]);
  }
}

TEST(Solve, DegenerateOrderOneIsEmpty) {
  for (int n = 3; n <= 8; ++n) {
    const auto r = solve(build(D(n, 1)), count_all());
    EXPECT_EQ(r.status, SearchStatus::Complete);
    EXPECT_EQ(r.count, 0u) << n;
  }
}

TEST(Solve, FractionalCenterShortCircuits) {
  const auto r = solve(build(D(4, 3)), count_all());
  EXPECT_EQ(r.status, SearchStatus::Complete);
  EXPECT_EQ(r.count, 0u);
  EXPECT_EQ(r.nodes_explored, 0u);
}

TEST(BruteForce, Counts) {
  EXPECT_EQ(brute_force_count(build(P(3, 2))), 0u);
  EXPECT_EQ(brute_force_count(build(D(3, 2))), 12u);
  EXPECT_EQ(brute_force_count(build(P(4, 2))), 8u);
  for (int n : {3, 4, 5}) EXPECT_EQ(brute_force_count(build(D(n, 1))), 0u);
  EXPECT_THROW(brute_force_count(build(P(6, 2))), TooLarge);
}

TEST(Solve, OracleEquivalenceOnSmallStructures) {
  for (const auto& spec : small_specs()) {
    const auto s = build(spec);
    EXPECT_EQ(solve(s, count_all()).count, brute_force_count(s)) << spec.to_string();
  }
}

TEST(Solve, FreeCenterGivesSameCounts) {
  for (const auto& spec : small_specs()) {
    const auto s = build(spec);
    auto free = count_all();
    free.fix_center = false;
    EXPECT_EQ(solve(s, count_all()).count, solve(s, free).count) << spec.to_string();
  }
}

TEST(Solve, SolutionsVerifyAndRespectTheorems) {
  for (const auto& spec : {P(4, 2), P(6, 2), D(3, 2), D(4, 2), D(5, 3)}) {
    SCOPED_TRACE(spec.to_string());
    const auto s = build(spec);
    auto opt = enumerate_all();
    opt.node_limit = 2'000'000;
    const auto r = solve(s, opt);
    const auto mc = constants(spec);
    for (const auto& l : r.solutions) {
      const auto report = verify(s, l);
      ASSERT_TRUE(report.is_magic);
      EXPECT_EQ(Rational(report.center_value), mc.c);
      for (std::size_t j = 0; j < report.layer_sums.size(); ++j) {
        EXPECT_EQ(Rational(report.layer_sums[j]), mc.layer_sums[j]);
      }
    }
  }
}

// No P(n,2) labeling has only odd vertices or only even midpoints.
TEST(Solve, ParityObstructionsOnP42AndP62) {
  for (int n : {4, 6}) {
    const auto spec = P(n, 2);
    const auto r = solve(build(spec), enumerate_all());
    ASSERT_EQ(r.status, SearchStatus::Complete);
    EXPECT_EQ(r.count, n == 4 ? 8u : 48u);
    for (const auto& l : r.solutions) {
      bool even_vertex = false, odd_mid = false;
      for (int q = 1; q <= ring_length(spec); ++q) {
        const auto v = l[static_cast<PointId>(q)];
        if (is_vertex(spec, q)) even_vertex |= v % 2 == 0;
        else odd_mid |= v % 2 == 1;
      }
      EXPECT_TRUE(even_vertex);
      EXPECT_TRUE(odd_mid);
    }
  }
}

TEST(Solve, FirstModeReturnsOneVerifiedLabeling) {
  const auto s = build(P(4, 2));
  const auto r = solve(s, SearchOptions{});
  EXPECT_EQ(r.status, SearchStatus::Complete);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_EQ(r.count, 1u);
  EXPECT_TRUE(verify(s, r.solutions.front()).is_magic);
}

TEST(Solve, P44FirstSolutionHasForcedLayerSums) {
  const auto s = build(P(4, 4));
  const auto r = solve(s, SearchOptions{});
  ASSERT_EQ(r.solutions.size(), 1u);
  const auto report = verify(s, r.solutions.front());
  EXPECT_TRUE(report.is_magic);
  EXPECT_EQ(report.center_value, 17);
  EXPECT_EQ(report.layer_sums, (std::vector<std::int64_t>{136, 136, 136, 136}));
}

TEST(Solve, NodeLimitIsExactAndTruncates) {
  auto opt = count_all();
  opt.node_limit = 3;
  const auto r = solve(build(P(6, 2)), opt);
  EXPECT_EQ(r.status, SearchStatus::Truncated);
  EXPECT_EQ(r.nodes_explored, 3u);
}

TEST(Solve, RaisingTheBudgetOnlyExtendsSolutions) {
  const auto s = build(P(6, 2));
  std::vector<Labeling> previous;
  for (std::uint64_t limit : {50u, 200u, 1000u, 5000u, 100000u}) {
    auto opt = enumerate_all();
    opt.node_limit = limit;
    const auto r = solve(s, opt);
    EXPECT_LE(r.nodes_explored, limit);
    const std::set<Labeling> now(r.solutions.begin(), r.solutions.end());
    for (const auto& l : previous) EXPECT_EQ(now.count(l), 1u);
    previous = r.solutions;
  }
}

TEST(Solve, ParallelMatchesSerial) {
  for (const auto& spec : {P(4, 2), P(6, 2), D(3, 2), D(4, 2), P(5, 2)}) {
    SCOPED_TRACE(spec.to_string());
    const auto s = build(spec);
    for (auto mode : {SearchMode::First, SearchMode::EnumerateAll, SearchMode::CountAll}) {
      SearchOptions serial;
      serial.mode = mode;
      SearchOptions parallel = serial;
      parallel.parallel = true;
      parallel.threads = 4;
      const auto a = solve(s, serial);
      const auto b = solve(s, parallel);
      EXPECT_EQ(a.status, b.status);
      EXPECT_EQ(a.count, b.count);
      EXPECT_EQ(a.solutions, b.solutions);
      if (mode != SearchMode::First) {
        EXPECT_EQ(a.nodes_explored, b.nodes_explored);
      }
    }
  }
}

}  // namespace
}  // namespace magicpoly
