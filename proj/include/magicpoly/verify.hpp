#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "magicpoly/properties.hpp"
#include "magicpoly/structure.hpp"

namespace magicpoly {

/// Value per PointId (values[0] is the center / root).
struct Labeling {
  std::vector<std::int64_t> values;

  std::int64_t operator[](PointId id) const { return values[id]; }
  std::int64_t& operator[](PointId id) { return values[id]; }
  std::size_t size() const { return values.size(); }

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;
};

struct Violation {
  std::size_t segment = 0;
  std::int64_t actual = 0;
  Rational expected;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  bool is_magic = false;
  bool bijective = false;
  std::vector<std::int64_t> duplicates;
  std::vector<std::int64_t> out_of_range;
  std::vector<Violation> violations;
  std::int64_t center_value = 0;
  std::vector<std::int64_t> layer_sums;
};

/// Assembles a labeling from the center value and per-ring position lists
/// (outermost ring first, positions in order q = 1, 2, ...).
inline Labeling make_labeling(const StructureSpec& spec, std::int64_t center,
                              const std::vector<std::vector<std::int64_t>>& rings) {
  validate(spec);
  if (rings.size() != static_cast<std::size_t>(ring_count(spec))) {
    throw DomainMismatch(spec.to_string() + " expects " +
                         std::to_string(ring_count(spec)) + " rings, got " +
                         std::to_string(rings.size()));
  }
  Labeling l;
  l.values.reserve(point_count(spec));
  l.values.push_back(center);
  for (const auto& ring : rings) {
    if (ring.size() != static_cast<std::size_t>(ring_length(spec))) {
      throw DomainMismatch(spec.to_string() + " expects rings of length " +
                           std::to_string(ring_length(spec)) + ", got " +
                           std::to_string(ring.size()));
    }
    l.values.insert(l.values.end(), ring.begin(), ring.end());
  }
  return l;
}

inline std::vector<std::vector<std::int64_t>> rings_of(const StructureSpec& spec,
                                                       const Labeling& l) {
  const auto len = static_cast<std::size_t>(ring_length(spec));
  if (l.size() != point_count(spec)) {
    throw DomainMismatch("labeling size does not match " + spec.to_string());
  }
  std::vector<std::vector<std::int64_t>> rings;
  for (std::size_t t = 0; t < static_cast<std::size_t>(ring_count(spec)); ++t) {
    auto first = l.values.begin() + static_cast<std::ptrdiff_t>(1 + t * len);
    rings.emplace_back(first, first + static_cast<std::ptrdiff_t>(len));
  }
  return rings;
}

inline void check_domain(const IncidenceStructure& s, const Labeling& l) {
  if (l.size() != s.point_count) {
    throw DomainMismatch("labeling has " + std::to_string(l.size()) +
                         " values, structure " + s.spec.to_string() + " has " +
                         std::to_string(s.point_count) + " points");
  }
}

/// S_1..S_k: totals of the ring points sharing each within-edge index.
inline std::vector<std::int64_t> layer_sums(const IncidenceStructure& s,
                                            const Labeling& l) {
  check_domain(s, l);
  std::vector<std::int64_t> sums(static_cast<std::size_t>(s.spec.k), 0);
  for (PointId id = 1; id < s.point_count; ++id) {
    const int j = layer_of(s.spec, point_ref(s.spec, id).pos);
    sums[static_cast<std::size_t>(j - 1)] += l[id];
  }
  return sums;
}

inline VerifyReport verify(const IncidenceStructure& s, const Labeling& l) {
  check_domain(s, l);
  VerifyReport r;
  const auto n_points = static_cast<std::int64_t>(s.point_count);

  std::vector<int> seen(s.point_count + 1, 0);
  std::set<std::int64_t> dup;
  for (auto v : l.values) {
    if (v < 1 || v > n_points) {
      r.out_of_range.push_back(v);
    } else if (++seen[static_cast<std::size_t>(v)] == 2) {
      dup.insert(v);
    }
  }
  r.duplicates.assign(dup.begin(), dup.end());
  r.bijective = r.duplicates.empty() && r.out_of_range.empty();

  const Rational u = constants(s.spec).u;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    std::int64_t sum = 0;
    for (auto p : s.segments[i].points) sum += l[p];
    if (Rational(sum) != u) r.violations.push_back({i, sum, u});
  }

  r.center_value = l[0];
  r.layer_sums = layer_sums(s, l);
  r.is_magic = r.bijective && r.violations.empty();
  return r;
}

}  // namespace magicpoly
