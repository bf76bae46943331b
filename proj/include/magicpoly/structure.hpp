#pragma once

// Incidence model shared by magic polygons P(n,k) and degenerated magic
// polygons D(n,k): a point set with a stable integer id scheme and the list
// of constrained (k+1)-point segments.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace magicpoly {

enum class Family { MagicP, DegenerateD };

inline const char* family_name(Family f) {
  return f == Family::MagicP ? "P" : "D";
}

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StructureSpec {
  Family family = Family::MagicP;
  int n = 0;
  int k = 0;

  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;

  std::string to_string() const {
    return std::string(family_name(family)) + "(" + std::to_string(n) + "," +
           std::to_string(k) + ")";
  }
};

inline StructureSpec P(int n, int k) { return {Family::MagicP, n, k}; }
inline StructureSpec D(int n, int k) { return {Family::DegenerateD, n, k}; }

inline void validate(const StructureSpec& spec) {
  if (spec.n < 3) {
    throw InvalidSpec(spec.to_string() + ": n must be at least 3");
  }
  if (spec.family == Family::MagicP) {
    if (spec.k < 2 || spec.k % 2 != 0) {
      throw InvalidSpec(spec.to_string() + ": k must be even and at least 2");
    }
  } else if (spec.k < 1) {
    throw InvalidSpec(spec.to_string() + ": k must be at least 1");
  }
}

using PointId = std::uint32_t;

/// Number of nested polygons: k/2 concentric rings for P, k rings sharing the
/// root for D.
inline int ring_count(const StructureSpec& s) {
  return s.family == Family::MagicP ? s.k / 2 : s.k;
}

/// Positions per ring: the full perimeter nk for P (cyclic), the non-root path
/// k(n-2)+1 for D (open).
inline int ring_length(const StructureSpec& s) {
  return s.family == Family::MagicP ? s.n * s.k : s.k * (s.n - 2) + 1;
}

inline std::size_t point_count(const StructureSpec& s) {
  return static_cast<std::size_t>(ring_count(s)) * ring_length(s) + 1;
}

/// Center (P) or root (D) is id 0; ring t (1 = outermost), position q
/// (1-based) otherwise.
struct PointRef {
  int ring = 0;
  int pos = 0;

  bool is_center() const { return ring == 0; }
  friend bool operator==(const PointRef&, const PointRef&) = default;
};

inline PointId point_id(const StructureSpec& s, PointRef r) {
  if (r.is_center()) return 0;
  return static_cast<PointId>((r.ring - 1) * ring_length(s) + r.pos);
}

inline PointRef point_ref(const StructureSpec& s, PointId id) {
  if (id == 0) return {};
  const int len = ring_length(s);
  const int zero_based = static_cast<int>(id) - 1;
  return {zero_based / len + 1, zero_based % len + 1};
}

/// Within-edge index j in 1..k; j == 1 marks a polygon vertex.
inline int layer_of(const StructureSpec& s, int pos) {
  return (pos - 1) % s.k + 1;
}

inline bool is_vertex(const StructureSpec& s, int pos) {
  return layer_of(s, pos) == 1;
}

/// Ring position facing q through the center of a P structure.
inline int antipode(const StructureSpec& s, int pos) {
  if (s.family != Family::MagicP) {
    throw InvalidSpec("antipode is only defined for magic polygons P(n,k)");
  }
  validate(s);
  const int len = ring_length(s);
  if (pos < 1 || pos > len) {
    throw std::out_of_range("ring position " + std::to_string(pos) +
                            " outside 1.." + std::to_string(len));
  }
  return (pos + len / 2 - 1) % len + 1;
}

enum class SegmentKind { Edge, Central };

struct Segment {
  SegmentKind kind = SegmentKind::Edge;
  std::vector<PointId> points;
  // Edge segments only: within-edge index of each of the first k points.
  std::vector<int> layer_tags;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct IncidenceStructure {
  StructureSpec spec;
  std::size_t point_count = 0;
  std::vector<Segment> segments;

  friend bool operator==(const IncidenceStructure&,
                         const IncidenceStructure&) = default;
};

/// Builds the incidence structure. Edge segments come first ordered by
/// (ring, edge), then central segments ordered by ring position.
inline IncidenceStructure build(const StructureSpec& spec) {
  validate(spec);
  const int n = spec.n;
  const int k = spec.k;
  const int rings = ring_count(spec);
  const int len = ring_length(spec);

  IncidenceStructure out;
  out.spec = spec;
  out.point_count = point_count(spec);

  auto id = [&](int t, int q) { return point_id(spec, {t, q}); };

  const int edges_per_ring = spec.family == Family::MagicP ? n : n - 2;
  for (int t = 1; t <= rings; ++t) {
    for (int i = 1; i <= edges_per_ring; ++i) {
      Segment seg;
      seg.kind = SegmentKind::Edge;
      for (int j = 1; j <= k; ++j) {
        seg.points.push_back(id(t, (i - 1) * k + j));
        seg.layer_tags.push_back(j);
      }
      // P wraps around the perimeter; the last D edge ends at the path end.
      const int closing = spec.family == Family::MagicP ? (i * k) % len + 1
                                                        : i * k + 1;
      seg.points.push_back(id(t, closing));
      out.segments.push_back(std::move(seg));
    }
  }

  if (spec.family == Family::MagicP) {
    for (int q = 1; q <= len / 2; ++q) {
      Segment seg;
      seg.kind = SegmentKind::Central;
      for (int t = 1; t <= rings; ++t) seg.points.push_back(id(t, q));
      seg.points.push_back(0);
      for (int t = 1; t <= rings; ++t) seg.points.push_back(id(t, q + len / 2));
      out.segments.push_back(std::move(seg));
    }
  } else {
    for (int q = 1; q <= len; ++q) {
      Segment seg;
      seg.kind = SegmentKind::Central;
      for (int t = 1; t <= rings; ++t) seg.points.push_back(id(t, q));
      seg.points.push_back(0);
      out.segments.push_back(std::move(seg));
    }
  }
  return out;
}

}  // namespace magicpoly
