#pragma once

// Transversal self-crossings of a closed curve on the coordinate sphere.
//
// The curve is a polyline of points of the unit-sphere embedding
// (sin r cos theta, sin r sin theta, cos r); segments are treated as short great-circle
// arcs. Candidate pairs come from a spatial hash over segment bounding boxes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zollgeo/errors.hpp"
#include "zollgeo/geodesics.hpp"

namespace zollgeo {

using Vec3 = std::array<double, 3>;

inline Vec3 embed(double r, double theta) {
  const double sr = std::sin(r);
  return {sr * std::cos(theta), sr * std::sin(theta), std::cos(r)};
}

struct PolylinePoint {
  double s;  // curve parameter
  Vec3 p;
};

struct SelfIntersectionOptions {
  /// pairs of segments closer than this in curve parameter are not compared
  double guard = 0.1;
  /// measure parameter distance cyclically over the window (closed curves)
  bool cyclic = true;
};

struct SelfIntersections {
  std::size_t count = 0;
  std::vector<std::pair<double, double>> pairs;  // (s_i, s_j) at the segment starts
};

namespace detail {

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline int orient(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double d = dot(cross(a, b), c);
  return (d > 0.0) - (d < 0.0);
}

/// Short arcs ab and cd cross at an interior point.
inline bool arcs_cross(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 >= 0 || o3 * o4 >= 0) return false;
  // exclude the antipodal intersection of the two great circles
  const Vec3 m1{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  const Vec3 m2{c[0] + d[0], c[1] + d[1], c[2] + d[2]};
  return dot(m1, m2) > 0.0;
}

struct CellKey {
  std::int64_t x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(k.y) * 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.z) * 0x165667B19E3779F9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// Counts pairs of non-adjacent polyline segments that cross. `period` is the parameter
/// length used for cyclic distances; defaults to the polyline's parameter span.
inline SelfIntersections self_intersections(std::span<const PolylinePoint> pts,
                                            const SelfIntersectionOptions& opts = {},
                                            double period = 0.0) {
  SelfIntersections out;
  if (pts.size() < 4) return out;
  const std::size_t nseg = pts.size() - 1;
  if (period <= 0.0) period = pts.back().s - pts.front().s;

  double cell = 0.0;
  for (std::size_t i = 0; i < nseg; ++i) {
    for (int k = 0; k < 3; ++k) cell = std::max(cell, std::abs(pts[i + 1].p[k] - pts[i].p[k]));
  }
  cell = std::max(cell, 1e-9);

  std::unordered_map<detail::CellKey, std::vector<std::size_t>, detail::CellHash> grid;
  auto key_of = [cell](double v) { return static_cast<std::int64_t>(std::floor(v / cell)); };
  for (std::size_t i = 0; i < nseg; ++i) {
    const auto& a = pts[i].p;
    const auto& b = pts[i + 1].p;
    std::array<std::int64_t, 3> lo{}, hi{};
    for (int k = 0; k < 3; ++k) {
      lo[k] = key_of(std::min(a[k], b[k]));
      hi[k] = key_of(std::max(a[k], b[k]));
    }
    for (auto x = lo[0]; x <= hi[0]; ++x)
      for (auto y = lo[1]; y <= hi[1]; ++y)
        for (auto z = lo[2]; z <= hi[2]; ++z) grid[{x, y, z}].push_back(i);
  }

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (const auto& [key, segs] : grid) {
    for (std::size_t a = 0; a < segs.size(); ++a)
      for (std::size_t b = a + 1; b < segs.size(); ++b)
        candidates.emplace_back(std::min(segs[a], segs[b]), std::max(segs[a], segs[b]));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& [i, j] : candidates) {
    // parameter gap between segment i = [s_i, s_i+1] and j = [s_j, s_j+1], j > i
    double gap = std::max(0.0, pts[j].s - pts[i + 1].s);
    if (opts.cyclic) gap = std::min(gap, std::max(0.0, period - (pts[j + 1].s - pts[i].s)));
    if (gap < opts.guard) continue;
    if (detail::arcs_cross(pts[i].p, pts[i + 1].p, pts[j].p, pts[j + 1].p)) {
      ++out.count;
      out.pairs.emplace_back(pts[i].s, pts[j].s);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

/// Polyline of a trajectory restricted to [s_begin, s_end], with exact end points.
inline std::vector<PolylinePoint> trajectory_polyline(const MetricOfRevolution& m,
                                                      const Trajectory& traj, double s_begin,
                                                      double s_end) {
  std::vector<PolylinePoint> pts;
  auto push_state = [&](const GeodesicState& st) { pts.push_back({st.s, embed(st.r, st.theta)}); };
  push_state(state_at(m, traj, s_begin));
  for (const auto& rec : traj.steps)
    if (rec.s > s_begin + 1e-12 && rec.s < s_end - 1e-12) pts.push_back({rec.s, embed(rec.r, rec.theta)});
  push_state(state_at(m, traj, s_end));
  return pts;
}

/// Self-crossings of a trajectory over the window [s_begin, s_end).
inline SelfIntersections self_intersections(const MetricOfRevolution& m, const Trajectory& traj,
                                            double s_begin, double s_end,
                                            const SelfIntersectionOptions& opts = {}) {
  if (s_begin < 0.0 || s_end <= s_begin || s_end > traj.s_end + 1e-9 || traj.steps.empty())
    throw DomainError("self_intersections: window not covered by the trajectory");
  const auto pts = trajectory_polyline(m, traj, s_begin, s_end);
  return self_intersections(pts, opts, s_end - s_begin);
}

}  // namespace zollgeo
