#ifndef EXACTCOMB_CLASSICS_LINEARSPACE_HPP
#define EXACTCOMB_CLASSICS_LINEARSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/error.hpp"

namespace exactcomb::classics {

/// n points and m lines; every pair of points lies on exactly one line.
struct LinearSpace {
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> lines;
};

enum class EqualityCase { None, NearPencil, Design, Degenerate };

inline const char* to_string(EqualityCase c) {
  switch (c) {
    case EqualityCase::None: return "none";
    case EqualityCase::NearPencil: return "near-pencil";
    case EqualityCase::Design: return "design";
    case EqualityCase::Degenerate: return "degenerate";
  }
  return "?";
}

struct LinearSpaceReport {
  std::size_t m = 0;
  std::size_t n = 0;
  bool bound_holds = false;  // m >= n
  EqualityCase equality = EqualityCase::None;
  std::size_t k = 0;  // line size in the design case
};

/// Throws NotLinearSpace naming the first offending pair (or line).
inline void validate(const LinearSpace& ls) {
  const std::size_t n = ls.points;
  std::vector<int> cover(n * n, 0);
  for (std::size_t i = 0; i < ls.lines.size(); ++i) {
    const auto& line = ls.lines[i];
    require(line.size() >= 2, ErrorCode::NotLinearSpace, "line " + std::to_string(i) + " has fewer than two points");
    for (std::size_t a = 0; a < line.size(); ++a) {
      require(line[a] < n, ErrorCode::NotLinearSpace,
              "line " + std::to_string(i) + " names point " + std::to_string(line[a]) + " outside 0.." + std::to_string(n - 1));
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        const std::size_t p = std::min(line[a], line[b]);
        const std::size_t q = std::max(line[a], line[b]);
        require(p != q, ErrorCode::NotLinearSpace, "line " + std::to_string(i) + " repeats point " + std::to_string(p));
        ++cover[p * n + q];
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      require(cover[p * n + q] == 1, ErrorCode::NotLinearSpace,
              "pair {" + std::to_string(p) + "," + std::to_string(q) + "} lies on " + std::to_string(cover[p * n + q]) +
                  " lines");
}

/// Checks m >= n and classifies the equality case by line sizes and point degrees.
inline LinearSpaceReport linear_space_validate(const LinearSpace& ls) {
  validate(ls);
  LinearSpaceReport r;
  r.m = ls.lines.size();
  r.n = ls.points;
  r.bound_holds = r.m >= r.n;
  if (r.m <= 1) {
    r.equality = EqualityCase::Degenerate;  // all points on one line (or fewer than two points)
    return r;
  }
  if (r.m != r.n) return r;
  const std::size_t n = r.n;
  std::size_t longest = 0;
  for (const auto& line : ls.lines) longest = std::max(longest, line.size());
  if (longest == n - 1) {
    r.equality = EqualityCase::NearPencil;
    return r;
  }
  const std::size_t k = ls.lines.front().size();
  std::vector<std::size_t> degree(n, 0);
  bool uniform = true;
  for (const auto& line : ls.lines) {
    uniform = uniform && line.size() == k;
    for (std::size_t p : line) ++degree[p];
  }
  const bool regular = std::all_of(degree.begin(), degree.end(), [k](std::size_t d) { return d == k; });
  if (uniform && regular && n == k * (k - 1) + 1) {
    r.equality = EqualityCase::Design;
    r.k = k;
  }
  return r;
}

/// Lines {d + i mod v : d in D} for a planar difference set D.
inline LinearSpace cyclic_plane(std::size_t v, const std::vector<std::size_t>& difference_set) {
  LinearSpace ls{v, {}};
  for (std::size_t i = 0; i < v; ++i) {
    std::vector<std::size_t> line;
    for (std::size_t d : difference_set) line.push_back((d + i) % v);
    std::sort(line.begin(), line.end());
    ls.lines.push_back(std::move(line));
  }
  return ls;
}

inline LinearSpace fano_plane() { return cyclic_plane(7, {0, 1, 3}); }

/// Points 0..n-2 on one line, apex n-1 joined to each of them.
inline LinearSpace near_pencil(std::size_t n) {
  require(n >= 3, ErrorCode::InvalidArgument, "a near-pencil needs at least 3 points");
  LinearSpace ls{n, {}};
  std::vector<std::size_t> base(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) base[i] = i;
  ls.lines.push_back(base);
  for (std::size_t i = 0; i + 1 < n; ++i) ls.lines.push_back({i, n - 1});
  return ls;
}

/// Every pair of points as its own line.
inline LinearSpace complete_graph_space(std::size_t n) {
  LinearSpace ls{n, {}};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) ls.lines.push_back({p, q});
  return ls;
}

/// Point in the rational plane.
using Point = std::pair<BigRational, BigRational>;

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  return (b.first - a.first) * (c.second - a.second) == (b.second - a.second) * (c.first - a.first);
}

/// Index pair spanning a line through no third input point, by exhaustive search.
inline std::pair<std::size_t, std::size_t> ordinary_line(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(pts[i] != pts[j], ErrorCode::InvalidArgument,
              "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool ordinary = true;
      for (std::size_t k = 0; k < n && ordinary; ++k)
        if (k != i && k != j && collinear(pts[i], pts[j], pts[k])) ordinary = false;
      if (ordinary) return {i, j};
    }
  throw Error(ErrorCode::AllCollinear, "all points lie on one line");
}

}  // namespace exactcomb::classics

#endif  // EXACTCOMB_CLASSICS_LINEARSPACE_HPP
