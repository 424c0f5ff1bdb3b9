#ifndef EXACTCOMB_EULERTOURS_HPP
#define EXACTCOMB_EULERTOURS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/digraph.hpp"
#include "exactcomb/error.hpp"
#include "exactcomb/matrix.hpp"

namespace exactcomb::euler {

/// Spanning tree with every chosen arc pointing toward the root: each node
/// other than the root (and other than nodes without arcs) picks one outgoing arc.
struct Arborescence {
  std::size_t root = 0;
  std::vector<std::optional<std::size_t>> arc_of;  // indexed by node
  friend bool operator==(const Arborescence&, const Arborescence&) = default;
};

/// Arc ids in traversal order.
using EulerTour = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultOracleArcCap = 16;

inline bool has_arcs(const DirectedMultigraph& g, std::size_t v) { return g.out_degree(v) + g.in_degree(v) > 0; }

/// In-degree equals out-degree everywhere and all arcs share one weakly
/// connected component. Nodes without arcs are ignored.
inline bool is_eulerian(const DirectedMultigraph& g) {
  const std::size_t n = g.node_count();
  for (std::size_t v = 0; v < n; ++v)
    if (g.in_degree(v) != g.out_degree(v)) return false;
  if (g.arc_count() == 0) return true;

  std::vector<std::size_t> parent(n);
  for (std::size_t v = 0; v < n; ++v) parent[v] = v;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const Arc& a : g.arcs()) parent[find(a.tail)] = find(a.head);
  const std::size_t comp = find(g.arc(0).tail);
  for (std::size_t v = 0; v < n; ++v)
    if (has_arcs(g, v) && find(v) != comp) return false;
  return true;
}

/// The anchor arc for tour counting: smallest (tail, head), ties broken by id.
inline std::size_t designated_arc(const DirectedMultigraph& g) {
  require(g.arc_count() > 0, ErrorCode::InvalidArgument, "graph has no arcs");
  std::size_t best = 0;
  for (std::size_t a = 1; a < g.arc_count(); ++a) {
    const Arc& x = g.arc(a);
    const Arc& y = g.arc(best);
    if (x.tail < y.tail || (x.tail == y.tail && x.head < y.head)) best = a;
  }
  return best;
}

/// Diagonal: out-degree; off-diagonal (i, j): minus the number of arcs i -> j.
/// Loops appear in neither.
inline IntMatrix laplacian(const DirectedMultigraph& g) {
  IntMatrix m(g.node_count());
  for (const Arc& a : g.arcs()) {
    if (a.tail == a.head) continue;
    m(a.tail, a.tail) += 1;
    m(a.tail, a.head) -= 1;
  }
  return m;
}

/// Matrix-tree count of arborescences oriented toward root.
inline BigInt count_arborescences(const DirectedMultigraph& g, std::size_t root) {
  require(root < g.node_count(), ErrorCode::IndexOutOfRange, "root " + std::to_string(root) + " out of range");
  return det(minor(laplacian(g), root));
}

/// With skip_arcless, nodes that carry no arcs must be left unassigned instead
/// of being spanned.
inline bool is_arborescence(const DirectedMultigraph& g, const Arborescence& t, bool skip_arcless = false) {
  const std::size_t n = g.node_count();
  if (t.root >= n || t.arc_of.size() != n || t.arc_of[t.root]) return false;
  auto spanned = [&](std::size_t v) { return !skip_arcless || has_arcs(g, v); };
  for (std::size_t v = 0; v < n; ++v) {
    if (v == t.root) continue;
    if (!spanned(v)) {
      if (t.arc_of[v]) return false;
      continue;
    }
    if (!t.arc_of[v]) return false;
    const std::size_t a = *t.arc_of[v];
    if (a >= g.arc_count() || g.arc(a).tail != v || g.arc(a).head == v) return false;
  }
  // following chosen arcs from any node must hit the root within n steps
  for (std::size_t v = 0; v < n; ++v) {
    if (!spanned(v)) continue;
    std::size_t cur = v;
    std::size_t steps = 0;
    while (cur != t.root && steps <= n) {
      cur = g.arc(*t.arc_of[cur]).head;
      ++steps;
    }
    if (cur != t.root) return false;
  }
  return true;
}

/// Exhaustive oracle: tries every choice of one non-loop outgoing arc per
/// non-root node and keeps the choices that form an arborescence.
/// skip_arcless leaves nodes without arcs unassigned, as tour_from_arborescence expects.
inline std::vector<Arborescence> enumerate_arborescences(const DirectedMultigraph& g, std::size_t root,
                                                        bool skip_arcless = false) {
  const std::size_t n = g.node_count();
  require(root < n, ErrorCode::IndexOutOfRange, "root " + std::to_string(root) + " out of range");
  std::vector<std::vector<std::size_t>> choices(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a : g.out_arcs(v))
      if (g.arc(a).head != v) choices[v].push_back(a);

  std::vector<Arborescence> result;
  Arborescence cur{root, std::vector<std::optional<std::size_t>>(n)};
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      if (is_arborescence(g, cur, skip_arcless)) result.push_back(cur);
      return;
    }
    if (v == root || (skip_arcless && !has_arcs(g, v))) {
      rec(v + 1);
      return;
    }
    for (std::size_t a : choices[v]) {
      cur.arc_of[v] = a;
      rec(v + 1);
    }
    cur.arc_of[v].reset();
  };
  rec(0);
  return result;
}

namespace detail {

/// g restricted to nodes that carry arcs, with arc ids preserved.
struct Compressed {
  DirectedMultigraph graph;
  std::vector<std::size_t> new_index;  // old node -> new node (unused nodes map to npos)
};

inline Compressed compress(const DirectedMultigraph& g) {
  Compressed c;
  c.new_index.assign(g.node_count(), static_cast<std::size_t>(-1));
  std::size_t k = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    if (has_arcs(g, v)) c.new_index[v] = k++;
  c.graph = DirectedMultigraph(k);
  for (const Arc& a : g.arcs()) c.graph.add_arc(c.new_index[a.tail], c.new_index[a.head]);
  return c;
}

}  // namespace detail

/// BEST theorem: arborescences toward the designated arc's tail, times
/// prod (sigma_p - 1)!. Counts tours that start with the designated arc, which
/// is the same as counting cyclic arc sequences.
inline BigInt count_euler_tours(const DirectedMultigraph& g) {
  require(g.arc_count() > 0, ErrorCode::InvalidArgument, "graph has no arcs");
  require(is_eulerian(g), ErrorCode::NotEulerian, "in/out degrees differ or arcs are disconnected");
  const auto c = detail::compress(g);
  const std::size_t root = c.new_index[g.arc(designated_arc(g)).tail];
  BigInt count = count_arborescences(c.graph, root);
  for (std::size_t v = 0; v < c.graph.node_count(); ++v) count *= factorial(c.graph.out_degree(v) - 1);
  return count;
}

/// Backtracking enumeration of the tours that start with the designated arc.
/// The callback sees each tour as it is completed.
inline void for_each_euler_tour(const DirectedMultigraph& g, const std::function<void(const EulerTour&)>& visit,
                                std::size_t arc_cap = kDefaultOracleArcCap) {
  require(g.arc_count() <= arc_cap, ErrorCode::TooLarge,
          std::to_string(g.arc_count()) + " arcs exceed oracle cap " + std::to_string(arc_cap));
  require(g.arc_count() > 0, ErrorCode::InvalidArgument, "graph has no arcs");
  require(is_eulerian(g), ErrorCode::NotEulerian, "in/out degrees differ or arcs are disconnected");

  const std::size_t m = g.arc_count();
  std::vector<char> used(m, 0);
  EulerTour tour;
  tour.reserve(m);
  const std::size_t start = designated_arc(g);
  used[start] = 1;
  tour.push_back(start);

  std::function<void(std::size_t)> extend = [&](std::size_t at) {
    if (tour.size() == m) {
      if (at == g.arc(start).tail) visit(tour);
      return;
    }
    for (std::size_t a : g.out_arcs(at)) {
      if (used[a]) continue;
      used[a] = 1;
      tour.push_back(a);
      extend(g.arc(a).head);
      tour.pop_back();
      used[a] = 0;
    }
  };
  extend(g.arc(start).head);
}

inline BigInt enumerate_euler_tours(const DirectedMultigraph& g, std::size_t arc_cap = kDefaultOracleArcCap) {
  std::uint64_t count = 0;
  for_each_euler_tour(g, [&](const EulerTour&) { ++count; }, arc_cap);
  return BigInt(static_cast<unsigned long>(count));
}

inline bool is_euler_tour(const DirectedMultigraph& g, const EulerTour& tour) {
  if (tour.size() != g.arc_count() || tour.empty()) return false;
  std::vector<char> seen(g.arc_count(), 0);
  for (std::size_t i = 0; i < tour.size(); ++i) {
    const std::size_t a = tour[i];
    if (a >= g.arc_count() || seen[a]) return false;
    seen[a] = 1;
    const std::size_t next = tour[(i + 1) % tour.size()];
    if (next >= g.arc_count() || g.arc(a).head != g.arc(next).tail) return false;
  }
  return true;
}

/// Last-exit construction: start at the root and repeatedly leave the current
/// node by its next unused exit in exit_orders[node]. At every non-root node
/// the arborescence arc must come last.
inline EulerTour tour_from_arborescence(const DirectedMultigraph& g, const Arborescence& t,
                                        const std::vector<std::vector<std::size_t>>& exit_orders) {
  require(is_arborescence(g, t, /*skip_arcless=*/true), ErrorCode::InvalidArborescence,
          "chosen arcs do not form an arborescence toward the root");
  require(exit_orders.size() == g.node_count(), ErrorCode::InvalidExitOrder, "one exit order per node required");

  for (std::size_t v = 0; v < g.node_count(); ++v) {
    std::vector<std::size_t> given = exit_orders[v];
    std::vector<std::size_t> actual = g.out_arcs(v);
    std::sort(given.begin(), given.end());
    std::sort(actual.begin(), actual.end());
    require(given == actual, ErrorCode::InvalidExitOrder,
            "exit order of node " + std::to_string(v) + " is not a permutation of its outgoing arcs");
    if (v != t.root && !exit_orders[v].empty())
      require(exit_orders[v].back() == *t.arc_of[v], ErrorCode::InvalidExitOrder,
              "arborescence arc of node " + std::to_string(v) + " is not its last exit");
  }

  std::vector<std::size_t> next(g.node_count(), 0);
  EulerTour tour;
  std::size_t at = t.root;
  while (next[at] < exit_orders[at].size()) {
    const std::size_t a = exit_orders[at][next[at]++];
    tour.push_back(a);
    at = g.arc(a).head;
  }
  require(tour.size() == g.arc_count(), ErrorCode::NotEulerian, "walk stopped before using every arc");
  return tour;
}

}  // namespace exactcomb::euler

#endif  // EXACTCOMB_EULERTOURS_HPP
