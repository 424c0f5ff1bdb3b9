#ifndef EXACTCOMB_DIMERS_HPP
#define EXACTCOMB_DIMERS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <tuple>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/error.hpp"
#include "exactcomb/matrix.hpp"

namespace exactcomb::dimers {

struct Edge {
  std::size_t u;
  std::size_t v;
  BigInt weight = 1;
};

/// Simple undirected graph with symmetric integer edge weights (default 1).
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n) : n_(n), adj_(n), index_(n * n, -1) {}

  UndirectedGraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : UndirectedGraph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  UndirectedGraph(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, long>>& edges) : UndirectedGraph(n) {
    for (const auto& [u, v, w] : edges) add_edge(u, v, w);
  }

  std::size_t add_edge(std::size_t u, std::size_t v, BigInt weight = 1) {
    require(u < n_ && v < n_, ErrorCode::IndexOutOfRange,
            "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside " + std::to_string(n_) + " nodes");
    require(u != v, ErrorCode::InvalidArgument, "loop at node " + std::to_string(u));
    require(index_[u * n_ + v] < 0, ErrorCode::InvalidArgument,
            "parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    const auto id = static_cast<long>(edges_.size());
    edges_.push_back({std::min(u, v), std::max(u, v), std::move(weight)});
    index_[u * n_ + v] = index_[v * n_ + u] = id;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return edges_.size() - 1;
  }

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  bool has_edge(std::size_t u, std::size_t v) const { return u < n_ && v < n_ && index_[u * n_ + v] >= 0; }

  std::optional<std::size_t> edge_id(std::size_t u, std::size_t v) const {
    if (!has_edge(u, v)) return std::nullopt;
    return static_cast<std::size_t>(index_[u * n_ + v]);
  }

  const BigInt& weight(std::size_t u, std::size_t v) const { return edges_.at(*edge_id(u, v)).weight; }

  bool is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n_;
  }

  /// Two-colouring of the nodes if the graph is bipartite.
  std::optional<std::vector<int>> bipartition() const {
    std::vector<int> side(n_, -1);
    for (std::size_t s = 0; s < n_; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      std::deque<std::size_t> q{s};
      while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop_front();
        for (std::size_t w : adj_[v]) {
          if (side[w] < 0) {
            side[w] = 1 - side[v];
            q.push_back(w);
          } else if (side[w] == side[v]) {
            return std::nullopt;
          }
        }
      }
    }
    return side;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<long> index_;
};

/// Antisymmetric sign matrix: eps(i, j) = +1 means the edge is directed i -> j,
/// eps(j, i) = -1 then. Zero off the edge set.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::size_t n) : n_(n), e_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  int eps(std::size_t i, std::size_t j) const { return e_.at(i * n_ + j); }

  void direct(std::size_t from, std::size_t to) {
    e_.at(from * n_ + to) = 1;
    e_.at(to * n_ + from) = -1;
  }

  void flip(std::size_t i, std::size_t j) {
    e_.at(i * n_ + j) = static_cast<std::int8_t>(-e_.at(i * n_ + j));
    e_.at(j * n_ + i) = static_cast<std::int8_t>(-e_.at(j * n_ + i));
  }

  std::size_t out_degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n_; ++j) d += e_[v * n_ + j] > 0;
    return d;
  }

  /// Defined exactly on the edges of g.
  bool fits(const UndirectedGraph& g) const {
    if (n_ != g.node_count()) return false;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const int e = eps(i, j);
        if (g.has_edge(i, j) != (e != 0) || e != -eps(j, i)) return false;
      }
    return true;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> e_;
};

inline constexpr std::size_t kDefaultBruteforceCap = 20;
inline constexpr std::size_t kDefaultPfaffianCheckCap = 14;

namespace detail {

/// Sum over perfect matchings of the product of edge weights (or of 1),
/// branching on the lowest unmatched node, memoised on the unmatched set.
inline BigInt matching_sum(const UndirectedGraph& g, bool weighted) {
  const std::size_t n = g.node_count();
  if (n % 2 == 1) return 0;
  std::unordered_map<std::uint32_t, BigInt> memo;
  std::function<BigInt(std::uint32_t)> rec = [&](std::uint32_t free) -> BigInt {
    if (free == 0) return 1;
    if (auto it = memo.find(free); it != memo.end()) return it->second;
    const std::size_t v = static_cast<std::size_t>(__builtin_ctz(free));
    BigInt total = 0;
    for (std::size_t w : g.neighbors(v)) {
      if (!((free >> w) & 1U)) continue;
      BigInt sub = rec(free & ~(1U << v) & ~(1U << w));
      if (sub == 0) continue;
      if (weighted) sub *= g.weight(v, w);
      total += sub;
    }
    memo.emplace(free, total);
    return total;
  };
  return rec(n == 32 ? ~0U : ((1U << n) - 1));
}

}  // namespace detail

/// Number of perfect matchings by recursive inclusion on the lowest unmatched node.
inline BigInt count_matchings_bruteforce(const UndirectedGraph& g, std::size_t cap = kDefaultBruteforceCap) {
  require(g.node_count() <= cap && g.node_count() <= 31, ErrorCode::TooLarge,
          std::to_string(g.node_count()) + " nodes exceed brute-force cap " + std::to_string(cap));
  return detail::matching_sum(g, false);
}

/// Sum over perfect matchings of the product of their edge weights.
inline BigInt matching_weight_sum_bruteforce(const UndirectedGraph& g, std::size_t cap = kDefaultBruteforceCap) {
  require(g.node_count() <= cap && g.node_count() <= 31, ErrorCode::TooLarge,
          std::to_string(g.node_count()) + " nodes exceed brute-force cap " + std::to_string(cap));
  return detail::matching_sum(g, true);
}

/// Minus the product of eps along the circuit [c0, c1, ..., c_{k-1}, c0].
inline int circuit_sign(const Orientation& o, const std::vector<std::size_t>& circuit) {
  require(circuit.size() >= 2, ErrorCode::InvalidCircuit, "circuit needs at least two nodes");
  require(circuit.size() % 2 == 0, ErrorCode::OddCircuit,
          "circuit of odd length " + std::to_string(circuit.size()));
  int prod = 1;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const std::size_t a = circuit[i];
    const std::size_t b = circuit[(i + 1) % circuit.size()];
    require(a < o.size() && b < o.size(), ErrorCode::IndexOutOfRange, "circuit node out of range");
    const int e = o.eps(a, b);
    require(e != 0, ErrorCode::InvalidCircuit,
            "{" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge");
    prod *= e;
  }
  return -prod;
}

/// Visits every circuit cover of g made of even circuits. Each circuit is
/// listed starting from its smallest node; a length-2 circuit is a single edge.
inline void for_each_even_circuit_cover(const UndirectedGraph& g,
                                        const std::function<void(const std::vector<std::vector<std::size_t>>&)>& visit,
                                        std::size_t cap = kDefaultPfaffianCheckCap) {
  const std::size_t n = g.node_count();
  require(n <= cap, ErrorCode::TooLarge, std::to_string(n) + " nodes exceed cover enumeration cap");
  if (n % 2 == 1) return;
  std::vector<char> covered(n, 0);
  std::vector<std::vector<std::size_t>> cover;
  std::vector<std::size_t> path;

  std::function<void()> next_circuit;
  // extend a simple path from path.front() through uncovered nodes larger than it
  std::function<void()> extend = [&]() {
    const std::size_t s = path.front();
    const std::size_t last = path.back();
    for (std::size_t w : g.neighbors(last)) {
      if (w == s && path.size() >= 4 && path.size() % 2 == 0 && path[1] < path.back()) {
        cover.push_back(path);
        next_circuit();
        cover.pop_back();
      }
      if (w <= s || covered[w]) continue;
      covered[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      covered[w] = 0;
    }
  };

  next_circuit = [&]() {
    std::size_t v = 0;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      visit(cover);
      return;
    }
    covered[v] = 1;
    for (std::size_t w : g.neighbors(v)) {
      if (covered[w]) continue;
      covered[w] = 1;
      cover.push_back({v, w});
      next_circuit();
      cover.pop_back();
      covered[w] = 0;
    }
    auto saved = path;
    path = {v};
    extend();
    path = saved;
    covered[v] = 0;
  };
  next_circuit();
}

/// True iff every circuit of every even circuit cover has sign +1. A circuit
/// sits in some even cover exactly when the remaining nodes have a perfect
/// matching, so each even cycle is checked once rather than once per cover.
inline bool is_pfaffian_orientation(const UndirectedGraph& g, const Orientation& o,
                                    std::size_t cap = kDefaultPfaffianCheckCap) {
  const std::size_t n = g.node_count();
  require(n <= cap, ErrorCode::TooLarge, std::to_string(n) + " nodes exceed Pfaffian check cap " + std::to_string(cap));
  require(o.fits(g), ErrorCode::InvalidArgument, "orientation does not match the graph's edge set");
  if (n % 2 == 1) return true;

  std::unordered_map<std::uint32_t, bool> memo;
  std::function<bool(std::uint32_t)> has_matching = [&](std::uint32_t free) -> bool {
    if (free == 0) return true;
    if (auto it = memo.find(free); it != memo.end()) return it->second;
    const std::size_t v = static_cast<std::size_t>(__builtin_ctz(free));
    bool ok = false;
    for (std::size_t w : g.neighbors(v))
      if (((free >> w) & 1U) && has_matching(free & ~(1U << v) & ~(1U << w))) {
        ok = true;
        break;
      }
    memo.emplace(free, ok);
    return ok;
  };

  const std::uint32_t all = (1U << n) - 1;
  std::vector<std::size_t> path;
  std::uint32_t on_path = 0;
  bool pfaffian = true;

  std::function<void()> extend = [&]() {
    if (!pfaffian) return;
    const std::size_t s = path.front();
    const std::size_t last = path.back();
    for (std::size_t w : g.neighbors(last)) {
      if (w == s && path.size() >= 4 && path.size() % 2 == 0 && path[1] < path.back()) {
        if (circuit_sign(o, path) < 0 && has_matching(all & ~on_path)) {
          pfaffian = false;
          return;
        }
      }
      if (w <= s || ((on_path >> w) & 1U)) continue;
      path.push_back(w);
      on_path |= 1U << w;
      extend();
      on_path &= ~(1U << w);
      path.pop_back();
      if (!pfaffian) return;
    }
  };

  for (std::size_t s = 0; s < n && pfaffian; ++s) {
    path = {s};
    on_path = 1U << s;
    extend();
  }
  return pfaffian;
}

/// Rotation system of a plane graph. rotation[v] lists v's neighbours in
/// counterclockwise order. Faces are traced by leaving each node through the
/// neighbour that follows the arrival neighbour counterclockwise (the sharpest
/// right turn), so every bounded face is walked clockwise with the face on the
/// right. One dart (u -> v) designates the outer face.
class PlanarEmbedding {
 public:
  using Dart = std::pair<std::size_t, std::size_t>;

  PlanarEmbedding() = default;

  PlanarEmbedding(const UndirectedGraph& g, std::vector<std::vector<std::size_t>> rotation,
                  std::optional<Dart> outer_dart)
      : rotation_(std::move(rotation)) {
    const std::size_t n = g.node_count();
    require(rotation_.size() == n, ErrorCode::InvalidEmbedding,
            "rotation system has " + std::to_string(rotation_.size()) + " rows for " + std::to_string(n) + " nodes");
    position_.assign(n, {});
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> a = rotation_[v];
      std::vector<std::size_t> b = g.neighbors(v);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      require(a == b, ErrorCode::InvalidEmbedding,
              "rotation at node " + std::to_string(v) + " is not a permutation of its neighbours");
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) position_[v][rotation_[v][i]] = i;
    }
    trace_faces(g);

    // at most one component with edges, and it must satisfy Euler's formula
    std::size_t with_edges = 0;
    std::vector<int> comp(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = static_cast<int>(s);
      std::size_t nodes = 0, degree_sum = 0;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        ++nodes;
        degree_sum += g.neighbors(v).size();
        for (std::size_t w : g.neighbors(v))
          if (comp[w] < 0) {
            comp[w] = static_cast<int>(s);
            stack.push_back(w);
          }
      }
      if (degree_sum == 0) continue;
      ++with_edges;
      const long euler = static_cast<long>(nodes) - static_cast<long>(degree_sum / 2) + static_cast<long>(faces_.size());
      require(euler == 2, ErrorCode::InvalidEmbedding,
              "V - E + F = " + std::to_string(euler) + ", rotation system is not planar");
    }
    require(with_edges <= 1, ErrorCode::InvalidEmbedding, "embeddings with several non-trivial components are not supported");

    if (g.edge_count() > 0) {
      require(outer_dart && g.has_edge(outer_dart->first, outer_dart->second), ErrorCode::InvalidEmbedding,
              "outer face must be designated by a dart along an edge");
      outer_face_ = face_of_.at(*outer_dart);
    }
  }

  const std::vector<std::vector<std::size_t>>& rotation() const noexcept { return rotation_; }
  const std::vector<std::vector<Dart>>& faces() const noexcept { return faces_; }
  std::optional<std::size_t> outer_face() const noexcept { return outer_face_; }
  std::size_t face_of(const Dart& d) const { return face_of_.at(d); }

  /// Successor dart on the same face.
  Dart next(const Dart& d) const {
    const auto& rot = rotation_[d.second];
    const std::size_t i = position_[d.second].at(d.first);
    return {d.second, rot[(i + 1) % rot.size()]};
  }

 private:
  struct DartHash {
    std::size_t operator()(const Dart& d) const noexcept { return d.first * 1000003u ^ d.second; }
  };

  void trace_faces(const UndirectedGraph& g) {
    for (const Edge& e : g.edges()) {
      for (Dart start : {Dart{e.u, e.v}, Dart{e.v, e.u}}) {
        if (face_of_.count(start)) continue;
        std::vector<Dart> face;
        Dart d = start;
        do {
          face_of_.emplace(d, faces_.size());
          face.push_back(d);
          d = next(d);
        } while (d != start);
        faces_.push_back(std::move(face));
      }
    }
  }

  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::unordered_map<std::size_t, std::size_t>> position_;
  std::vector<std::vector<Dart>> faces_;
  std::unordered_map<Dart, std::size_t, DartHash> face_of_;
  std::optional<std::size_t> outer_face_;
};

/// Boundary darts of a face that agree with the orientation.
inline std::size_t clockwise_count(const PlanarEmbedding& emb, const Orientation& o, std::size_t face) {
  std::size_t c = 0;
  for (const auto& [a, b] : emb.faces().at(face)) c += o.eps(a, b) > 0;
  return c;
}

/// Every bounded face has an odd number of boundary edges oriented clockwise.
inline bool check_clockwise_odd(const UndirectedGraph& g, const PlanarEmbedding& emb, const Orientation& o) {
  require(o.fits(g), ErrorCode::InvalidArgument, "orientation does not match the graph's edge set");
  for (std::size_t f = 0; f < emb.faces().size(); ++f) {
    if (emb.outer_face() && f == *emb.outer_face()) continue;
    if (clockwise_count(emb, o, f) % 2 == 0) return false;
  }
  return true;
}

/// Spanning tree T oriented arbitrarily (lower index -> higher); the remaining
/// edges form a spanning tree of the dual rooted at the outer face, and faces
/// are fixed leaves-first by choosing the direction of the edge to their parent.
inline Orientation kasteleyn_orient(const UndirectedGraph& g, const PlanarEmbedding& emb) {
  const std::size_t n = g.node_count();
  require(g.is_connected(), ErrorCode::Disconnected, "Kasteleyn orientation needs a connected graph");
  Orientation o(n);
  if (g.edge_count() == 0) return o;

  std::vector<char> in_tree(g.edge_count(), 0);
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop_front();
    for (std::size_t w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      in_tree[*g.edge_id(v, w)] = 1;
      o.direct(std::min(v, w), std::max(v, w));
      q.push_back(w);
    }
  }

  const std::size_t faces = emb.faces().size();
  const std::size_t root = *emb.outer_face();
  // dual adjacency over non-tree edges
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> dual(faces);  // (face, edge id)
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    const Edge& ed = g.edges()[e];
    const std::size_t f1 = emb.face_of({ed.u, ed.v});
    const std::size_t f2 = emb.face_of({ed.v, ed.u});
    require(f1 != f2, ErrorCode::InvalidEmbedding, "non-tree edge borders a single face");
    dual[f1].emplace_back(f2, e);
    dual[f2].emplace_back(f1, e);
  }
  std::vector<std::optional<std::size_t>> parent_edge(faces);
  std::vector<char> reached(faces, 0);
  std::vector<std::size_t> order{root};
  reached[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& [f, e] : dual[order[i]])
      if (!reached[f]) {
        reached[f] = 1;
        parent_edge[f] = e;
        order.push_back(f);
      }
  require(order.size() == faces, ErrorCode::InvalidEmbedding, "dual of the cotree is disconnected");

  std::vector<char> oriented(g.edge_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) oriented[e] = in_tree[e];
  for (std::size_t i = order.size(); i-- > 1;) {
    const std::size_t f = order[i];
    const std::size_t pe = *parent_edge[f];
    std::size_t agree = 0;
    std::optional<PlanarEmbedding::Dart> free_dart;
    for (const auto& d : emb.faces()[f]) {
      const std::size_t e = *g.edge_id(d.first, d.second);
      if (e == pe) free_dart = d;
      else if (o.eps(d.first, d.second) > 0) ++agree;
    }
    // the parent edge takes the clockwise direction iff that makes the count odd
    if (agree % 2 == 0) o.direct(free_dart->first, free_dart->second);
    else o.direct(free_dart->second, free_dart->first);
    oriented[pe] = 1;
  }
  return o;
}

/// Antisymmetric matrix a_ij = eps_ij * b_ij.
inline IntMatrix skew_weight_matrix(const UndirectedGraph& g, const Orientation& o) {
  IntMatrix a(g.node_count());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = e.weight * o.eps(e.u, e.v);
    a(e.v, e.u) = e.weight * o.eps(e.v, e.u);
  }
  return a;
}

/// sqrt(det A) for the Pfaffian orientation o: the number of perfect matchings
/// with unit weights, the sum of matching weight products otherwise (as |S|).
inline BigInt count_matchings_fkt(const UndirectedGraph& g, const Orientation& o) {
  require(o.fits(g), ErrorCode::InvalidArgument, "orientation does not match the graph's edge set");
  return integer_sqrt_exact(det(skew_weight_matrix(g, o)));
}

/// Orientation in which every node except `exempt` has odd out-degree, built by
/// reversing paths from offending nodes to the exempt node.
inline Orientation little_orientation(const UndirectedGraph& g, std::size_t exempt) {
  const std::size_t n = g.node_count();
  require(exempt < n, ErrorCode::IndexOutOfRange, "exempt node out of range");
  require(g.is_connected(), ErrorCode::Disconnected, "graph must be connected");
  Orientation o(n);
  for (const Edge& e : g.edges()) o.direct(e.u, e.v);

  for (std::size_t u = 0; u < n; ++u) {
    if (u == exempt || o.out_degree(u) % 2 == 1) continue;
    std::vector<std::size_t> prev(n, n);
    std::deque<std::size_t> q{u};
    prev[u] = u;
    while (!q.empty() && prev[exempt] == n) {
      const std::size_t v = q.front();
      q.pop_front();
      for (std::size_t w : g.neighbors(v))
        if (prev[w] == n) {
          prev[w] = v;
          q.push_back(w);
        }
    }
    for (std::size_t v = exempt; v != u; v = prev[v]) o.flip(prev[v], v);
  }
  return o;
}

/// True iff b (a signing of the 0/1 matrix a01) has det(b) = perm(a01).
inline bool polya_matrix_check(const IntMatrix& a01, const IntMatrix& b, std::size_t cap = kDefaultBruteforceCap) {
  require(a01.size() == b.size(), ErrorCode::ShapeMismatch, "matrices differ in dimension");
  require(a01.size() <= cap, ErrorCode::DimensionTooLarge, "dimension exceeds " + std::to_string(cap));
  for (std::size_t i = 0; i < a01.size(); ++i)
    for (std::size_t j = 0; j < a01.size(); ++j) {
      const BigInt& x = a01(i, j);
      require(x == 0 || x == 1, ErrorCode::ShapeMismatch, "first matrix must have 0/1 entries");
      const bool ok = x == 0 ? b(i, j) == 0 : (b(i, j) == 1 || b(i, j) == -1);
      require(ok, ErrorCode::ShapeMismatch,
              "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a signing of the 0/1 matrix");
    }
  return permanent_ryser(a01, cap) == det(b);
}

/// Biadjacency matrix of a bipartite graph (rows: side 0, columns: side 1),
/// or nullopt if the sides differ in size or the graph is not bipartite.
inline std::optional<IntMatrix> biadjacency(const UndirectedGraph& g) {
  auto sides = g.bipartition();
  if (!sides) return std::nullopt;
  std::vector<std::size_t> left, right;
  for (std::size_t v = 0; v < g.node_count(); ++v) ((*sides)[v] == 0 ? left : right).push_back(v);
  if (left.size() != right.size()) return std::nullopt;
  IntMatrix m(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (g.has_edge(left[i], right[j])) m(i, j) = g.weight(left[i], right[j]);
  return m;
}

/// rows x cols grid graph, node r*cols + c at point (c, r).
inline UndirectedGraph grid_graph(std::size_t rows, std::size_t cols) {
  UndirectedGraph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

/// Straight-line embedding of grid_graph: neighbours counterclockwise from east.
inline PlanarEmbedding grid_embedding(const UndirectedGraph& g, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<std::size_t>> rot(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      auto& v = rot[r * cols + c];
      if (c + 1 < cols) v.push_back(r * cols + c + 1);
      if (r + 1 < rows) v.push_back((r + 1) * cols + c);
      if (c > 0) v.push_back(r * cols + c - 1);
      if (r > 0) v.push_back((r - 1) * cols + c);
    }
  std::optional<PlanarEmbedding::Dart> outer;
  if (cols > 1) outer = PlanarEmbedding::Dart{0, 1};  // bottom row, heading east: outside on the right
  else if (rows > 1) outer = PlanarEmbedding::Dart{0, cols};
  return PlanarEmbedding(g, std::move(rot), outer);
}

}  // namespace exactcomb::dimers

#endif  // EXACTCOMB_DIMERS_HPP
