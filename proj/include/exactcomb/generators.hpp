#ifndef EXACTCOMB_GENERATORS_HPP
#define EXACTCOMB_GENERATORS_HPP

// Seeded random instances for tests, acceptance runs and the CLI.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/classics.hpp"
#include "exactcomb/digraph.hpp"
#include "exactcomb/dimers.hpp"
#include "exactcomb/matrix.hpp"

namespace exactcomb::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

/// Union of closed walks, each starting at a node already in use, so the
/// result is Eulerian. Loops and parallel arcs occur; arc order is shuffled.
inline DirectedMultigraph random_eulerian_digraph(Rng& rng, std::size_t max_arcs = 10, std::size_t max_nodes = 6) {
  const std::size_t n = uniform(rng, 1, max_nodes);
  const std::size_t target = uniform(rng, 1, max_arcs);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::vector<std::size_t> used{uniform(rng, 0, n - 1)};
  while (arcs.size() < target) {
    const std::size_t len = uniform(rng, 1, target - arcs.size());
    std::vector<std::size_t> walk{used[uniform(rng, 0, used.size() - 1)]};
    for (std::size_t i = 1; i < len; ++i) walk.push_back(uniform(rng, 0, n - 1));
    for (std::size_t i = 0; i < len; ++i) {
      arcs.emplace_back(walk[i], walk[(i + 1) % len]);
      if (std::find(used.begin(), used.end(), walk[i]) == used.end()) used.push_back(walk[i]);
    }
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return DirectedMultigraph(n, arcs);
}

struct PlaneGraph {
  dimers::UndirectedGraph graph;
  dimers::PlanarEmbedding embedding;
};

/// Stacked triangulation (repeatedly drop a vertex into a random bounded
/// triangle), then random edge deletions that keep the graph connected, then a
/// random relabelling. keep is the probability that a deletable edge survives.
inline PlaneGraph random_planar_graph(Rng& rng, std::size_t n, double keep = 0.6) {
  require(n >= 1, ErrorCode::InvalidArgument, "need at least one node");
  std::vector<std::vector<std::size_t>> rot(n);
  std::optional<std::pair<std::size_t, std::size_t>> outer;
  if (n == 2) {
    rot[0] = {1};
    rot[1] = {0};
    outer = std::pair<std::size_t, std::size_t>{0, 1};
  } else if (n >= 3) {
    // triangle 0 (0,0), 1 (1,0), 2 (0,1); its bounded face walked clockwise is 0 -> 2 -> 1
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    outer = std::pair<std::size_t, std::size_t>{0, 1};
    std::vector<std::array<std::size_t, 3>> faces{{0, 2, 1}};
    for (std::size_t x = 3; x < n; ++x) {
      const std::size_t fi = uniform(rng, 0, faces.size() - 1);
      const auto [a, b, c] = faces[fi];
      for (auto [p, q] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
        auto& r = rot[p];
        r.insert(std::find(r.begin(), r.end(), q), x);
      }
      rot[x] = {a, c, b};
      faces[fi] = {a, b, x};
      faces.push_back({b, c, x});
      faces.push_back({c, a, x});
    }
  }

  auto connected_without = [&](std::size_t u, std::size_t v) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
      const std::size_t w = stack.back();
      stack.pop_back();
      for (std::size_t y : rot[w]) {
        if ((w == u && y == v) || (w == v && y == u) || seen[y]) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    return seen[v] != 0;
  };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : rot[u])
      if (u < v) edges.emplace_back(u, v);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::bernoulli_distribution drop(1.0 - keep);
  for (const auto& [u, v] : edges) {
    if (!drop(rng) || !connected_without(u, v)) continue;
    rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
    rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
  }
  if (outer && std::find(rot[outer->first].begin(), rot[outer->first].end(), outer->second) == rot[outer->first].end()) {
    // the original outer edge is gone; on the sphere any face may serve
    outer.reset();
    for (std::size_t u = 0; u < n && !outer; ++u)
      if (!rot[u].empty()) outer = std::pair<std::size_t, std::size_t>{u, rot[u].front()};
  }

  const auto label = random_permutation(rng, n);
  dimers::UndirectedGraph g(n);
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : rot[u])
      if (u < v) kept.emplace_back(label[u], label[v]);
  std::shuffle(kept.begin(), kept.end(), rng);
  for (const auto& [u, v] : kept) g.add_edge(u, v);
  std::vector<std::vector<std::size_t>> relabelled(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : rot[u]) relabelled[label[u]].push_back(label[v]);
  if (outer) outer = std::pair<std::size_t, std::size_t>{label[outer->first], label[outer->second]};
  dimers::PlanarEmbedding emb(g, std::move(relabelled), outer);
  return {std::move(g), std::move(emb)};
}

/// Two random partitions of {0..size*blocks-1} into blocks of equal size.
inline classics::RepInstance random_uniform_rep_instance(Rng& rng, std::size_t block_size, std::size_t blocks) {
  const std::size_t n = block_size * blocks;
  classics::RepInstance inst{n, {}, {}};
  for (auto* part : {&inst.u, &inst.b}) {
    const auto p = random_permutation(rng, n);
    for (std::size_t i = 0; i < blocks; ++i) {
      classics::Block blk(p.begin() + static_cast<long>(i * block_size), p.begin() + static_cast<long>((i + 1) * block_size));
      std::sort(blk.begin(), blk.end());
      part->push_back(std::move(blk));
    }
  }
  return inst;
}

/// Two random partitions with independently random block counts.
inline classics::RepInstance random_rep_instance(Rng& rng, std::size_t ground) {
  classics::RepInstance inst{ground, {}, {}};
  for (auto* part : {&inst.u, &inst.b}) {
    const std::size_t k = uniform(rng, 1, ground);
    part->assign(k, {});
    const auto p = random_permutation(rng, ground);
    for (std::size_t i = 0; i < ground; ++i) (*part)[i < k ? i : uniform(rng, 0, k - 1)].push_back(p[i]);
    for (auto& blk : *part) std::sort(blk.begin(), blk.end());
  }
  return inst;
}

inline classics::LinearSpace relabel(Rng& rng, const classics::LinearSpace& ls) {
  const auto p = random_permutation(rng, ls.points);
  classics::LinearSpace out{ls.points, {}};
  for (const auto& line : ls.lines) {
    std::vector<std::size_t> l;
    for (std::size_t x : line) l.push_back(p[x]);
    std::sort(l.begin(), l.end());
    out.lines.push_back(std::move(l));
  }
  std::shuffle(out.lines.begin(), out.lines.end(), rng);
  return out;
}

/// Greedily placed random lines of size >= 3 meeting pairwise in at most one
/// point, with every remaining pair closed off by a 2-point line.
inline classics::LinearSpace random_pair_closure(Rng& rng, std::size_t n) {
  classics::LinearSpace ls{n, {}};
  std::vector<char> covered(n * n, 0);
  const std::size_t attempts = uniform(rng, 0, 3 * n);
  for (std::size_t t = 0; t < attempts && n >= 3; ++t) {
    // no line may hold every point
    const std::size_t size = std::min(uniform(rng, 3, std::max<std::size_t>(3, n / 2 + 1)), n - 1);
    if (size < 3) continue;
    auto p = random_permutation(rng, n);
    std::vector<std::size_t> line(p.begin(), p.begin() + static_cast<long>(size));
    bool fresh = true;
    for (std::size_t i = 0; i < line.size() && fresh; ++i)
      for (std::size_t j = i + 1; j < line.size() && fresh; ++j) fresh = !covered[line[i] * n + line[j]];
    if (!fresh) continue;
    for (std::size_t a : line)
      for (std::size_t b : line)
        if (a != b) covered[a * n + b] = 1;
    std::sort(line.begin(), line.end());
    ls.lines.push_back(std::move(line));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!covered[a * n + b]) ls.lines.push_back({a, b});
  return ls;
}

/// One of: relabelled near-pencil, Fano plane, order-3 projective plane, or a
/// random pair closure.
inline classics::LinearSpace random_linear_space(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return relabel(rng, classics::near_pencil(uniform(rng, 3, 10)));
    case 1: return relabel(rng, classics::fano_plane());
    case 2: return relabel(rng, classics::cyclic_plane(13, {0, 1, 3, 9}));
    default: return relabel(rng, random_pair_closure(rng, uniform(rng, 3, 10)));
  }
}

}  // namespace exactcomb::gen

#endif  // EXACTCOMB_GENERATORS_HPP
