#ifndef EXACTCOMB_TESTS_ORACLES_HPP
#define EXACTCOMB_TESTS_ORACLES_HPP

// Slow reference implementations. Each one is written from the definition and
// shares no code path with the library routine it checks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "exactcomb/exactcomb.hpp"

namespace oracle {

using exactcomb::BigInt;
using exactcomb::BigRational;
using exactcomb::DirectedMultigraph;
using exactcomb::IntMatrix;

/// Sum over all permutations with the inversion-count sign.
inline BigInt leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Expansion along the first row, all signs positive.
inline BigInt expansion_permanent(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<char> used(n, 0);
  std::function<BigInt(std::size_t)> rec = [&](std::size_t row) -> BigInt {
    if (row == n) return 1;
    BigInt s = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || m(row, c) == 0) continue;
      used[c] = 1;
      s += m(row, c) * rec(row + 1);
      used[c] = 0;
    }
    return s;
  };
  return rec(0);
}

/// Each non-root node with outgoing non-loop arcs picks one; count the choices
/// under which every such node walks to the root.
inline BigInt arborescences(const DirectedMultigraph& g, std::size_t root) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::size_t>> choices(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a : g.out_arcs(v))
      if (g.arc(a).head != v) choices[v].push_back(a);
  std::vector<std::size_t> next(n, n);
  BigInt count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      for (std::size_t s = 0; s < n; ++s) {
        if (s == root) continue;
        std::size_t x = s, steps = 0;
        while (x != root && steps <= n) {
          if (next[x] == n) return;
          x = next[x];
          ++steps;
        }
        if (x != root) return;
      }
      ++count;
      return;
    }
    if (v == root) return rec(v + 1);
    for (std::size_t a : choices[v]) {
      next[v] = g.arc(a).head;
      rec(v + 1);
    }
    next[v] = n;
  };
  rec(0);
  return count;
}

/// Closed trails using every arc once, starting with arc 0.
inline BigInt euler_tours(const DirectedMultigraph& g) {
  const std::size_t m = g.arc_count();
  if (m == 0) return 0;
  std::vector<char> used(m, 0);
  used[0] = 1;
  BigInt count = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t at, std::size_t done) {
    if (done == m) {
      if (at == g.arc(0).tail) ++count;
      return;
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (used[a] || g.arc(a).tail != at) continue;
      used[a] = 1;
      rec(g.arc(a).head, done + 1);
      used[a] = 0;
    }
  };
  rec(g.arc(0).head, 1);
  return count;
}

/// Weighted perfect matchings: match the lowest free node with each free neighbour.
inline BigInt matchings(const exactcomb::dimers::UndirectedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> taken(n, 0);
  std::function<BigInt()> rec = [&]() -> BigInt {
    std::size_t u = 0;
    while (u < n && taken[u]) ++u;
    if (u == n) return 1;
    BigInt s = 0;
    taken[u] = 1;
    for (std::size_t v : g.neighbors(u)) {
      if (taken[v]) continue;
      taken[v] = 1;
      s += g.weight(u, v) * rec();
      taken[v] = 0;
    }
    taken[u] = 0;
    return s;
  };
  return rec();
}

/// Pfaffian by definition: every circuit of every even circuit cover has sign +1.
inline bool pfaffian_by_covers(const exactcomb::dimers::UndirectedGraph& g, const exactcomb::dimers::Orientation& o) {
  bool ok = true;
  exactcomb::dimers::for_each_even_circuit_cover(g, [&](const std::vector<std::vector<std::size_t>>& cover) {
    for (const auto& c : cover)
      if (exactcomb::dimers::circuit_sign(o, c) != 1) ok = false;
  });
  return ok;
}

/// Orbits of colourings by union-find over the group action.
inline std::size_t colouring_orbits(const exactcomb::polya::PermGroup& g, std::size_t colours) {
  const std::size_t d = g.degree();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= colours;
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t c = 0; c < total; ++c) {
    std::vector<std::size_t> f(d);
    for (std::size_t i = 0, x = c; i < d; ++i, x /= colours) f[i] = x % colours;
    for (const auto& p : g.elements()) {
      std::vector<std::size_t> h(d);
      for (std::size_t i = 0; i < d; ++i) h[p(i)] = f[i];
      std::size_t code = 0;
      for (std::size_t i = d; i-- > 0;) code = code * colours + h[i];
      parent[find(c)] = find(code);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t c = 0; c < total; ++c) orbits += find(c) == c;
  return orbits;
}

/// Permutations of 1..n whose consecutive differences have the given signs.
inline BigInt shape_count(const std::vector<int>& q) {
  std::vector<int> p(q.size() + 1);
  std::iota(p.begin(), p.end(), 1);
  BigInt count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < q.size() && ok; ++i) ok = (p[i + 1] > p[i]) == (q[i] > 0);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Euler zigzag numbers by the boustrophedon (Seidel) triangle.
inline std::vector<BigInt> zigzag(std::size_t count) {
  std::vector<BigInt> out;
  std::vector<BigInt> row{1};
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(row.back());
    std::vector<BigInt> next(row.size() + 1);
    next[0] = 0;
    for (std::size_t i = 0; i < row.size(); ++i) next[i + 1] = next[i] + row[row.size() - 1 - i];
    row = next;
  }
  return out;
}

/// All balanced U/D words with `pairs` pairs.
inline std::vector<std::string> dyck_words(std::size_t pairs) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t up, std::size_t down) {
    if (up == pairs && down == pairs) {
      out.push_back(cur);
      return;
    }
    if (up < pairs) {
      cur.push_back('U');
      rec(up + 1, down);
      cur.pop_back();
    }
    if (down < up) {
      cur.push_back('D');
      rec(up, down + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

/// Mean maximum depth of the Dyck words for n-node trees.
inline BigRational mean_height(std::size_t n) {
  BigInt sum = 0;
  const auto words = dyck_words(n - 1);
  for (const auto& w : words) {
    long depth = 0, best = 0;
    for (char c : w) best = std::max(best, depth += c == 'U' ? 1 : -1);
    sum += best;
  }
  return exactcomb::make_rational(sum, BigInt(static_cast<unsigned long>(words.size())));
}

/// Some set hitting every U-block and every B-block exactly once.
inline bool has_common_system(const exactcomb::classics::RepInstance& inst) {
  if (inst.u.size() != inst.b.size()) return false;
  std::vector<std::size_t> b_of(inst.ground);
  for (std::size_t i = 0; i < inst.b.size(); ++i)
    for (std::size_t x : inst.b[i]) b_of[x] = i;
  std::vector<char> hit(inst.b.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == inst.u.size()) return true;
    for (std::size_t x : inst.u[i]) {
      if (hit[b_of[x]]) continue;
      hit[b_of[x]] = 1;
      if (rec(i + 1)) return true;
      hit[b_of[x]] = 0;
    }
    return false;
  };
  return rec(0);
}

/// Factorizations with no periodic factor, by trying every pair of subsets
/// containing 0.
inline std::size_t nonperiodic_factorizations(const exactcomb::classics::AbelianGroup& g) {
  const std::size_t n = g.order();
  auto members = [&](std::size_t mask) {
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1U) s.push_back(x);
    return s;
  };
  auto periodic = [&](const std::vector<std::size_t>& s) {
    const std::set<std::size_t> in(s.begin(), s.end());
    for (std::size_t h = 1; h < n; ++h) {
      bool same = true;
      for (std::size_t x : s) same = same && in.count(g.add(x, h));
      if (same) return true;
    }
    return false;
  };
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); mask += 2) subsets.push_back(members(mask));
  std::size_t count = 0;
  for (const auto& a : subsets) {
    if (a.size() < 2 || a.size() == n || n % a.size() != 0 || periodic(a)) continue;
    for (const auto& b : subsets) {
      if (a.size() * b.size() != n || periodic(b)) continue;
      std::set<std::size_t> sums;
      for (std::size_t x : a)
        for (std::size_t y : b) sums.insert(g.add(x, y));
      count += sums.size() == n;
    }
  }
  return count;
}

}  // namespace oracle

#endif  // EXACTCOMB_TESTS_ORACLES_HPP
