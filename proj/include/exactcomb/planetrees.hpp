#ifndef EXACTCOMB_PLANETREES_HPP
#define EXACTCOMB_PLANETREES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/error.hpp"

namespace exactcomb::trees {

/// Rooted tree with ordered children.
struct PlaneTree {
  std::vector<PlaneTree> children;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// A leaf (no children) or an internal node with exactly two children.
struct BinaryTree {
  std::vector<BinaryTree> children;

  static BinaryTree leaf() { return {}; }
  static BinaryTree node(BinaryTree left, BinaryTree right) {
    BinaryTree t;
    t.children.push_back(std::move(left));
    t.children.push_back(std::move(right));
    return t;
  }
  bool is_leaf() const noexcept { return children.empty(); }
  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
};

inline std::size_t node_count(const PlaneTree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += node_count(c);
  return n;
}

inline std::size_t node_count(const BinaryTree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += node_count(c);
  return n;
}

/// Edges on the longest root-to-leaf path; a single node has height 0.
inline std::size_t height(const PlaneTree& t) {
  std::size_t h = 0;
  for (const auto& c : t.children) h = std::max(h, 1 + height(c));
  return h;
}

// --- codes ---

namespace detail {

inline void ud_write(const PlaneTree& t, std::string& out) {
  for (const auto& c : t.children) {
    out.push_back('U');
    ud_write(c, out);
    out.push_back('D');
  }
}

inline void ke_write(const BinaryTree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back('E');
    return;
  }
  out.push_back('K');
  ke_write(t.children[0], out);
  ke_write(t.children[1], out);
}

}  // namespace detail

/// Walk around the tree: U when descending an edge, D when climbing back.
inline std::string ud_encode(const PlaneTree& t) {
  std::string s;
  detail::ud_write(t, s);
  return s;
}

inline bool is_ud_code(std::string_view s) {
  long depth = 0;
  for (char c : s) {
    if (c == 'U') ++depth;
    else if (c == 'D') --depth;
    else return false;
    if (depth < 0) return false;
  }
  return depth == 0;
}

inline PlaneTree ud_decode(std::string_view s) {
  require(is_ud_code(s), ErrorCode::InvalidCode, "'" + std::string(s) + "' is not a balanced U/D word");
  PlaneTree root;
  std::vector<PlaneTree*> path{&root};
  for (char c : s) {
    if (c == 'U') {
      path.back()->children.emplace_back();
      path.push_back(&path.back()->children.back());
    } else {
      path.pop_back();
    }
  }
  return root;
}

/// Preorder: K for an internal node, E for a leaf.
inline std::string ke_encode(const BinaryTree& t) {
  std::string s;
  detail::ke_write(t, s);
  return s;
}

/// One more E than K, and every proper prefix has at least as many K as E.
inline bool is_ke_code(std::string_view s) {
  long balance = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'K') ++balance;
    else if (s[i] == 'E') --balance;
    else return false;
    if (balance < 0 && i + 1 != s.size()) return false;
  }
  return balance == -1;
}

inline BinaryTree ke_decode(std::string_view s) {
  require(is_ke_code(s), ErrorCode::InvalidCode, "'" + std::string(s) + "' is not a valid K/E word");
  std::size_t pos = 0;
  auto parse = [&](auto&& self) -> BinaryTree {
    if (s[pos++] == 'E') return BinaryTree::leaf();
    BinaryTree left = self(self);
    BinaryTree right = self(self);
    return BinaryTree::node(std::move(left), std::move(right));
  };
  return parse(parse);
}

/// A tree splits into its first subtree and the tree without it; these become
/// the left and right children.
inline BinaryTree plane_to_binary(const PlaneTree& t) {
  if (t.children.empty()) return BinaryTree::leaf();
  PlaneTree rest;
  rest.children.assign(t.children.begin() + 1, t.children.end());
  return BinaryTree::node(plane_to_binary(t.children.front()), plane_to_binary(rest));
}

inline PlaneTree binary_to_plane(const BinaryTree& b) {
  if (b.is_leaf()) return {};
  PlaneTree t = binary_to_plane(b.children[1]);
  t.children.insert(t.children.begin(), binary_to_plane(b.children[0]));
  return t;
}

/// KE code without its final E, with K -> U and E -> D.
inline std::string abbreviated_ke_as_ud(const BinaryTree& b) {
  std::string s = ke_encode(b);
  s.pop_back();
  for (char& c : s) c = c == 'K' ? 'U' : 'D';
  return s;
}

// --- counting ---

inline BigInt catalan(std::size_t k) { return divexact(binomial(2 * k, k), BigInt(static_cast<unsigned long>(k + 1))); }

/// Plane trees with n nodes: Catalan(n - 1).
inline BigInt count_plane_trees(std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "a tree has at least one node");
  return catalan(n - 1);
}

/// Binary trees with the given node count, by a ballot count over KE words.
inline BigInt count_binary_trees(std::size_t nodes) {
  if (nodes % 2 == 0) return 0;
  // ways[b] = prefixes with balance b (#K - #E) that never went negative
  std::vector<BigInt> ways(nodes + 2, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i + 1 < nodes; ++i) {
    std::vector<BigInt> next(nodes + 2, 0);
    for (std::size_t b = 0; b <= nodes; ++b) {
      if (ways[b] == 0) continue;
      next[b + 1] += ways[b];
      if (b > 0) next[b - 1] += ways[b];
    }
    ways.swap(next);
  }
  return ways[0];  // the final E takes balance 0 to -1
}

inline constexpr std::size_t kEnumerationCap = 12;

namespace detail {

/// Dyck words over D < U with the given number of U's, in lexicographic order.
inline void dyck_words(std::size_t pairs, std::string& cur, long depth, std::size_t ups,
                       std::vector<std::string>& out) {
  if (cur.size() == 2 * pairs) {
    out.push_back(cur);
    return;
  }
  if (depth > 0) {
    cur.push_back('D');
    dyck_words(pairs, cur, depth - 1, ups, out);
    cur.pop_back();
  }
  if (ups < pairs) {
    cur.push_back('U');
    dyck_words(pairs, cur, depth + 1, ups + 1, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All plane trees with n nodes, ordered by UD code.
inline std::vector<PlaneTree> enumerate_plane_trees(std::size_t n, std::size_t cap = kEnumerationCap) {
  require(n >= 1, ErrorCode::InvalidArgument, "a tree has at least one node");
  require(n <= cap, ErrorCode::TooLarge, "enumeration is limited to n <= " + std::to_string(cap));
  std::vector<std::string> words;
  std::string cur;
  detail::dyck_words(n - 1, cur, 0, 0, words);
  std::vector<PlaneTree> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(ud_decode(w));
  return out;
}

/// All binary trees with the given (odd) node count, built recursively from
/// smaller ones and ordered by KE code.
inline std::vector<BinaryTree> enumerate_binary_trees(std::size_t nodes, std::size_t cap = 2 * kEnumerationCap - 1) {
  require(nodes <= cap, ErrorCode::TooLarge, "enumeration is limited to " + std::to_string(cap) + " nodes");
  if (nodes % 2 == 0) return {};
  if (nodes == 1) return {BinaryTree::leaf()};
  std::vector<BinaryTree> out;
  for (std::size_t left = 1; left + 1 < nodes; left += 2) {
    const auto ls = enumerate_binary_trees(left, cap);
    const auto rs = enumerate_binary_trees(nodes - 1 - left, cap);
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(BinaryTree::node(l, r));
  }
  std::sort(out.begin(), out.end(),
            [](const BinaryTree& a, const BinaryTree& b) { return ke_encode(a) < ke_encode(b); });
  return out;
}

// --- generating functions ---

/// Truncated power series with integer coefficients.
using Series = std::vector<BigInt>;

inline Series series_mul(const Series& a, const Series& b, std::size_t degree) {
  Series r(degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// f = sum c_n x^n with c_n plane trees on n nodes; g = sum b_m x^m with b_m
/// binary trees on m nodes. Checks f = x + f^2, (1 - 2f)^2 = 1 - 4x,
/// g = x + x g^2 and x g(x) = f(x^2) through x^N.
inline bool gf_identity_check(std::size_t N) {
  require(N <= 64, ErrorCode::TooLarge, "series check is limited to degree 64");
  Series f(N + 1, 0), g(N + 1, 0), x(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) f[n] = count_plane_trees(n);
  for (std::size_t m = 1; m <= N; ++m) g[m] = count_binary_trees(m);
  if (N >= 1) x[1] = 1;

  Series ff = series_mul(f, f, N);
  for (std::size_t i = 0; i <= N; ++i)
    if (f[i] != x[i] + ff[i]) return false;

  Series one_minus_2f(N + 1, 0);
  one_minus_2f[0] = 1;
  for (std::size_t i = 1; i <= N; ++i) one_minus_2f[i] = -2 * f[i];
  Series sq = series_mul(one_minus_2f, one_minus_2f, N);
  for (std::size_t i = 0; i <= N; ++i) {
    const BigInt expect = i == 0 ? BigInt(1) : (i == 1 ? BigInt(-4) : BigInt(0));
    if (sq[i] != expect) return false;
  }

  Series xgg = series_mul(x, series_mul(g, g, N), N);
  for (std::size_t i = 0; i <= N; ++i)
    if (g[i] != x[i] + xgg[i]) return false;

  Series xg = series_mul(x, g, N);
  for (std::size_t i = 0; i <= N; ++i) {
    const BigInt rhs = i % 2 == 0 ? f[i / 2] : BigInt(0);
    if (xg[i] != rhs) return false;
  }
  return true;
}

inline constexpr std::size_t kAverageHeightCap = 60;

/// Exact mean height (edge count) over all plane trees with n nodes.
/// A_0 = x and A_h = x / (1 - A_{h-1}) count trees of height <= h, so the mean
/// is sum over h >= 0 of (total - [x^n] A_h) / total.
inline BigRational average_height(std::size_t n, std::size_t cap = kAverageHeightCap) {
  require(n >= 1, ErrorCode::InvalidArgument, "a tree has at least one node");
  require(n <= cap, ErrorCode::TooLarge, "average height is limited to n <= " + std::to_string(cap));
  const BigInt total = count_plane_trees(n);
  Series a(n + 1, 0);
  a[1] = 1;
  BigInt excess = 0;
  for (std::size_t h = 0; h + 1 < n; ++h) {
    excess += total - a[n];
    // inv = 1 / (1 - a): inv_0 = 1, inv_k = sum_{i=1..k} a_i inv_{k-i}
    Series inv(n + 1, 0);
    inv[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t i = 1; i <= k; ++i)
        if (a[i] != 0) inv[k] += a[i] * inv[k - i];
    Series next(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) next[k] = inv[k - 1];
    a.swap(next);
  }
  BigRational mean(excess, total);
  mean.canonicalize();
  return mean;
}

/// Brute-force mean height over the enumeration.
inline BigRational average_height_bruteforce(std::size_t n) {
  const auto all = enumerate_plane_trees(n);
  BigInt sum = 0;
  for (const auto& t : all) sum += static_cast<unsigned long>(height(t));
  BigRational mean(sum, BigInt(static_cast<unsigned long>(all.size())));
  mean.canonicalize();
  return mean;
}

}  // namespace exactcomb::trees

#endif  // EXACTCOMB_PLANETREES_HPP
