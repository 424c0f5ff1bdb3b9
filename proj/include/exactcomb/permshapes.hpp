#ifndef EXACTCOMB_PERMSHAPES_HPP
#define EXACTCOMB_PERMSHAPES_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/error.hpp"

namespace exactcomb::shapes {

/// q_i = +1 for an ascent a_i < a_{i+1}, -1 for a descent; length n-1 for degree n.
using Shape = std::vector<int>;

/// Row k holds theta(prefix of length k; j) for j = 1..k+1.
using ThetaTable = std::vector<std::vector<BigInt>>;

inline Shape parse_shape(std::string_view s) {
  Shape q;
  q.reserve(s.size());
  for (char c : s) {
    if (c == '+') q.push_back(1);
    else if (c == '-') q.push_back(-1);
    else throw Error(ErrorCode::InvalidArgument, std::string("shape symbol '") + c + "' is not + or -");
  }
  return q;
}

inline std::string to_string(const Shape& q) {
  std::string s;
  for (int x : q) s.push_back(x > 0 ? '+' : '-');
  return s;
}

inline Shape negate(Shape q) {
  for (int& x : q) x = -x;
  return q;
}

inline void validate(const Shape& q) {
  for (int x : q) require(x == 1 || x == -1, ErrorCode::InvalidArgument, "shape entries must be +1 or -1");
}

/// (+1, -1, +1, ...) of degree n.
inline Shape alternating_shape(std::size_t n) {
  Shape q;
  for (std::size_t i = 0; i + 1 < n; ++i) q.push_back(i % 2 == 0 ? 1 : -1);
  return q;
}

/// Appending an ascent sums the previous row strictly below j; a descent sums
/// from j upward. Each row is one running sum, O(n^2) additions in total.
inline ThetaTable theta_table(const Shape& q) {
  validate(q);
  ThetaTable t;
  t.reserve(q.size() + 1);
  t.push_back({BigInt(1)});
  for (int step : q) {
    const auto& prev = t.back();
    const std::size_t m = prev.size();  // previous degree
    std::vector<BigInt> row(m + 1);
    if (step > 0) {
      BigInt acc = 0;
      for (std::size_t j = 0; j <= m; ++j) {
        row[j] = acc;
        if (j < m) acc += prev[j];
      }
    } else {
      BigInt acc = 0;
      for (std::size_t j = m + 1; j-- > 0;) {
        if (j < m) acc += prev[j];
        row[j] = acc;
      }
      row[m] = 0;
    }
    t.push_back(std::move(row));
  }
  return t;
}

inline BigInt psi(const Shape& q) {
  const auto t = theta_table(q);
  BigInt s = 0;
  for (const auto& x : t.back()) s += x;
  return s;
}

inline constexpr std::size_t kBruteforceDegreeCap = 9;

/// Counts permutations of degree |q|+1 with the given shape directly.
inline BigInt psi_bruteforce(const Shape& q, std::size_t cap = kBruteforceDegreeCap) {
  validate(q);
  const std::size_t n = q.size() + 1;
  require(n <= cap, ErrorCode::TooLarge, "degree " + std::to_string(n) + " exceeds brute-force cap " + std::to_string(cap));
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  unsigned long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = q[i] * (a[i + 1] - a[i]) > 0;
    count += ok;
  } while (std::next_permutation(a.begin(), a.end()));
  return BigInt(count);
}

/// E_0 = 1, E_n = psi(alternating shape of degree n).
inline BigInt euler_number(std::size_t n) {
  if (n == 0) return 1;
  return psi(alternating_shape(n));
}

/// E_{n+1} = sum over odd j of C(n, j) E_j E_{n-j}, n >= 1.
inline BigInt euler_recurrence(std::size_t n, const std::vector<BigInt>& e) {
  require(n >= 1 && e.size() > n, ErrorCode::InvalidArgument, "need E_0..E_n for the recurrence");
  BigInt s = 0;
  for (std::size_t j = 1; j <= n; j += 2) s += binomial(n, j) * e[j] * e[n - j];
  return s;
}

inline constexpr std::size_t kNivenDegreeCap = 12;

/// psi(Q) < psi(Q0) for every shape Q of degree n other than Q0 and -Q0.
inline bool niven_maximality(std::size_t n) {
  require(n >= 2 && n <= kNivenDegreeCap, ErrorCode::InvalidArgument,
          "degree must lie in [2, " + std::to_string(kNivenDegreeCap) + "]");
  const Shape q0 = alternating_shape(n);
  const Shape q0neg = negate(q0);
  const BigInt best = psi(q0);
  const std::size_t len = n - 1;
  for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
    Shape q(len);
    for (std::size_t i = 0; i < len; ++i) q[i] = ((bits >> i) & 1UL) ? 1 : -1;
    if (q == q0 || q == q0neg) continue;
    if (psi(q) >= best) return false;
  }
  return true;
}

}  // namespace exactcomb::shapes

#endif  // EXACTCOMB_PERMSHAPES_HPP
