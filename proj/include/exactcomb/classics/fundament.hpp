#ifndef EXACTCOMB_CLASSICS_FUNDAMENT_HPP
#define EXACTCOMB_CLASSICS_FUNDAMENT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/error.hpp"

namespace exactcomb::classics {

/// Odd digits d_1..d_s repeated with period s; the candidate basis is
/// {2^(i-1) d_i}.
using PeriodicOddSeq = std::vector<long>;

inline void validate_period(const PeriodicOddSeq& d) {
  require(!d.empty(), ErrorCode::InvalidArgument, "period must be nonempty");
  for (long x : d) require(x % 2 != 0, ErrorCode::InvalidArgument, "digit " + std::to_string(x) + " is even");
}

namespace detail {

/// One forced step: the parity of x fixes eps, then x <- (x - eps*d) / 2.
inline long step(long x, long d, int& eps) {
  eps = (x % 2 != 0) ? 1 : 0;
  return (x - eps * d) / 2;
}

/// For every state (x, phase) with |x| <= max|d|, whether the walk reaches 0.
/// States are indexed (x + bound) * s + phase.
inline std::vector<char> reaches_zero(const PeriodicOddSeq& d, long& bound) {
  const std::size_t s = d.size();
  bound = 0;
  for (long x : d) bound = std::max(bound, std::labs(x));
  const std::size_t states = static_cast<std::size_t>(2 * bound + 1) * s;
  auto index = [&](long x, std::size_t p) { return static_cast<std::size_t>(x + bound) * s + p; };
  // 0 = unknown, 1 = on current walk, 2 = reaches zero, 3 = cycles
  std::vector<char> state(states, 0);
  for (std::size_t p = 0; p < s; ++p) state[index(0, p)] = 2;
  std::vector<std::size_t> walk;
  for (long x0 = -bound; x0 <= bound; ++x0)
    for (std::size_t p0 = 0; p0 < s; ++p0) {
      long x = x0;
      std::size_t p = p0;
      walk.clear();
      while (state[index(x, p)] == 0) {
        state[index(x, p)] = 1;
        walk.push_back(index(x, p));
        int eps = 0;
        x = step(x, d[p], eps);
        p = (p + 1) % s;
      }
      const char verdict = state[index(x, p)] == 2 ? 2 : 3;  // 1 means we closed a cycle
      for (std::size_t i : walk) state[i] = verdict;
    }
  std::vector<char> ok(states);
  for (std::size_t i = 0; i < states; ++i) ok[i] = state[i] == 2;
  return ok;
}

}  // namespace detail

/// An integer with no finite representation, or nullopt for a fundament.
/// A stuck state (y, p) is reached from x = 2^p y, whose first p digits are 0.
inline std::optional<BigInt> fundament_witness(const PeriodicOddSeq& d) {
  validate_period(d);
  long bound = 0;
  const auto ok = detail::reaches_zero(d, bound);
  const std::size_t s = d.size();
  for (long y = -bound; y <= bound; ++y)
    for (std::size_t p = 0; p < s; ++p)
      if (!ok[static_cast<std::size_t>(y + bound) * s + p]) return BigInt(y) * pow2(p);
  return std::nullopt;
}

/// Every integer is a finite sum of distinct 2^(i-1) d_i. Uniqueness is
/// automatic since each digit is forced by parity; only termination is decided,
/// on the finite automaton of states with |x| <= max|d|, which the walk enters
/// from any start and never leaves.
inline bool fundament_decide(const PeriodicOddSeq& d) { return !fundament_witness(d).has_value(); }

/// The forced digits of x, or nullopt if no zero state appears within max_steps.
inline std::optional<std::vector<int>> greedy_expansion(const PeriodicOddSeq& d, long x, std::size_t max_steps = 4096) {
  validate_period(d);
  std::vector<int> eps;
  std::size_t p = 0;
  while (x != 0) {
    if (eps.size() == max_steps) return std::nullopt;
    int e = 0;
    x = detail::step(x, d[p], e);
    eps.push_back(e);
    p = (p + 1) % d.size();
  }
  return eps;
}

/// sum eps_i 2^(i-1) d_i.
inline BigInt evaluate_expansion(const PeriodicOddSeq& d, const std::vector<int>& eps) {
  BigInt x = 0;
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i]) x += BigInt(d[i % d.size()]) * pow2(i);
  return x;
}

/// Period-2 fundaments [a, b] with a, b odd and 0 < -b < a <= a_max
/// (0 < -b <= a with `inclusive`).
inline std::vector<std::pair<long, long>> fundament_scan(long a_max, bool inclusive = false) {
  std::vector<std::pair<long, long>> found;
  for (long a = 1; a <= a_max; a += 2)
    for (long nb = 1; inclusive ? nb <= a : nb < a; nb += 2)
      if (fundament_decide({a, -nb})) found.emplace_back(a, -nb);
  return found;
}

/// Integers whose base-4 digits are all 0 or 1, ascending: the k-th is k's
/// binary expansion read in base 4.
inline std::vector<BigInt> moser_debruijn(std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    BigInt v = 0, place = 1;
    for (std::size_t bits = k; bits != 0; bits >>= 1) {
      if (bits & 1U) v += place;
      place *= 4;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace exactcomb::classics

#endif  // EXACTCOMB_CLASSICS_FUNDAMENT_HPP
