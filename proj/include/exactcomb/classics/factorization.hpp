#ifndef EXACTCOMB_CLASSICS_FACTORIZATION_HPP
#define EXACTCOMB_CLASSICS_FACTORIZATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "exactcomb/error.hpp"

namespace exactcomb::classics {

/// Z_{m_1} x ... x Z_{m_t}. Elements are numbered by mixed radix, first
/// coordinate most significant, so 0 is the identity.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<unsigned> type) : type_(std::move(type)) {
    require(!type_.empty(), ErrorCode::InvalidArgument, "group type must be nonempty");
    order_ = 1;
    for (unsigned m : type_) {
      require(m >= 2, ErrorCode::InvalidArgument, "cyclic factors must have order >= 2");
      order_ *= m;
      require(order_ <= 1000000, ErrorCode::GroupTooLarge, "group order exceeds 10^6");
    }
  }

  const std::vector<unsigned>& type() const noexcept { return type_; }
  std::size_t order() const noexcept { return order_; }

  std::vector<unsigned> coords(std::size_t e) const {
    check(e);
    std::vector<unsigned> c(type_.size());
    for (std::size_t i = type_.size(); i-- > 0;) {
      c[i] = static_cast<unsigned>(e % type_[i]);
      e /= type_[i];
    }
    return c;
  }

  std::size_t element(const std::vector<unsigned>& c) const {
    require(c.size() == type_.size(), ErrorCode::ElementOutOfGroup, "coordinate tuple has the wrong length");
    std::size_t e = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      require(c[i] < type_[i], ErrorCode::ElementOutOfGroup, "coordinate out of range");
      e = e * type_[i] + c[i];
    }
    return e;
  }

  std::size_t add(std::size_t a, std::size_t b) const {
    check(a);
    check(b);
    std::size_t r = 0, place = 1;
    for (std::size_t i = type_.size(); i-- > 0;) {
      const std::size_t m = type_[i];
      r += ((a % m + b % m) % m) * place;
      a /= m;
      b /= m;
      place *= m;
    }
    return r;
  }

  std::size_t negate(std::size_t a) const {
    check(a);
    std::size_t r = 0, place = 1;
    for (std::size_t i = type_.size(); i-- > 0;) {
      const std::size_t m = type_[i];
      r += ((m - a % m) % m) * place;
      a /= m;
      place *= m;
    }
    return r;
  }

  void check(std::size_t e) const {
    require(e < order_, ErrorCode::ElementOutOfGroup,
            "element " + std::to_string(e) + " is not in a group of order " + std::to_string(order_));
  }

 private:
  std::vector<unsigned> type_;
  std::size_t order_ = 0;
};

using Subset = std::vector<std::size_t>;

/// |A||B| = |G| and the sums a + b are pairwise distinct.
inline bool is_factorization(const AbelianGroup& g, const Subset& a, const Subset& b) {
  for (std::size_t x : a) g.check(x);
  for (std::size_t x : b) g.check(x);
  require(!a.empty() && !b.empty(), ErrorCode::InvalidArgument, "factors must be nonempty");
  if (a.size() * b.size() != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (std::size_t x : a)
    for (std::size_t y : b) {
      const std::size_t s = g.add(x, y);
      if (hit[s]) return false;
      hit[s] = 1;
    }
  return true;
}

/// Some h != 0 with A + h = A.
inline bool is_periodic_subset(const AbelianGroup& g, const Subset& a) {
  require(!a.empty(), ErrorCode::InvalidArgument, "subset must be nonempty");
  std::vector<char> in(g.order(), 0);
  for (std::size_t x : a) {
    g.check(x);
    in[x] = 1;
  }
  for (std::size_t h = 1; h < g.order(); ++h) {
    bool stable = true;
    for (std::size_t x : a)
      if (!in[g.add(x, h)]) {
        stable = false;
        break;
      }
    if (stable) return true;
  }
  return false;
}

struct Factorization {
  Subset a;
  Subset b;
  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

inline constexpr std::size_t kHajosGroupCap = 72;
inline constexpr std::uint64_t kHajosWorkBudget = 20000000;

/// All factorizations G = A + B with 0 in both factors, 1 < |A|, |B| < |G|,
/// and neither factor periodic. An empty result means every factorization at
/// this size has a periodic factor. The budget bounds the number of search
/// nodes across both levels.
inline std::vector<Factorization> hajos_search(const AbelianGroup& g, std::uint64_t budget = kHajosWorkBudget) {
  const std::size_t n = g.order();
  require(n <= kHajosGroupCap, ErrorCode::GroupTooLarge,
          "order " + std::to_string(n) + " exceeds " + std::to_string(kHajosGroupCap));
  std::uint64_t work = 0;
  auto spend = [&]() {
    require(++work <= budget, ErrorCode::GroupTooLarge, "search budget exhausted at order " + std::to_string(n));
  };

  std::vector<Factorization> found;
  for (std::size_t r = 2; r < n; ++r) {
    if (n % r != 0 || r == n) continue;
    const std::size_t s = n / r;
    if (s < 2) continue;

    Subset a{0};
    // complete B by covering the smallest uncovered element each time
    std::vector<char> covered(n, 0);
    Subset b;
    std::function<void()> cover_rest = [&]() {
      spend();
      std::size_t first = 0;
      while (first < n && covered[first]) ++first;
      if (first == n) {
        Subset sb = b;
        std::sort(sb.begin(), sb.end());
        if (!is_periodic_subset(g, sb)) found.push_back({a, sb});
        return;
      }
      if (b.size() == s) return;
      for (std::size_t x : a) {
        const std::size_t t = g.add(first, g.negate(x));  // first = x + t
        bool fits = true;
        for (std::size_t y : a)
          if (covered[g.add(y, t)]) {
            fits = false;
            break;
          }
        if (!fits) continue;
        for (std::size_t y : a) covered[g.add(y, t)] = 1;
        b.push_back(t);
        cover_rest();
        b.pop_back();
        for (std::size_t y : a) covered[g.add(y, t)] = 0;
      }
    };

    std::function<void(std::size_t)> choose_a = [&](std::size_t next) {
      spend();
      if (a.size() == r) {
        if (is_periodic_subset(g, a)) return;
        std::fill(covered.begin(), covered.end(), 0);
        for (std::size_t x : a) covered[x] = 1;  // B contains 0
        b = {0};
        cover_rest();
        return;
      }
      for (std::size_t x = next; x < n; ++x) {
        if (n - x < r - a.size()) break;
        a.push_back(x);
        choose_a(x + 1);
        a.pop_back();
      }
    };
    choose_a(1);
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace exactcomb::classics

#endif  // EXACTCOMB_CLASSICS_FACTORIZATION_HPP
