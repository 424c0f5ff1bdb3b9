#ifndef EXACTCOMB_MATRIX_HPP
#define EXACTCOMB_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/error.hpp"

namespace exactcomb {

/// Square matrix of big integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, BigInt(0)) {}

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      require(row.size() == n_, ErrorCode::ShapeMismatch, "matrix rows must have length " + std::to_string(n_));
      std::size_t j = 0;
      for (long v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_skew_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)(i, i) != 0) return false;
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
    return true;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

/// m with row k and column k removed.
inline IntMatrix minor(const IntMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  require(k < n, ErrorCode::IndexOutOfRange,
          "minor index " + std::to_string(k) + " outside dimension " + std::to_string(n));
  IntMatrix r(n - 1);
  for (std::size_t i = 0, ri = 0; i < n; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, rj = 0; j < n; ++j) {
      if (j == k) continue;
      r(ri, rj++) = m(i, j);
    }
    ++ri;
  }
  return r;
}

/// Fraction-free (Bareiss) elimination. Every division is exact, so all
/// intermediates stay integral; det of the 0x0 matrix is 1.
inline BigInt det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = divexact(t, prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt d = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

inline constexpr std::size_t kDefaultRyserCap = 24;

/// Ryser's inclusion-exclusion over column subsets, visited in Gray-code
/// order so each step updates the row sums by a single column.
inline BigInt permanent_ryser(const IntMatrix& m, std::size_t cap = kDefaultRyserCap) {
  const std::size_t n = m.size();
  require(n <= cap, ErrorCode::DimensionTooLarge,
          "permanent of " + std::to_string(n) + "x" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (n == 0) return 1;

  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).fits_slong_p() || std::labs(m(i, j).get_si()) > (1L << 30)) {
        small = false;
        break;
      }

  BigInt total = 0;
  BigInt prod;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  if (small) {
    std::vector<long> entry(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) entry[i * n + j] = m(i, j).get_si();
    std::vector<long> rowsum(n, 0);
    std::uint64_t gray = 0;
    for (std::uint64_t s = 1; s < subsets; ++s) {
      const std::size_t col = static_cast<std::size_t>(__builtin_ctzll(s));
      gray ^= std::uint64_t{1} << col;
      const bool added = (gray >> col) & 1;
      for (std::size_t i = 0; i < n; ++i) rowsum[i] += added ? entry[i * n + col] : -entry[i * n + col];
      prod = 1;
      for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
      if (__builtin_popcountll(gray) % 2 == 1) total -= prod;
      else total += prod;
    }
  } else {
    std::vector<BigInt> rowsum(n, BigInt(0));
    std::uint64_t gray = 0;
    for (std::uint64_t s = 1; s < subsets; ++s) {
      const std::size_t col = static_cast<std::size_t>(__builtin_ctzll(s));
      gray ^= std::uint64_t{1} << col;
      const bool added = (gray >> col) & 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (added) rowsum[i] += m(i, col);
        else rowsum[i] -= m(i, col);
      }
      prod = 1;
      for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
      if (__builtin_popcountll(gray) % 2 == 1) total -= prod;
      else total += prod;
    }
  }
  return n % 2 == 1 ? BigInt(-total) : total;
}

}  // namespace exactcomb

#endif  // EXACTCOMB_MATRIX_HPP
