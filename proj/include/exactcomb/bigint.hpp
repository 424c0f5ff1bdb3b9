#ifndef EXACTCOMB_BIGINT_HPP
#define EXACTCOMB_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "exactcomb/error.hpp"

namespace exactcomb {

// Arbitrary precision scalars. mpq_class keeps itself canonical after every
// arithmetic operation (gcd(num, den) = 1, den > 0); values built from a raw
// numerator/denominator pair go through make_rational.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  require(den != 0, ErrorCode::InvalidArgument, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow_ui(const BigInt& base, std::uint64_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

/// Exact division; the caller guarantees divisibility.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Returns s with s*s == n. Throws NotAPerfectSquare otherwise; in the dimer
/// code that means the orientation handed to the determinant was not Pfaffian.
inline BigInt integer_sqrt_exact(const BigInt& n) {
  require(n >= 0, ErrorCode::NotAPerfectSquare, "negative value " + n.get_str());
  BigInt s, rem;
  mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  require(rem == 0, ErrorCode::NotAPerfectSquare, n.get_str() + " is not a perfect square");
  return s;
}

inline double to_double(const BigRational& q) { return q.get_d(); }

}  // namespace exactcomb

#endif  // EXACTCOMB_BIGINT_HPP
