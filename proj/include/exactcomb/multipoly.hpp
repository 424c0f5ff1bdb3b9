#ifndef EXACTCOMB_MULTIPOLY_HPP
#define EXACTCOMB_MULTIPOLY_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/error.hpp"

namespace exactcomb {

/// Orders indeterminate names so that x2 < x10: alphabetic prefix first, then
/// the trailing integer by value.
struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const {
    auto split = [](std::string_view s) {
      std::size_t k = s.size();
      while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
      return std::pair{s.substr(0, k), s.substr(k)};
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    // strip leading zeros before comparing numerically by length then digits
    auto strip = [](std::string_view s) {
      while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
      return s;
    };
    na = strip(na);
    nb = strip(nb);
    if (na.size() != nb.size()) return na.size() < nb.size();
    if (na != nb) return na < nb;
    return a < b;
  }
};

/// Product of indeterminates with positive exponents, sorted by NaturalLess.
class Monomial {
 public:
  using Power = std::pair<std::string, unsigned>;

  Monomial() = default;
  Monomial(std::initializer_list<Power> powers) {
    for (const auto& [v, e] : powers) mul(v, e);
  }

  static Monomial var(const std::string& name, unsigned e = 1) {
    Monomial m;
    m.mul(name, e);
    return m;
  }

  const std::vector<Power>& powers() const noexcept { return p_; }
  bool is_one() const noexcept { return p_.empty(); }

  unsigned exponent(std::string_view v) const {
    for (const auto& [name, e] : p_)
      if (name == v) return e;
    return 0;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& pw : p_) d += pw.second;
    return d;
  }

  void mul(const std::string& v, unsigned e) {
    if (e == 0) return;
    auto it = std::lower_bound(p_.begin(), p_.end(), v,
                               [](const Power& p, const std::string& name) { return NaturalLess{}(p.first, name); });
    if (it != p_.end() && it->first == v) it->second += e;
    else p_.insert(it, {v, e});
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b.p_) r.mul(v, e);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.p_ == b.p_; }

  std::string to_string() const {
    std::string s;
    for (const auto& [v, e] : p_) {
      if (!s.empty()) s += "*";
      s += v;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<Power> p_;
};

/// Lexicographic on exponent vectors over the merged variable order, larger
/// exponent first; iteration order is the display order (x1^6 before x1^2*x2^2).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0, j = 0;
    NaturalLess less;
    while (i < pa.size() || j < pb.size()) {
      if (j == pb.size()) return true;
      if (i == pa.size()) return false;
      if (pa[i].first == pb[j].first) {
        if (pa[i].second != pb[j].second) return pa[i].second > pb[j].second;
        ++i;
        ++j;
      } else if (less(pa[i].first, pb[j].first)) {
        return true;  // a has a positive exponent where b has 0
      } else {
        return false;
      }
    }
    return false;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients over an
/// explicit set of named indeterminates. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, BigRational, MonomialOrder>;
  using VarSet = std::set<std::string, NaturalLess>;

  MultiPoly() = default;
  MultiPoly(const BigRational& c) {  // NOLINT: constants convert implicitly
    if (c != 0) t_.emplace(Monomial{}, c);
  }
  MultiPoly(long c) : MultiPoly(BigRational(c)) {}  // NOLINT

  static MultiPoly var(const std::string& name) { return term(Monomial::var(name), 1); }

  static MultiPoly term(const Monomial& m, const BigRational& c) {
    MultiPoly p;
    for (const auto& pw : m.powers()) p.vars_.insert(pw.first);
    if (c != 0) p.t_.emplace(m, c);
    return p;
  }

  void declare(const std::string& v) { vars_.insert(v); }

  const Terms& terms() const noexcept { return t_; }
  const VarSet& vars() const noexcept { return vars_; }
  bool is_zero() const noexcept { return t_.empty(); }
  std::size_t term_count() const noexcept { return t_.size(); }

  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

  BigRational constant_term() const {
    auto it = t_.find(Monomial{});
    return it == t_.end() ? BigRational(0) : it->second;
  }

  BigRational coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? BigRational(0) : it->second;
  }

  BigRational coefficient_sum() const {
    BigRational s = 0;
    for (const auto& [m, c] : t_) s += c;
    return s;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    vars_.insert(o.vars_.begin(), o.vars_.end());
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    vars_.insert(o.vars_.begin(), o.vars_.end());
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }

  MultiPoly& operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.vars_ = a.vars_;
    r.vars_.insert(b.vars_.begin(), b.vars_.end());
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }

  MultiPoly pow(unsigned e) const {
    MultiPoly result(1);
    result.vars_ = vars_;
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Replaces every indeterminate occurring in a term by its binding and
  /// expands. Throws UnboundVariable for an occurring indeterminate with no
  /// binding.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const {
    MultiPoly result;
    for (const auto& [v, b] : bindings) result.vars_.insert(b.vars_.begin(), b.vars_.end());
    // cache powers of each binding; cycle indices reuse the same exponents a lot
    std::map<std::pair<std::string, unsigned>, MultiPoly> powers;
    for (const auto& [m, c] : t_) {
      MultiPoly prod(c);
      for (const auto& [v, e] : m.powers()) {
        auto it = bindings.find(v);
        require(it != bindings.end(), ErrorCode::UnboundVariable, "no binding for indeterminate '" + v + "'");
        auto key = std::pair{v, e};
        auto pit = powers.find(key);
        if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
        prod *= pit->second;
      }
      result += prod;
    }
    return result;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t_) {
      BigRational mag = c < 0 ? BigRational(-c) : c;
      if (first) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      first = false;
      if (m.is_one()) {
        s += exactcomb::to_string(mag);
      } else {
        if (mag != 1) s += exactcomb::to_string(mag) + "*";
        s += m.to_string();
      }
    }
    return s;
  }

 private:
  void add_term(const Monomial& m, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Terms t_;
  VarSet vars_;
};

}  // namespace exactcomb

#endif  // EXACTCOMB_MULTIPOLY_HPP
