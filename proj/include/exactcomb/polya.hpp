#ifndef EXACTCOMB_POLYA_HPP
#define EXACTCOMB_POLYA_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/error.hpp"
#include "exactcomb/multipoly.hpp"

namespace exactcomb::polya {

/// Bijection of {0..n-1}; (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> image) : img_(std::move(image)) {
    std::vector<char> hit(img_.size(), 0);
    for (std::size_t x : img_) {
      require(x < img_.size() && !hit[x], ErrorCode::InvalidArgument, "image array is not a bijection");
      hit[x] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return Permutation(std::move(v));
  }

  std::size_t degree() const noexcept { return img_.size(); }
  std::size_t operator()(std::size_t x) const { return img_.at(x); }
  const std::vector<std::size_t>& image() const noexcept { return img_; }

  Permutation inverse() const {
    std::vector<std::size_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = i;
    return Permutation(std::move(v));
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    require(p.degree() == q.degree(), ErrorCode::DegreeMismatch,
            "cannot compose permutations of degree " + std::to_string(p.degree()) + " and " +
                std::to_string(q.degree()));
    std::vector<std::size_t> v(q.degree());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.img_[q.img_[i]];
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> img_;
};

/// b[i] = number of i-cycles for i = 1..n; b[0] is unused and zero.
using CycleType = std::vector<std::size_t>;

inline CycleType cycle_type(const Permutation& p) {
  const std::size_t n = p.degree();
  CycleType b(n + 1, 0);
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = p(x)) {
      seen[x] = 1;
      ++len;
    }
    ++b[len];
  }
  return b;
}

/// (b1,b2,...,bn)
inline std::string to_string(const CycleType& b) {
  std::string s = "(";
  for (std::size_t i = 1; i < b.size(); ++i) s += (i > 1 ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

/// Explicit element list, sorted; always contains the identity.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> elements) : degree_(degree), elems_(std::move(elements)) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elems_.size(); }
  const std::vector<Permutation>& elements() const& noexcept { return elems_; }
  std::vector<Permutation> elements() && { return std::move(elems_); }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elems_;
};

/// Closure of the generators under composition (finite, so inverses come free).
inline PermGroup close_group(std::size_t degree, const std::vector<Permutation>& generators) {
  for (const auto& g : generators)
    require(g.degree() == degree, ErrorCode::DegreeMismatch,
            "generator of degree " + std::to_string(g.degree()) + " in a group of degree " + std::to_string(degree));
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    const Permutation p = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation q = g * p;
      if (seen.insert(q).second) frontier.push_back(std::move(q));
    }
  }
  return PermGroup(degree, {seen.begin(), seen.end()});
}

inline bool is_group(const PermGroup& g) {
  std::set<Permutation> s(g.elements().begin(), g.elements().end());
  if (!s.count(Permutation::identity(g.degree()))) return false;
  for (const auto& a : g.elements()) {
    if (!s.count(a.inverse())) return false;
    for (const auto& b : g.elements())
      if (!s.count(a * b)) return false;
  }
  return true;
}

inline std::string cycle_variable(std::size_t i) { return "x" + std::to_string(i); }

/// (1/|G|) sum over g of prod x_i^{b_i(g)}, over indeterminates x1..xn.
inline MultiPoly cycle_index(const PermGroup& g) {
  MultiPoly ci;
  for (std::size_t i = 1; i <= g.degree(); ++i) ci.declare(cycle_variable(i));
  const BigRational share(1, static_cast<unsigned long>(g.order()));
  for (const auto& p : g.elements()) {
    const CycleType b = cycle_type(p);
    Monomial m;
    for (std::size_t i = 1; i < b.size(); ++i) m.mul(cycle_variable(i), static_cast<unsigned>(b[i]));
    ci += MultiPoly::term(m, share);
  }
  return ci;
}

/// Cauchy–Frobenius: average number of fixed points.
inline BigInt count_orbits(const PermGroup& g) {
  BigInt fixed = 0;
  for (const auto& p : g.elements()) fixed += static_cast<unsigned long>(cycle_type(p)[1]);
  return divexact(fixed, BigInt(static_cast<unsigned long>(g.order())));
}

namespace detail {

/// i from the indeterminate name "x<i>".
inline std::size_t cycle_var_index(const std::string& name) {
  require(name.size() >= 2 && name[0] == 'x', ErrorCode::UnboundVariable,
          "'" + name + "' is not a cycle-index indeterminate");
  std::size_t i = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    require(name[k] >= '0' && name[k] <= '9', ErrorCode::UnboundVariable,
            "'" + name + "' is not a cycle-index indeterminate");
    i = i * 10 + static_cast<std::size_t>(name[k] - '0');
  }
  require(i >= 1, ErrorCode::UnboundVariable, "cycle-index indeterminates start at x1");
  return i;
}

}  // namespace detail

/// Colour name and its weight.
using ColorWeighting = std::vector<std::pair<std::string, MultiPoly>>;

/// Colours weighted by indeterminates of the same name.
inline ColorWeighting colors_as_variables(const std::vector<std::string>& names) {
  require(!names.empty(), ErrorCode::InvalidArgument, "colour set must be nonempty");
  ColorWeighting w;
  for (const auto& n : names) w.emplace_back(n, MultiPoly::var(n));
  return w;
}

/// Every colour weighted 1.
inline ColorWeighting unit_colors(std::size_t k) {
  require(k >= 1, ErrorCode::InvalidArgument, "colour set must be nonempty");
  ColorWeighting w;
  for (std::size_t i = 0; i < k; ++i) w.emplace_back("c" + std::to_string(i), MultiPoly(1));
  return w;
}

/// x_i -> sum over colours of weight^i.
inline MultiPoly pattern_inventory(const MultiPoly& ci, const ColorWeighting& w) {
  require(!w.empty(), ErrorCode::InvalidArgument, "colour set must be nonempty");
  std::map<std::string, MultiPoly> bind;
  for (const auto& v : ci.vars()) {
    const std::size_t i = detail::cycle_var_index(v);
    MultiPoly s;
    for (const auto& [name, weight] : w) s += weight.pow(static_cast<unsigned>(i));
    bind.emplace(v, s);
  }
  return ci.substitute(bind);
}

/// x_i -> colors.
inline BigInt count_patterns(const MultiPoly& ci, unsigned long colors) {
  std::map<std::string, MultiPoly> bind;
  for (const auto& v : ci.vars()) {
    detail::cycle_var_index(v);
    bind.emplace(v, MultiPoly(BigRational(colors)));
  }
  const MultiPoly r = ci.substitute(bind);
  const BigRational c = r.constant_term();
  require(c.get_den() == 1, ErrorCode::InvalidArgument, "cycle index evaluated to a non-integer " + exactcomb::to_string(c));
  return c.get_num();
}

/// Weighted Cauchy–Frobenius term: total weight of the colourings fixed by g,
/// computed from its cycles (each cycle is monochrome).
inline MultiPoly fixed_weight(const Permutation& g, const ColorWeighting& w) {
  const CycleType b = cycle_type(g);
  MultiPoly r(1);
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    MultiPoly s;
    for (const auto& [name, weight] : w) s += weight.pow(static_cast<unsigned>(i));
    r *= s.pow(static_cast<unsigned>(b[i]));
  }
  return r;
}

/// (1/|G|) sum over g of fixed_weight(g).
inline MultiPoly weighted_cauchy_frobenius(const PermGroup& g, const ColorWeighting& w) {
  MultiPoly total;
  for (const auto& p : g.elements()) total += fixed_weight(p, w);
  return total * MultiPoly(BigRational(1, static_cast<unsigned long>(g.order())));
}

inline constexpr std::uint64_t kDefaultColoringCap = 1000000;

namespace detail {

inline std::uint64_t coloring_count(std::size_t domain, std::size_t colors, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < domain; ++i) {
    total *= colors;
    require(total <= cap, ErrorCode::TooLarge,
            std::to_string(colors) + "^" + std::to_string(domain) + " colourings exceed cap " + std::to_string(cap));
  }
  return total;
}

/// Colouring index -> colour per cell, cell 0 least significant.
inline void decode(std::uint64_t code, std::size_t colors, std::vector<std::size_t>& f) {
  for (auto& c : f) {
    c = code % colors;
    code /= colors;
  }
}

inline std::uint64_t encode(const std::vector<std::size_t>& f, std::size_t colors) {
  std::uint64_t code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * colors + f[i];
  return code;
}

}  // namespace detail

/// sigma(g)f = f o g^{-1}.
inline std::vector<std::size_t> act(const Permutation& g, const std::vector<std::size_t>& f) {
  std::vector<std::size_t> r(f.size());
  for (std::size_t d = 0; d < f.size(); ++d) r[g(d)] = f[d];
  return r;
}

/// Enumerates every colouring, sweeps out its orbit, and adds one weight per orbit.
inline MultiPoly orbit_inventory_oracle(const PermGroup& g, const ColorWeighting& w,
                                        std::uint64_t cap = kDefaultColoringCap) {
  require(!w.empty(), ErrorCode::InvalidArgument, "colour set must be nonempty");
  const std::size_t n = g.degree();
  const std::size_t k = w.size();
  const std::uint64_t total = detail::coloring_count(n, k, cap);

  std::vector<char> done(total, 0);
  std::vector<std::size_t> f(n), h(n);
  std::map<std::pair<std::size_t, std::size_t>, MultiPoly> powers;
  MultiPoly inventory;
  for (const auto& [name, weight] : w)
    for (const auto& v : weight.vars()) inventory.declare(v);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (done[code]) continue;
    detail::decode(code, k, f);
    for (const auto& p : g.elements()) {
      for (std::size_t d = 0; d < n; ++d) h[p(d)] = f[d];
      done[detail::encode(h, k)] = 1;
    }
    std::vector<std::size_t> mult(k, 0);
    for (std::size_t c : f) ++mult[c];
    MultiPoly omega(1);
    for (std::size_t c = 0; c < k; ++c) {
      if (mult[c] == 0) continue;
      auto key = std::pair{c, mult[c]};
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, w[c].second.pow(static_cast<unsigned>(mult[c]))).first;
      omega *= it->second;
    }
    inventory += omega;
  }
  return inventory;
}

/// Orbits of colourings under G acting on cells and H permuting the colours
/// simultaneously: f -> h o f o g^{-1}.
inline BigInt count_orbits_with_color_group(const PermGroup& g, const PermGroup& h,
                                            std::uint64_t cap = kDefaultColoringCap) {
  const std::size_t n = g.degree();
  const std::size_t k = h.degree();
  require(k >= 1, ErrorCode::InvalidArgument, "colour set must be nonempty");
  const std::uint64_t total = detail::coloring_count(n, k, cap);
  std::vector<char> done(total, 0);
  std::vector<std::size_t> f(n), img(n);
  BigInt orbits = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (done[code]) continue;
    ++orbits;
    detail::decode(code, k, f);
    for (const auto& p : g.elements())
      for (const auto& c : h.elements()) {
        for (std::size_t d = 0; d < n; ++d) img[p(d)] = c(f[d]);
        done[detail::encode(img, k)] = 1;
      }
  }
  return orbits;
}

// --- built-in actions ---

namespace detail {

using Vec3 = std::array<int, 3>;
using Mat3 = std::array<Vec3, 3>;

inline Vec3 apply(const Mat3& m, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

inline Permutation induced(const Mat3& m, const std::vector<Vec3>& points) {
  std::vector<std::size_t> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vec3 q = apply(m, points[i]);
    img[i] = static_cast<std::size_t>(std::find(points.begin(), points.end(), q) - points.begin());
  }
  return Permutation(std::move(img));
}

// quarter turns about the z and x axes
inline constexpr Mat3 kTurnZ{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}};
inline constexpr Mat3 kTurnX{{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}};

inline PermGroup cube_action(const std::vector<Vec3>& points) {
  return close_group(points.size(), {induced(kTurnZ, points), induced(kTurnX, points)});
}

}  // namespace detail

/// Faces as unit normals +x, -x, +y, -y, +z, -z.
inline std::vector<detail::Vec3> cube_faces() {
  return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

inline std::vector<detail::Vec3> cube_vertices() {
  std::vector<detail::Vec3> v;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) v.push_back({x, y, z});
  return v;
}

/// Edge midpoints: one coordinate zero, the others +-1.
inline std::vector<detail::Vec3> cube_edges() {
  std::vector<detail::Vec3> v;
  for (int axis = 0; axis < 3; ++axis)
    for (int a : {-1, 1})
      for (int b : {-1, 1}) {
        detail::Vec3 p{};
        p[axis] = 0;
        p[(axis + 1) % 3] = a;
        p[(axis + 2) % 3] = b;
        v.push_back(p);
      }
  return v;
}

inline PermGroup cube_face_group() { return detail::cube_action(cube_faces()); }
inline PermGroup cube_vertex_group() { return detail::cube_action(cube_vertices()); }
inline PermGroup cube_edge_group() { return detail::cube_action(cube_edges()); }

inline Permutation rotation(std::size_t n, std::size_t shift = 1) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (i + shift) % n;
  return Permutation(std::move(v));
}

inline PermGroup cyclic_group(std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "cyclic group needs n >= 1");
  return close_group(n, {rotation(n)});
}

inline PermGroup dihedral_group(std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "dihedral group needs n >= 1");
  std::vector<std::size_t> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return close_group(n, {rotation(n), Permutation(std::move(refl))});
}

inline PermGroup symmetric_group(std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "symmetric group needs n >= 1");
  if (n == 1) return close_group(1, {});
  std::vector<std::size_t> swap01(n);
  for (std::size_t i = 0; i < n; ++i) swap01[i] = i;
  std::swap(swap01[0], swap01[1]);
  return close_group(n, {rotation(n), Permutation(std::move(swap01))});
}

/// cube-faces | cube-vertices | cube-edges | cyclic:N | dihedral:N | symmetric:N
inline PermGroup named_group(std::string_view spec, std::size_t max_degree = 64) {
  if (spec == "cube-faces") return cube_face_group();
  if (spec == "cube-vertices") return cube_vertex_group();
  if (spec == "cube-edges") return cube_edge_group();
  const auto colon = spec.find(':');
  require(colon != std::string_view::npos, ErrorCode::InvalidArgument, "unknown group '" + std::string(spec) + "'");
  const std::string_view kind = spec.substr(0, colon);
  const std::string digits(spec.substr(colon + 1));
  require(!digits.empty() && digits.size() <= 6 && std::all_of(digits.begin(), digits.end(), ::isdigit),
          ErrorCode::InvalidArgument, "group size in '" + std::string(spec) + "' is not a number");
  const std::size_t n = std::stoul(digits);
  require(n <= max_degree, ErrorCode::TooLarge, "group degree " + digits + " exceeds " + std::to_string(max_degree));
  if (kind == "cyclic") return cyclic_group(n);
  if (kind == "dihedral") return dihedral_group(n);
  if (kind == "symmetric") {
    require(n <= 8, ErrorCode::TooLarge, "symmetric groups are listed explicitly; n <= 8");
    return symmetric_group(n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown group '" + std::string(spec) + "'");
}

}  // namespace exactcomb::polya

#endif  // EXACTCOMB_POLYA_HPP
