#ifndef EXACTCOMB_DEBRUIJN_HPP
#define EXACTCOMB_DEBRUIJN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exactcomb/bigint.hpp"
#include "exactcomb/digraph.hpp"
#include "exactcomb/error.hpp"
#include "exactcomb/eulertours.hpp"

namespace exactcomb::debruijn {

inline constexpr std::uint64_t kDefaultEdgeCap = std::uint64_t{1} << 22;
inline constexpr unsigned kMaxAlphabet = 36;

/// G_n over a k-letter alphabet. Node v is the length-(n-1) word whose base-k
/// value is v; arc a is the length-n word with value a, running from its
/// prefix to its suffix.
struct DeBruijnGraph {
  unsigned alphabet = 2;
  unsigned order = 1;
  DirectedMultigraph graph;
};

inline std::uint64_t checked_power(unsigned base, unsigned exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    require(r <= cap, ErrorCode::TooLarge,
            std::to_string(base) + "^" + std::to_string(exp) + " exceeds size cap " + std::to_string(cap));
  }
  return r;
}

inline DeBruijnGraph build_graph(unsigned alphabet, unsigned n, std::uint64_t edge_cap = kDefaultEdgeCap) {
  require(alphabet >= 2 && alphabet <= kMaxAlphabet, ErrorCode::InvalidArgument,
          "alphabet size must lie in [2, " + std::to_string(kMaxAlphabet) + "]");
  require(n >= 1, ErrorCode::InvalidArgument, "order n must be at least 1");
  const std::uint64_t edges = checked_power(alphabet, n, edge_cap);
  const std::uint64_t nodes = edges / alphabet;
  DeBruijnGraph g{alphabet, n, DirectedMultigraph(nodes)};
  for (std::uint64_t w = 0; w < edges; ++w) g.graph.add_arc(w / alphabet, w % nodes);
  return g;
}

/// Word of the given length whose base-k value is `value`, most significant symbol first.
inline std::vector<std::uint8_t> word_of(std::uint64_t value, unsigned alphabet, unsigned length) {
  std::vector<std::uint8_t> w(length);
  for (unsigned i = length; i-- > 0;) {
    w[i] = static_cast<std::uint8_t>(value % alphabet);
    value /= alphabet;
  }
  return w;
}

inline char symbol_char(std::uint8_t s) { return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10); }

/// Cyclic sequence of symbols; equality is up to rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::vector<std::uint8_t> symbols) : s_(std::move(symbols)) {
    require(!s_.empty(), ErrorCode::InvalidArgument, "cyclic word must be nonempty");
  }

  static CyclicWord parse(std::string_view text) {
    std::vector<std::uint8_t> s;
    for (char c : text) {
      if (c >= '0' && c <= '9') s.push_back(static_cast<std::uint8_t>(c - '0'));
      else if (c >= 'a' && c <= 'z') s.push_back(static_cast<std::uint8_t>(c - 'a' + 10));
      else throw Error(ErrorCode::ParseError, std::string("invalid symbol '") + c + "' in word");
    }
    return CyclicWord(std::move(s));
  }

  const std::vector<std::uint8_t>& symbols() const noexcept { return s_; }
  std::size_t size() const noexcept { return s_.size(); }

  /// Least rotation (Booth's algorithm).
  CyclicWord canonical() const {
    const std::size_t n = s_.size();
    std::vector<long> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
      const std::uint8_t sj = s_[j % n];
      long i = fail[j - k - 1];
      while (i != -1 && sj != s_[(k + i + 1) % n]) {
        if (sj < s_[(k + i + 1) % n]) k = j - i - 1;
        i = fail[i];
      }
      if (sj != s_[(k + i + 1) % n]) {  // i == -1
        if (sj < s_[k % n]) k = j;
        fail[j - k] = -1;
      } else {
        fail[j - k] = i + 1;
      }
    }
    std::vector<std::uint8_t> r(n);
    for (std::size_t t = 0; t < n; ++t) r[t] = s_[(k + t) % n];
    return CyclicWord(std::move(r));
  }

  std::string to_string() const {
    std::string out;
    out.reserve(s_.size());
    for (auto c : s_) out.push_back(symbol_char(c));
    return out;
  }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.size() == b.size() && a.canonical().s_ == b.canonical().s_;
  }

 private:
  std::vector<std::uint8_t> s_;
};

/// True iff |w| = k^n and every length-n word appears exactly once as a cyclic factor.
inline bool is_pn_cycle(const CyclicWord& w, unsigned n, unsigned alphabet) {
  if (n == 0 || alphabet < 2) return false;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= alphabet;
    if (total > w.size()) return false;
  }
  const auto& s = w.symbols();
  if (s.size() != total) return false;
  for (auto c : s)
    if (c >= alphabet) return false;
  std::vector<char> seen(total, 0);
  for (std::size_t start = 0; start < s.size(); ++start) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < n; ++i) v = v * alphabet + s[(start + i) % s.size()];
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

/// Closed form 2^(2^(n-1) - n) for the binary alphabet.
inline BigInt count_pn_cycles(unsigned n) {
  require(n >= 1, ErrorCode::InvalidArgument, "n must be at least 1");
  require(n <= 30, ErrorCode::TooLarge, "2^(2^(n-1)-n) is too large to materialise for n > 30");
  return pow2((std::uint64_t{1} << (n - 1)) - n);
}

/// Cycle count for any alphabet, routed through the BEST theorem on G_n.
inline BigInt count_cycles_via_best(unsigned n, unsigned alphabet) {
  return euler::count_euler_tours(build_graph(alphabet, n).graph);
}

/// Hierholzer circuit through G_n; the word is the last symbol of every arc
/// in circuit order, returned as its least rotation.
inline CyclicWord generate_pn_cycle(unsigned n, unsigned alphabet, std::uint64_t edge_cap = kDefaultEdgeCap) {
  const DeBruijnGraph dg = build_graph(alphabet, n, edge_cap);
  const DirectedMultigraph& g = dg.graph;
  std::vector<std::size_t> next(g.node_count(), 0);
  std::vector<std::size_t> stack_nodes{0};
  std::vector<std::size_t> stack_arcs;
  std::vector<std::size_t> circuit;
  circuit.reserve(g.arc_count());
  while (!stack_nodes.empty()) {
    const std::size_t v = stack_nodes.back();
    if (next[v] < g.out_degree(v)) {
      const std::size_t a = g.out_arcs(v)[next[v]++];
      stack_nodes.push_back(g.arc(a).head);
      stack_arcs.push_back(a);
    } else {
      stack_nodes.pop_back();
      if (!stack_arcs.empty()) {
        circuit.push_back(stack_arcs.back());
        stack_arcs.pop_back();
      }
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  std::vector<std::uint8_t> word;
  word.reserve(circuit.size());
  for (std::size_t a : circuit) word.push_back(static_cast<std::uint8_t>(a % alphabet));
  return CyclicWord(std::move(word)).canonical();
}

/// Exhaustive binary search over words that begin with 0^n, which is exactly
/// the least rotation of every P_n-cycle. Output is sorted.
inline std::vector<CyclicWord> enumerate_pn_cycles(unsigned n, unsigned max_n = 5) {
  require(n >= 1, ErrorCode::InvalidArgument, "n must be at least 1");
  require(n <= max_n, ErrorCode::TooLarge, "enumeration is limited to n <= " + std::to_string(max_n));
  const std::size_t length = std::size_t{1} << n;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint8_t> word(n, 0);
  std::vector<char> seen(length, 0);
  seen[0] = 1;
  std::vector<CyclicWord> out;

  auto window_at = [&](std::size_t start) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < n; ++i) v = (v << 1) | word[(start + i) % length];
    return v;
  };

  std::function<void(std::uint64_t)> grow = [&](std::uint64_t last) {
    if (word.size() == length) {
      // the n-1 wrap-around windows must be new as well
      std::vector<std::uint64_t> added;
      bool ok = true;
      for (std::size_t start = length - n + 1; start < length && ok; ++start) {
        const std::uint64_t v = window_at(start);
        if (seen[v]) ok = false;
        else {
          seen[v] = 1;
          added.push_back(v);
        }
      }
      for (auto v : added) seen[v] = 0;
      if (ok) out.emplace_back(word);
      return;
    }
    for (std::uint8_t bit = 0; bit < 2; ++bit) {
      const std::uint64_t v = ((last << 1) | bit) & mask;
      if (seen[v]) continue;
      seen[v] = 1;
      word.push_back(bit);
      grow(v);
      word.pop_back();
      seen[v] = 0;
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(),
            [](const CyclicWord& a, const CyclicWord& b) { return a.symbols() < b.symbols(); });
  return out;
}

/// True iff mapping (node of a -> node of b) is a bijection carrying the arc
/// multiset of a onto that of b.
inline bool is_isomorphism(const DirectedMultigraph& a, const DirectedMultigraph& b,
                           const std::vector<std::size_t>& mapping) {
  if (a.node_count() != b.node_count() || a.arc_count() != b.arc_count() || mapping.size() != a.node_count())
    return false;
  std::vector<char> hit(b.node_count(), 0);
  for (std::size_t m : mapping) {
    if (m >= b.node_count() || hit[m]) return false;
    hit[m] = 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> ea, eb;
  for (const Arc& x : a.arcs()) ea.emplace_back(mapping[x.tail], mapping[x.head]);
  for (const Arc& x : b.arcs()) eb.emplace_back(x.tail, x.head);
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

/// Explicit isomorphism L(G_n) -> G_{n+1}: an arc of G_n is a length-n word,
/// which is exactly a node label of G_{n+1}. Returns the relabeling when it
/// verifies, nullopt otherwise.
inline std::optional<std::vector<std::size_t>> line_graph_isomorphism(unsigned alphabet, unsigned n) {
  const DeBruijnGraph gn = build_graph(alphabet, n);
  const DeBruijnGraph gn1 = build_graph(alphabet, n + 1);
  const DirectedMultigraph lg = line_graph(gn.graph);
  std::vector<std::size_t> mapping(lg.node_count());
  // arc id of G_n is the base-k value of its word, node id of G_{n+1} likewise
  for (std::size_t a = 0; a < lg.node_count(); ++a) {
    const auto word = word_of(a, alphabet, n);
    std::size_t v = 0;
    for (auto s : word) v = v * alphabet + s;
    mapping[a] = v;
  }
  if (!is_isomorphism(lg, gn1.graph, mapping)) return std::nullopt;
  return mapping;
}

}  // namespace exactcomb::debruijn

#endif  // EXACTCOMB_DEBRUIJN_HPP
