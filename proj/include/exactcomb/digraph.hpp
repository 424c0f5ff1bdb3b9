#ifndef EXACTCOMB_DIGRAPH_HPP
#define EXACTCOMB_DIGRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "exactcomb/error.hpp"

namespace exactcomb {

struct Arc {
  std::size_t tail;
  std::size_t head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph. Parallel arcs and loops are allowed; an arc's identity
/// is its position in the arc list.
class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;
  explicit DirectedMultigraph(std::size_t nodes) : out_(nodes), in_(nodes) {}

  DirectedMultigraph(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& arcs)
      : DirectedMultigraph(nodes) {
    for (const auto& [t, h] : arcs) add_arc(t, h);
  }

  std::size_t add_arc(std::size_t tail, std::size_t head) {
    require(tail < node_count() && head < node_count(), ErrorCode::IndexOutOfRange,
            "arc (" + std::to_string(tail) + "," + std::to_string(head) + ") outside " +
                std::to_string(node_count()) + " nodes");
    arcs_.push_back({tail, head});
    out_[tail].push_back(arcs_.size() - 1);
    in_[head].push_back(arcs_.size() - 1);
    return arcs_.size() - 1;
  }

  std::size_t node_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const Arc& arc(std::size_t a) const { return arcs_.at(a); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  /// Outgoing arc ids of v, in arc-list order.
  const std::vector<std::size_t>& out_arcs(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_arcs(std::size_t v) const { return in_.at(v); }
  std::size_t out_degree(std::size_t v) const { return out_.at(v).size(); }
  std::size_t in_degree(std::size_t v) const { return in_.at(v).size(); }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// Nodes of g are the arcs of the input; (a, b) is an arc whenever head(a) == tail(b).
inline DirectedMultigraph line_graph(const DirectedMultigraph& g) {
  DirectedMultigraph l(g.arc_count());
  for (std::size_t a = 0; a < g.arc_count(); ++a)
    for (std::size_t b : g.out_arcs(g.arc(a).head)) l.add_arc(a, b);
  return l;
}

}  // namespace exactcomb

#endif  // EXACTCOMB_DIGRAPH_HPP
