#ifndef EXACTCOMB_CLASSICS_REPRESENTATIVES_HPP
#define EXACTCOMB_CLASSICS_REPRESENTATIVES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exactcomb/error.hpp"

namespace exactcomb::classics {

using Block = std::vector<std::size_t>;
using Partition = std::vector<Block>;

/// Two partitions U and B of {0..ground-1}.
struct RepInstance {
  std::size_t ground = 0;
  Partition u;
  Partition b;
};

/// Either a common system of representatives, or a family of U-blocks whose
/// union contains more B-blocks than the family has members. With `swapped`
/// the roles are exchanged: B-blocks whose union contains more U-blocks.
struct RepResult {
  bool success = false;
  std::vector<std::size_t> representatives;  // sorted
  std::vector<std::size_t> cert_u;           // block indices
  std::vector<std::size_t> cert_b;
  bool swapped = false;
};

/// Block index of every element; throws MalformedPartition unless the blocks
/// are nonempty and cover the ground set exactly once.
inline std::vector<std::size_t> block_of(std::size_t ground, const Partition& p, const char* name) {
  std::vector<std::size_t> of(ground, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < p.size(); ++i) {
    require(!p[i].empty(), ErrorCode::MalformedPartition, std::string(name) + "-block " + std::to_string(i) + " is empty");
    for (std::size_t x : p[i]) {
      require(x < ground, ErrorCode::MalformedPartition,
              std::string(name) + "-block " + std::to_string(i) + " has element " + std::to_string(x) + " outside the ground set");
      require(of[x] == static_cast<std::size_t>(-1), ErrorCode::MalformedPartition,
              "element " + std::to_string(x) + " lies in two " + name + "-blocks");
      of[x] = i;
    }
  }
  for (std::size_t x = 0; x < ground; ++x)
    require(of[x] != static_cast<std::size_t>(-1), ErrorCode::MalformedPartition,
            "element " + std::to_string(x) + " lies in no " + name + "-block");
  return of;
}

namespace detail {

/// Matches every "left" block to a distinct "right" block through a shared
/// element, one left block at a time, rerouting along alternating chains
/// left -> right -> (its current left) -> ... until a free right block turns up.
inline RepResult augment(const Partition& left, const std::vector<std::size_t>& right_of,
                         std::size_t right_count) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rep_of_left(left.size(), none);  // chosen element
  std::vector<std::size_t> left_of_right(right_count, none);

  for (std::size_t start = 0; start < left.size(); ++start) {
    std::vector<std::size_t> came_from_right(right_count, none);  // element used to reach it
    std::vector<std::size_t> parent_left(right_count, none);
    std::vector<char> left_seen(left.size(), 0);
    std::vector<std::size_t> queue{start};
    left_seen[start] = 1;
    std::optional<std::size_t> free_right;
    for (std::size_t qi = 0; qi < queue.size() && !free_right; ++qi) {
      const std::size_t l = queue[qi];
      for (std::size_t x : left[l]) {
        const std::size_t r = right_of[x];
        if (parent_left[r] != none) continue;
        parent_left[r] = l;
        came_from_right[r] = x;
        if (left_of_right[r] == none) {
          free_right = r;
          break;
        }
        const std::size_t next = left_of_right[r];
        if (!left_seen[next]) {
          left_seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
    if (!free_right) {
      RepResult fail;
      for (std::size_t l = 0; l < left.size(); ++l)
        if (left_seen[l]) fail.cert_b.push_back(l);
      for (std::size_t r = 0; r < right_count; ++r)
        if (parent_left[r] != none) fail.cert_u.push_back(r);
      return fail;  // caller orients the certificate
    }
    // flip the chain back to start
    std::size_t r = *free_right;
    while (true) {
      const std::size_t l = parent_left[r];
      const std::size_t previous_right = rep_of_left[l] == none ? none : right_of[rep_of_left[l]];
      rep_of_left[l] = came_from_right[r];
      left_of_right[r] = l;
      if (l == start) break;
      r = previous_right;
    }
  }
  RepResult ok;
  ok.success = true;
  for (std::size_t x : rep_of_left) ok.representatives.push_back(x);
  std::sort(ok.representatives.begin(), ok.representatives.end());
  return ok;
}

}  // namespace detail

/// Builds the system block by block, extending through alternating chains;
/// a failed extension yields the blocks the chain search could reach.
inline RepResult common_representatives(const RepInstance& inst) {
  const auto u_of = block_of(inst.ground, inst.u, "U");
  const auto b_of = block_of(inst.ground, inst.b, "B");
  if (inst.u.size() <= inst.b.size()) {
    // match B-blocks into U-blocks; certificate: reached U-blocks contain the reached B-blocks
    return detail::augment(inst.b, u_of, inst.u.size());
  }
  RepResult r = detail::augment(inst.u, b_of, inst.b.size());
  r.swapped = true;
  std::swap(r.cert_u, r.cert_b);
  return r;
}

/// Exactly one representative in every U-block and every B-block.
inline bool is_common_system(const RepInstance& inst, const std::vector<std::size_t>& x) {
  const auto u_of = block_of(inst.ground, inst.u, "U");
  const auto b_of = block_of(inst.ground, inst.b, "B");
  std::vector<int> hu(inst.u.size(), 0), hb(inst.b.size(), 0);
  for (std::size_t e : x) {
    if (e >= inst.ground) return false;
    ++hu[u_of[e]];
    ++hb[b_of[e]];
  }
  return std::all_of(hu.begin(), hu.end(), [](int c) { return c == 1; }) &&
         std::all_of(hb.begin(), hb.end(), [](int c) { return c == 1; });
}

/// The certificate's k blocks of one partition lie inside the union of fewer
/// blocks of the other.
inline bool certificate_violates_condition(const RepInstance& inst, const RepResult& r) {
  const auto u_of = block_of(inst.ground, inst.u, "U");
  const auto b_of = block_of(inst.ground, inst.b, "B");
  const Partition& inner = r.swapped ? inst.u : inst.b;
  const std::vector<std::size_t>& inner_ids = r.swapped ? r.cert_u : r.cert_b;
  const std::vector<std::size_t>& outer_ids = r.swapped ? r.cert_b : r.cert_u;
  const std::vector<std::size_t>& outer_of = r.swapped ? b_of : u_of;
  if (inner_ids.size() <= outer_ids.size()) return false;
  std::vector<char> in_outer(r.swapped ? inst.b.size() : inst.u.size(), 0);
  for (std::size_t i : outer_ids) in_outer.at(i) = 1;
  for (std::size_t i : inner_ids)
    for (std::size_t x : inner.at(i))
      if (!in_outer[outer_of[x]]) return false;
  return true;
}

}  // namespace exactcomb::classics

#endif  // EXACTCOMB_CLASSICS_REPRESENTATIVES_HPP
