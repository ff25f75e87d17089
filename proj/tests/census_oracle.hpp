#pragma once

#include <vector>

#include "tropcount/marked_tree.hpp"

namespace tropcount::testing {

// Independent census oracle: trivalent trees with r ordered ends correspond
// to rooted binary trees on leaves 1..r-1 (cut the last end). Enumerates by
// recursive bipartition, a different route than edge insertion.
inline void build_subtree(const std::vector<int>& leaves, int parent, const MarkedTree& t,
                   std::vector<MarkedTree>& out);

inline void split_and_recurse(const std::vector<int>& leaves, int parent, MarkedTree t,
                       std::vector<MarkedTree>& out) {
  if (leaves.size() == 1) {
    t.end_vertex[leaves[0] - 1] = parent;
    out.push_back(t);
    return;
  }
  // partitions with the minimal leaf on the left, both sides nonempty
  std::size_t k = leaves.size();
  for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<int> left{leaves[0]}, right;
    for (std::size_t j = 1; j < k; ++j)
      ((mask >> (j - 1)) & 1u ? left : right).push_back(leaves[j]);
    if (right.empty()) continue;
    // a binary node: one child subtree per side
    std::vector<MarkedTree> after_left;
    build_subtree(left, parent, t, after_left);
    for (const MarkedTree& tl : after_left) build_subtree(right, parent, tl, out);
  }
}

inline void build_subtree(const std::vector<int>& leaves, int parent, const MarkedTree& base,
                   std::vector<MarkedTree>& out) {
  if (leaves.size() == 1) {
    MarkedTree t = base;
    t.end_vertex[leaves[0] - 1] = parent;
    out.push_back(t);
    return;
  }
  MarkedTree t = base;
  int v = t.finite_count++;
  t.bounded.push_back({parent, v});
  split_and_recurse(leaves, v, t, out);
}

inline std::vector<MarkedTree> census_oracle(int r) {
  std::vector<int> leaves;
  for (int i = 1; i < r; ++i) leaves.push_back(i);
  MarkedTree base;
  base.ends = r;
  base.finite_count = 1;
  base.end_vertex.assign(r, -1);
  base.end_vertex[r - 1] = 0;
  std::vector<MarkedTree> out;
  split_and_recurse(leaves, 0, base, out);
  return out;
}


}  // namespace tropcount::testing
