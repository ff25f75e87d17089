#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "tropcount/rational.hpp"

namespace tropcount {

// A tree with r ordered ends. Finite vertices are anonymous indices
// 0..finite_count-1; end i (1-based, ordered) is an unbounded edge joining
// the infinite vertex u_i to the finite vertex end_vertex[i-1]. Bounded
// edges join two finite vertices. Edge ids: bounded edges come first
// (0..bounded-1), then ends (bounded + i - 1 for end i).
struct MarkedTree {
  int ends = 0;
  int finite_count = 0;
  std::vector<int> end_vertex;                // size ends
  std::vector<std::pair<int, int>> bounded;   // {a, b} finite vertex pairs

  int bounded_count() const { return static_cast<int>(bounded.size()); }
  int edge_count() const { return bounded_count() + ends; }
  bool is_end_edge(int eid) const { return eid >= bounded_count(); }
  int end_index(int eid) const { return eid - bounded_count() + 1; }  // 1-based
  int end_edge_id(int end_1based) const { return bounded_count() + end_1based - 1; }
  int degree(int v) const;

  void validate() const;  // connected, acyclic, stability (finite degree >= 3)

  // Identity up to isomorphism fixing the end order: the sorted list of
  // end-set bitmasks cut out by the bounded edges. Needs ends <= 32.
  std::vector<std::uint32_t> canonical_key() const;
};

// Either a finite vertex or the infinite vertex u_i of end i.
struct VertexRef {
  bool infinite = false;
  int idx = 0;  // finite vertex index, or 1-based end index when infinite

  static VertexRef finite(int v) { return {false, v}; }
  static VertexRef at_infinity(int i) { return {true, i}; }
  bool operator==(const VertexRef&) const = default;
};

// Rooted-tree combinatorics: root u_r, edges oriented away from the root.
// Owns a copy of the tree so values stay self-contained.
struct RootedStructure {
  MarkedTree tree;
  int root_vertex = 0;                    // v_r, the finite vertex of e_r
  std::vector<int> parent_edge;           // per finite vertex; -1 at v_r
  std::vector<int> parent_vertex;         // per finite vertex; -1 at v_r
  std::vector<int> depth;                 // per finite vertex
  std::vector<int> tail;                  // per edge id: finite tail, -1 for e_r
  std::vector<int> head;                  // per edge id: finite head, -1 for ends
  std::vector<std::uint32_t> ends_above_edge;   // per edge: I^inf of the head side
  std::vector<std::uint32_t> ends_above_vertex; // per finite vertex: I_w^inf
  std::vector<int> iota;                  // per edge id; 0 for e_r (undefined)
  std::vector<std::vector<int>> upward_edges;   // E_w^+ per finite vertex, iota-sorted
  std::vector<bool> essential;            // per edge id
  std::vector<int> essential_edges;       // bounded/end edge ids, iota-order

  bool is_above(int end_1based, int v) const {
    return (ends_above_vertex[v] >> (end_1based - 1)) & 1u;
  }
  int ends() const { return tree.ends; }
  std::vector<int> end_set(int v) const;  // I_w^inf as sorted 1-based list
  std::vector<int> index_set(int v) const;  // I_w = iota(E_w^+), sorted
};

RootedStructure rooted_structure(const MarkedTree& tree);

// One step of a geodesic: edge id plus +1 if traversed tail->head.
struct PathStep {
  int edge = 0;
  int direction = 0;
};

// Unique simple path between two vertices (finite or infinite), as ordered
// steps from `a` to `b`; empty when a == b.
std::vector<PathStep> geodesic(const RootedStructure& rooted, VertexRef a, VertexRef b);

// Finite vertices along the path from a to b, inclusive of finite endpoints.
std::vector<int> finite_vertices_on_path(const RootedStructure& rooted, VertexRef a,
                                         VertexRef b);

// The unique vertex common to all three pairwise geodesics.
int median_vertex(const RootedStructure& rooted, VertexRef a, VertexRef b, VertexRef c);

// The separation sign of a bounded edge with respect to an ordered end
// quadruple (i1,i2,i3,i4): +1 if cutting the edge puts {i1,i3} against
// {i2,i4}, -1 if it puts {i1,i4} against {i2,i3}, 0 otherwise.
int separates(const RootedStructure& rooted, int bounded_eid, const std::array<int, 4>& quad);

// All trivalent trees with r ordered ends, exactly once up to isomorphism
// fixing the end order, built by inserting end k+1 into every edge of every
// tree on k ends. Deterministic insertion order.
std::vector<MarkedTree> enumerate_trivalent_trees(int r);
void for_each_trivalent_tree(int r, const std::function<void(const MarkedTree&)>& fn);
Int trivalent_tree_count(int r);  // (2r-5)!!

}  // namespace tropcount
