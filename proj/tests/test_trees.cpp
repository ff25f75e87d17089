#include <algorithm>
#include <set>

#include "doctest.h"
#include "census_oracle.hpp"
#include "test_helpers.hpp"
#include "tropcount/marked_tree.hpp"

using namespace tropcount;
using namespace tropcount::testing;

namespace {

std::set<std::vector<std::uint32_t>> key_set(const std::vector<MarkedTree>& trees) {
  std::set<std::vector<std::uint32_t>> keys;
  for (const MarkedTree& t : trees) keys.insert(t.canonical_key());
  return keys;
}

}  // namespace

TEST_CASE("census matches the double factorial") {
  std::vector<long> expect = {1, 3, 15, 105, 945, 10395};
  for (int r = 3; r <= 8; ++r) {
    auto trees = enumerate_trivalent_trees(r);
    CHECK(static_cast<long>(trees.size()) == expect[r - 3]);
    CHECK(trivalent_tree_count(r) == expect[r - 3]);
  }
}

TEST_CASE("census matches the bipartition oracle up to isomorphism") {
  for (int r = 4; r <= 6; ++r) {
    auto mine = enumerate_trivalent_trees(r);
    auto oracle = census_oracle(r);
    CHECK(mine.size() == oracle.size());
    auto k1 = key_set(mine);
    auto k2 = key_set(oracle);
    CHECK(k1.size() == mine.size());  // pairwise non-isomorphic
    CHECK(k1 == k2);
  }
}

TEST_CASE("every enumerated tree is valid and trivalent") {
  for (int r = 3; r <= 6; ++r) {
    for (const MarkedTree& t : enumerate_trivalent_trees(r)) {
      t.validate();
      CHECK(t.finite_count == t.bounded_count() + 1);
      for (int v = 0; v < t.finite_count; ++v) CHECK(t.degree(v) == 3);
    }
  }
}

TEST_CASE("rejects degenerate end counts") {
  CHECK_THROWS_AS(enumerate_trivalent_trees(2), TropError);
  CHECK_THROWS_AS(trivalent_tree_count(2), TropError);
}

TEST_CASE("rooted structure of the six-end worked example") {
  MarkedTree t = rooted_example_tree();
  RootedStructure rs = rooted_structure(t);
  const int v1 = 0, v4 = 1, v2 = 2;
  CHECK(rs.root_vertex == v1);

  const int g1 = 0, g2 = 1;
  CHECK(rs.tail[g1] == v1);
  CHECK(rs.head[g1] == v4);
  CHECK(rs.tail[g2] == v4);
  CHECK(rs.head[g2] == v2);

  CHECK(rs.iota[g1] == 2);
  CHECK(rs.iota[g2] == 2);
  for (int i = 1; i <= 5; ++i) CHECK(rs.iota[t.end_edge_id(i)] == i);

  CHECK(rs.end_set(v1) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(rs.end_set(v4) == std::vector<int>{2, 3, 4});
  CHECK(rs.index_set(v1) == std::vector<int>{1, 2, 5});
  CHECK(rs.index_set(v4) == std::vector<int>{2, 4});

  CHECK(rs.upward_edges[v1] ==
        std::vector<int>{t.end_edge_id(1), g1, t.end_edge_id(5)});
  CHECK(rs.upward_edges[v4] == std::vector<int>{g2, t.end_edge_id(4)});
  CHECK(rs.upward_edges[v2] ==
        std::vector<int>{t.end_edge_id(2), t.end_edge_id(3)});

  CHECK(rs.essential_edges == std::vector<int>{g1});
  CHECK(rs.essential[g1]);
  CHECK(!rs.essential[g2]);

  auto path = geodesic(rs, VertexRef::finite(v1), VertexRef::finite(v2));
  REQUIRE(path.size() == 2);
  CHECK(path[0].edge == g1);
  CHECK(path[0].direction == 1);
  CHECK(path[1].edge == g2);
  CHECK(path[1].direction == 1);
}

TEST_CASE("geodesics") {
  MarkedTree t = crossratio_example_tree();
  RootedStructure rs = rooted_structure(t);
  CHECK(geodesic(rs, VertexRef::finite(0), VertexRef::finite(0)).empty());
  auto path = geodesic(rs, VertexRef::at_infinity(1), VertexRef::at_infinity(2));
  REQUIRE(path.size() == 4);  // e1, gamma1, gamma2, e2
  CHECK(path[0].edge == t.end_edge_id(1));
  CHECK(path[1].edge == 0);
  CHECK(path[2].edge == 1);
  CHECK(path[3].edge == t.end_edge_id(2));
}

TEST_CASE("separation signs on the five-end example") {
  MarkedTree t = crossratio_example_tree();
  RootedStructure rs = rooted_structure(t);
  std::array<int, 4> quad{1, 2, 3, 4};
  CHECK(separates(rs, 0, quad) == 0);
  CHECK(separates(rs, 1, quad) == -1);
  // all four ends on one side
  CHECK(separates(rs, 0, {2, 3, 4, 5}) == 0);
  // swapping the last pair negates
  CHECK(separates(rs, 1, {1, 2, 4, 3}) == 1);
  CHECK_THROWS_AS(separates(rs, 1, {1, 1, 2, 3}), TropError);
}

TEST_CASE("separation sign symmetries on random trees") {
  for (int trial = 0; trial < 100; ++trial) {
    int r = static_cast<int>(rand_int(4, 7));
    MarkedTree t = random_trivalent_tree(r);
    RootedStructure rs = rooted_structure(t);
    std::array<int, 4> q;
    std::set<int> used;
    for (int k = 0; k < 4;) {
      int e = static_cast<int>(rand_int(1, r));
      if (used.insert(e).second) q[k++] = e;
    }
    for (int eid = 0; eid < t.bounded_count(); ++eid) {
      int base = separates(rs, eid, q);
      CHECK(separates(rs, eid, {q[0], q[1], q[3], q[2]}) == -base);
      CHECK(separates(rs, eid, {q[1], q[0], q[2], q[3]}) == -base);
      CHECK(separates(rs, eid, {q[2], q[3], q[0], q[1]}) == base);
      CHECK(separates(rs, eid, {q[1], q[0], q[3], q[2]}) == base);
    }
  }
}

TEST_CASE("rooted-structure invariants on enumerated trees") {
  for (int r = 4; r <= 6; ++r) {
    for (const MarkedTree& t : enumerate_trivalent_trees(r)) {
      RootedStructure rs = rooted_structure(t);
      // E_w^+ partitions edges minus the root end
      std::vector<int> owner(t.edge_count(), -1);
      for (int v = 0; v < t.finite_count; ++v) {
        CHECK(static_cast<int>(rs.upward_edges[v].size()) == t.degree(v) - 1);
        std::set<int> iotas;
        for (int eid : rs.upward_edges[v]) {
          CHECK(owner[eid] == -1);
          owner[eid] = v;
          CHECK(iotas.insert(rs.iota[eid]).second);  // injective
        }
      }
      for (int eid = 0; eid < t.edge_count(); ++eid) {
        if (eid == t.end_edge_id(t.ends))
          CHECK(owner[eid] == -1);
        else
          CHECK(owner[eid] >= 0);
      }
      for (int eid = 0; eid < t.bounded_count(); ++eid) {
        auto head_idx = rs.index_set(rs.head[eid]);
        auto tail_idx = rs.index_set(rs.tail[eid]);
        CHECK(rs.iota[eid] == *std::min_element(head_idx.begin(), head_idx.end()));
        std::vector<int> common;
        std::set_intersection(head_idx.begin(), head_idx.end(), tail_idx.begin(),
                              tail_idx.end(), std::back_inserter(common));
        CHECK(common == std::vector<int>{rs.iota[eid]});
      }
      // trivalent trees have no essential edges
      CHECK(rs.essential_edges.empty());
    }
  }
}
