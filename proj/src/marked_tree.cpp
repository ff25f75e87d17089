#include "tropcount/marked_tree.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace tropcount {

int MarkedTree::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : bounded) d += (a == v) + (b == v);
  for (int w : end_vertex) d += (w == v);
  return d;
}

void MarkedTree::validate() const {
  if (ends < 3)
    throw TropError(ErrorCode::Invariant, "a stable tree needs at least 3 ends");
  if (ends > 32)
    throw TropError(ErrorCode::Invariant, "more than 32 ends not supported");
  if (static_cast<int>(end_vertex.size()) != ends)
    throw TropError(ErrorCode::Invariant, "end attachment list has wrong length");
  for (int v : end_vertex)
    if (v < 0 || v >= finite_count)
      throw TropError(ErrorCode::Invariant, "end attached to missing vertex");
  for (const auto& [a, b] : bounded)
    if (a < 0 || a >= finite_count || b < 0 || b >= finite_count || a == b)
      throw TropError(ErrorCode::Invariant, "bad bounded edge");
  // a tree on finite_count vertices has finite_count - 1 bounded edges
  if (bounded_count() != finite_count - 1)
    throw TropError(ErrorCode::Invariant, "edge count does not match a tree");
  // connectivity
  std::vector<std::vector<int>> adj(finite_count);
  for (const auto& [a, b] : bounded) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(finite_count, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++reached;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  if (reached != finite_count)
    throw TropError(ErrorCode::Invariant, "tree is not connected");
  for (int v = 0; v < finite_count; ++v)
    if (degree(v) < 3)
      throw TropError(ErrorCode::Invariant, "finite vertex of degree < 3");
}

std::vector<std::uint32_t> MarkedTree::canonical_key() const {
  RootedStructure rooted = rooted_structure(*this);
  std::vector<std::uint32_t> key;
  key.reserve(bounded.size());
  for (int eid = 0; eid < bounded_count(); ++eid)
    key.push_back(rooted.ends_above_edge[eid]);
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<int> RootedStructure::end_set(int v) const {
  std::vector<int> out;
  for (int i = 1; i <= tree.ends; ++i)
    if (is_above(i, v)) out.push_back(i);
  return out;
}

std::vector<int> RootedStructure::index_set(int v) const {
  std::vector<int> out;
  for (int eid : upward_edges[v]) out.push_back(iota[eid]);
  return out;
}

RootedStructure rooted_structure(const MarkedTree& tree) {
  tree.validate();
  RootedStructure rs;
  rs.tree = tree;
  const int V = tree.finite_count;
  const int B = tree.bounded_count();
  const int r = tree.ends;
  rs.root_vertex = tree.end_vertex[r - 1];

  std::vector<std::vector<std::pair<int, int>>> adj(V);  // (neighbor, eid)
  for (int eid = 0; eid < B; ++eid) {
    auto [a, b] = tree.bounded[eid];
    adj[a].push_back({b, eid});
    adj[b].push_back({a, eid});
  }

  rs.parent_edge.assign(V, -1);
  rs.parent_vertex.assign(V, -1);
  rs.depth.assign(V, 0);
  std::vector<int> order;
  order.reserve(V);
  {
    std::vector<bool> seen(V, false);
    std::queue<int> q;
    q.push(rs.root_vertex);
    seen[rs.root_vertex] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (auto [w, eid] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        rs.parent_vertex[w] = v;
        rs.parent_edge[w] = eid;
        rs.depth[w] = rs.depth[v] + 1;
        q.push(w);
      }
    }
  }

  const int E = tree.edge_count();
  rs.tail.assign(E, -1);
  rs.head.assign(E, -1);
  for (int eid = 0; eid < B; ++eid) {
    auto [a, b] = tree.bounded[eid];
    if (rs.parent_vertex[b] == a) {
      rs.tail[eid] = a;
      rs.head[eid] = b;
    } else {
      rs.tail[eid] = b;
      rs.head[eid] = a;
    }
  }
  for (int i = 1; i <= r; ++i) {
    int eid = tree.end_edge_id(i);
    if (i == r) {
      rs.tail[eid] = -1;  // tail is the root u_r itself
      rs.head[eid] = tree.end_vertex[i - 1];
    } else {
      rs.tail[eid] = tree.end_vertex[i - 1];
      rs.head[eid] = -1;  // head is u_i
    }
  }

  // ends above: accumulate leaf-to-root (deepest first)
  rs.ends_above_vertex.assign(V, 0);
  for (int i = 1; i < r; ++i)
    rs.ends_above_vertex[tree.end_vertex[i - 1]] |= (1u << (i - 1));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (v == rs.root_vertex) continue;
    rs.ends_above_vertex[rs.parent_vertex[v]] |= rs.ends_above_vertex[v];
  }

  rs.ends_above_edge.assign(E, 0);
  for (int eid = 0; eid < B; ++eid)
    rs.ends_above_edge[eid] = rs.ends_above_vertex[rs.head[eid]];
  for (int i = 1; i < r; ++i)
    rs.ends_above_edge[tree.end_edge_id(i)] = (1u << (i - 1));
  rs.ends_above_edge[tree.end_edge_id(r)] = rs.ends_above_vertex[rs.root_vertex];

  rs.iota.assign(E, 0);
  for (int eid = 0; eid < E; ++eid) {
    if (eid == tree.end_edge_id(r)) continue;
    std::uint32_t mask = rs.ends_above_edge[eid];
    rs.iota[eid] = std::countr_zero(mask) + 1;
  }

  rs.upward_edges.assign(V, {});
  for (int eid = 0; eid < E; ++eid) {
    if (eid == tree.end_edge_id(r)) continue;
    rs.upward_edges[rs.tail[eid]].push_back(eid);
  }
  for (auto& list : rs.upward_edges)
    std::sort(list.begin(), list.end(),
              [&](int a, int b) { return rs.iota[a] < rs.iota[b]; });

  rs.essential.assign(E, false);
  for (int v = 0; v < V; ++v) {
    const auto& list = rs.upward_edges[v];
    for (std::size_t k = 1; k + 1 < list.size(); ++k) rs.essential[list[k]] = true;
  }
  for (int eid = 0; eid < E; ++eid)
    if (rs.essential[eid]) rs.essential_edges.push_back(eid);
  std::sort(rs.essential_edges.begin(), rs.essential_edges.end(),
            [&](int a, int b) {
              if (rs.iota[a] != rs.iota[b]) return rs.iota[a] < rs.iota[b];
              return a < b;
            });
  return rs;
}

namespace {

// Finite vertex adjacent to the given vertex ref (itself when finite).
int anchor(const RootedStructure& rs, VertexRef v) {
  return v.infinite ? rs.tree.end_vertex[v.idx - 1] : v.idx;
}

// Path between finite vertices as steps.
std::vector<PathStep> finite_path(const RootedStructure& rs, int a, int b) {
  std::vector<PathStep> up, down;
  int x = a, y = b;
  while (rs.depth[x] > rs.depth[y]) {
    up.push_back({rs.parent_edge[x], -1});
    x = rs.parent_vertex[x];
  }
  while (rs.depth[y] > rs.depth[x]) {
    down.push_back({rs.parent_edge[y], +1});
    y = rs.parent_vertex[y];
  }
  while (x != y) {
    up.push_back({rs.parent_edge[x], -1});
    x = rs.parent_vertex[x];
    down.push_back({rs.parent_edge[y], +1});
    y = rs.parent_vertex[y];
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace

std::vector<PathStep> geodesic(const RootedStructure& rs, VertexRef a, VertexRef b) {
  if (a == b) return {};
  std::vector<PathStep> steps;
  if (a.infinite) {
    int eid = rs.tree.end_edge_id(a.idx);
    steps.push_back({eid, a.idx == rs.tree.ends ? +1 : -1});
  }
  auto mid = finite_path(rs, anchor(rs, a), anchor(rs, b));
  steps.insert(steps.end(), mid.begin(), mid.end());
  if (b.infinite) {
    int eid = rs.tree.end_edge_id(b.idx);
    steps.push_back({eid, b.idx == rs.tree.ends ? -1 : +1});
  }
  return steps;
}

std::vector<int> finite_vertices_on_path(const RootedStructure& rs, VertexRef a,
                                         VertexRef b) {
  int x = anchor(rs, a);
  std::vector<int> verts{x};
  for (const PathStep& s : finite_path(rs, x, anchor(rs, b))) {
    x = (s.direction > 0) ? rs.head[s.edge] : rs.tail[s.edge];
    verts.push_back(x);
  }
  return verts;
}

int median_vertex(const RootedStructure& rs, VertexRef a, VertexRef b, VertexRef c) {
  std::vector<int> ab = finite_vertices_on_path(rs, a, b);
  std::vector<int> ac = finite_vertices_on_path(rs, a, c);
  std::size_t k = 0;
  while (k < ab.size() && k < ac.size() && ab[k] == ac[k]) ++k;
  if (k == 0) throw TropError(ErrorCode::Internal, "median: disjoint paths");
  return ab[k - 1];
}

int separates(const RootedStructure& rs, int bounded_eid, const std::array<int, 4>& quad) {
  const MarkedTree& tree = rs.tree;
  if (bounded_eid >= tree.bounded_count())
    throw TropError(ErrorCode::Invariant, "separates: not a bounded edge");
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l)
      if (quad[k] == quad[l])
        throw TropError(ErrorCode::Invariant, "separates: ends not distinct");
  auto side = [&](int i) -> bool {
    return (rs.ends_above_edge[bounded_eid] >> (i - 1)) & 1u;
  };
  bool s1 = side(quad[0]), s2 = side(quad[1]), s3 = side(quad[2]), s4 = side(quad[3]);
  if (s1 == s3 && s2 == s4 && s1 != s2) return 1;
  if (s1 == s4 && s2 == s3 && s1 != s2) return -1;
  return 0;
}

namespace {

// Subdivide edge `eid` of `t` with a new finite vertex carrying the new end.
MarkedTree insert_end(const MarkedTree& t, int eid) {
  MarkedTree out = t;
  int mid = out.finite_count++;
  if (t.is_end_edge(eid)) {
    int i = t.end_index(eid);
    int v = t.end_vertex[i - 1];
    out.end_vertex[i - 1] = mid;
    out.bounded.push_back({v, mid});
  } else {
    auto [a, b] = t.bounded[eid];
    out.bounded[eid] = {a, mid};
    out.bounded.push_back({mid, b});
  }
  out.ends = t.ends + 1;
  out.end_vertex.push_back(mid);
  return out;
}

}  // namespace

void for_each_trivalent_tree(int r, const std::function<void(const MarkedTree&)>& fn) {
  if (r < 3)
    throw TropError(ErrorCode::Invariant, "no stable tree with fewer than 3 ends");
  if (r > 32) throw TropError(ErrorCode::Invariant, "more than 32 ends not supported");
  MarkedTree star;
  star.ends = 3;
  star.finite_count = 1;
  star.end_vertex = {0, 0, 0};

  // Each tree on k+1 ends arises from exactly one (tree, edge) pair on k
  // ends (delete end k+1, smooth the vertex), so no deduplication is needed.
  std::function<void(const MarkedTree&)> grow = [&](const MarkedTree& t) {
    if (t.ends == r) {
      fn(t);
      return;
    }
    for (int eid = 0; eid < t.edge_count(); ++eid) grow(insert_end(t, eid));
  };
  grow(star);
}

std::vector<MarkedTree> enumerate_trivalent_trees(int r) {
  std::vector<MarkedTree> out;
  for_each_trivalent_tree(r, [&](const MarkedTree& t) { out.push_back(t); });
  return out;
}

Int trivalent_tree_count(int r) {
  if (r < 3)
    throw TropError(ErrorCode::Invariant, "no stable tree with fewer than 3 ends");
  Int c(1);
  for (int k = 2 * r - 5; k > 1; k -= 2) c *= k;
  return c;
}

}  // namespace tropcount
