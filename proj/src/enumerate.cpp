#include "tropcount/enumerate.hpp"

#include <algorithm>

namespace tropcount {

const char* rejection_name(Rejection r) {
  switch (r) {
    case Rejection::NoSolution: return "no-solution";
    case Rejection::NonpositiveLength: return "nonpositive-length";
    case Rejection::SingularSystem: return "singular-system";
    case Rejection::GeneralityViolation: return "generality-violation";
  }
  return "unknown";
}

namespace {

DeformationComplex complex_for_type(const RootedStructure& rooted,
                                    const std::vector<IntVec>& slopes,
                                    const ProblemSpec& spec) {
  TropicalCurve skeleton;
  skeleton.rooted = rooted;
  skeleton.slopes = slopes;
  // lengths/positions are not inspected by the matrix builder
  skeleton.lengths.assign(rooted.tree.bounded_count(), Rat(1));
  skeleton.positions.assign(rooted.tree.finite_count, RatVec(spec.rank, Rat(0)));
  return build_deformation_complex(skeleton, spec);
}

}  // namespace

EnumerationResult enumerate_curves(const ProblemSpec& spec,
                                   const std::optional<std::vector<int>>& sign) {
  if (!spec.validated())
    throw TropError(ErrorCode::Internal, "problem data not validated");
  spec.require_dimension_condition();
  const std::optional<std::vector<int>>& signs =
      sign ? sign : spec.sign_vector;
  if (signs && signs->size() != spec.sign_length())
    throw TropError(ErrorCode::Invariant, "sign vector length mismatch");

  EnumerationResult result;
  if (signs) result.total_real = Int(0);

  int index = 0;
  for_each_trivalent_tree(spec.ends(), [&](const MarkedTree& tree) {
    int type_index = index++;
    RootedStructure rooted = rooted_structure(tree);
    std::vector<IntVec> slopes = propagate_slopes(rooted, spec.degrees);
    DeformationComplex complex = complex_for_type(rooted, slopes, spec);
    LinearSolution sol =
        solve_rational(RatMatrix::from_int(complex.matrix), complex.target);

    if (!sol.consistent()) {
      result.diagnostics.push_back(
          {type_index, tree.canonical_key(), Rejection::NoSolution});
      return;
    }
    if (!sol.kernel.empty()) {
      result.diagnostics.push_back(
          {type_index, tree.canonical_key(), Rejection::SingularSystem});
      return;
    }

    const RatVec& x = *sol.particular;
    std::vector<Rat> lengths(tree.bounded_count());
    bool negative = false, zero = false;
    for (int eid = 0; eid < tree.bounded_count(); ++eid) {
      lengths[eid] = x[complex.length_col(eid)];
      if (lengths[eid] < 0) negative = true;
      if (lengths[eid] == 0) zero = true;
    }
    if (zero) {
      // a wall: the constraints are not tropically general
      result.diagnostics.push_back(
          {type_index, tree.canonical_key(), Rejection::GeneralityViolation});
      result.tropically_general = false;
      return;
    }
    if (negative) {
      result.diagnostics.push_back(
          {type_index, tree.canonical_key(), Rejection::NonpositiveLength});
      return;
    }

    std::vector<RatVec> positions(tree.finite_count, RatVec(spec.rank, Rat(0)));
    for (int v = 0; v < tree.finite_count; ++v)
      for (int c = 0; c < spec.rank; ++c)
        positions[v][c] = x[complex.vertex_col(v, c)];

    AcceptedCurve accepted;
    accepted.type_index = type_index;
    accepted.curve = make_curve_checked(tree, spec.degrees, lengths, positions);
    accepted.report = multiplicity_report(complex);
    if (accepted.report.finite()) {
      if (result.total_complex) *result.total_complex += *accepted.report.m_complex;
      if (signs && result.total_real)
        *result.total_real += real_multiplicity(complex, *signs);
    } else {
      result.total_complex.reset();
      result.total_real.reset();
    }
    result.curves.push_back(std::move(accepted));
  });
  result.types_visited = index;

  std::sort(result.curves.begin(), result.curves.end(),
            [](const AcceptedCurve& a, const AcceptedCurve& b) {
              auto ka = a.curve.tree().canonical_key();
              auto kb = b.curve.tree().canonical_key();
              if (ka != kb) return ka < kb;
              return a.curve.lengths < b.curve.lengths;
            });
  return result;
}

namespace {

// p lies on the closed segment a..b?
bool on_segment(const RatVec& p, const RatVec& a, const RatVec& b) {
  std::size_t n = p.size();
  RatVec d(n), q(n);
  bool d_zero = true;
  for (std::size_t c = 0; c < n; ++c) {
    d[c] = b[c] - a[c];
    q[c] = p[c] - a[c];
    if (d[c] != 0) d_zero = false;
  }
  if (d_zero) return p == a;
  std::size_t pivot = 0;
  while (d[pivot] == 0) {
    if (q[pivot] != 0) return false;
    ++pivot;
  }
  Rat t = q[pivot] / d[pivot];
  if (t < 0 || t > 1) return false;
  for (std::size_t c = 0; c < n; ++c)
    if (q[c] != t * d[c]) return false;
  return true;
}

// p lies on the ray from a with direction dir?
bool on_ray(const RatVec& p, const RatVec& a, const IntVec& dir) {
  std::size_t n = p.size();
  bool dir_zero = true;
  for (std::size_t c = 0; c < n; ++c)
    if (dir[c] != 0) dir_zero = false;
  if (dir_zero) return p == a;
  std::size_t pivot = 0;
  while (dir[pivot] == 0) {
    if (p[pivot] != a[pivot]) return false;
    ++pivot;
  }
  Rat t = (p[pivot] - a[pivot]) / Rat(dir[pivot]);
  if (t < 0) return false;
  for (std::size_t c = 0; c < n; ++c)
    if (p[c] - a[c] != t * Rat(dir[c])) return false;
  return true;
}

// strictly positive proportionality of nonzero integer vectors
bool positively_parallel(const IntVec& a, const IntVec& b) {
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0 && b[i] == 0) continue;
    return (a[i] > 0) == (b[i] > 0) && a[i] != 0 && b[i] != 0;
  }
  return false;
}

}  // namespace

std::vector<GenericityViolation> validate_curve_genericity(const TropicalCurve& curve,
                                                           const ProblemSpec& spec,
                                                           int curve_index) {
  std::vector<GenericityViolation> out;
  const MarkedTree& tree = curve.tree();
  const RootedStructure& rooted = curve.rooted;
  const int V = tree.finite_count;

  // (1) equal vertex images force contracted geodesics
  for (int a = 0; a < V; ++a)
    for (int b = a + 1; b < V; ++b) {
      if (curve.positions[a] != curve.positions[b]) continue;
      for (const PathStep& s :
           geodesic(rooted, VertexRef::finite(a), VertexRef::finite(b))) {
        if (!is_zero(curve.slopes[s.edge])) {
          out.push_back({curve_index, 1,
                         "vertices " + std::to_string(a) + "," + std::to_string(b) +
                             " coincide without a contracted path"});
          break;
        }
      }
    }

  // (2) a vertex image on a non-adjacent edge image forces a straight path
  for (int v = 0; v < V; ++v) {
    for (int eid = 0; eid < tree.edge_count(); ++eid) {
      VertexRef far;
      bool hit = false;
      if (tree.is_end_edge(eid)) {
        int i = tree.end_index(eid);
        if (tree.end_vertex[i - 1] == v) continue;  // adjacent
        hit = on_ray(curve.positions[v], curve.positions[tree.end_vertex[i - 1]],
                     spec.degrees[i - 1]);
        far = VertexRef::at_infinity(i);
      } else {
        int a = rooted.tail[eid], b = rooted.head[eid];
        if (a == v || b == v) continue;
        hit = on_segment(curve.positions[v], curve.positions[a], curve.positions[b]);
        if (!hit) continue;
        // far endpoint: the one whose path from v contains the edge
        auto steps = geodesic(rooted, VertexRef::finite(v), VertexRef::finite(b));
        bool contains = std::any_of(steps.begin(), steps.end(),
                                    [&](const PathStep& s) { return s.edge == eid; });
        far = VertexRef::finite(contains ? b : a);
      }
      if (!hit) continue;
      std::vector<IntVec> dirs;
      for (const PathStep& s : geodesic(rooted, VertexRef::finite(v), far)) {
        IntVec d = tree.is_end_edge(s.edge)
                       ? spec.degrees[tree.end_index(s.edge) - 1]
                       : curve.slopes[s.edge];
        if (s.direction < 0) d = negate(d);
        if (!is_zero(d)) dirs.push_back(std::move(d));
      }
      bool straight = true;
      for (std::size_t k = 1; k < dirs.size(); ++k)
        if (!positively_parallel(dirs[0], dirs[k])) straight = false;
      if (!straight)
        out.push_back({curve_index, 2,
                       "vertex " + std::to_string(v) + " lies on edge " +
                           std::to_string(eid) + " without a straight interval"});
    }
  }

  // (3) contracted-edge valence in {0,1,3}
  for (int v = 0; v < V; ++v) {
    int contracted = 0;
    for (int eid = 0; eid < tree.bounded_count(); ++eid)
      if ((rooted.tail[eid] == v || rooted.head[eid] == v) &&
          is_zero(curve.slopes[eid]))
        ++contracted;
    for (int i = 1; i <= tree.ends; ++i)
      if (tree.end_vertex[i - 1] == v && is_zero(spec.degrees[i - 1])) ++contracted;
    if (contracted != 0 && contracted != 1 && contracted != 3)
      out.push_back({curve_index, 3,
                     "vertex " + std::to_string(v) + " carries " +
                         std::to_string(contracted) + " contracted edges"});
  }
  return out;
}

std::vector<GenericityViolation> validate_genericity(const EnumerationResult& result,
                                                     const ProblemSpec& spec) {
  std::vector<GenericityViolation> out;
  for (std::size_t k = 0; k < result.curves.size(); ++k) {
    auto v = validate_curve_genericity(result.curves[k].curve, spec,
                                       static_cast<int>(k));
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace tropcount
