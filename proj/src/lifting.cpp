#include "tropcount/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropcount/solve.hpp"

namespace tropcount {

namespace {

Rat rat_pow(const Rat& base, const Int& exponent) {
  if (base == 0) throw TropError(ErrorCode::Internal, "power of zero");
  Int e = exponent;
  bool inv = false;
  if (e < 0) {
    inv = true;
    e = -e;
  }
  if (!e.fits_ulong_p())
    throw TropError(ErrorCode::Internal, "power exponent out of range");
  unsigned long ue = e.get_ui();
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ue);
  return inv ? make_rat(den, num) : make_rat(num, den);
}

// componentwise multiplicative action of an integer matrix
std::vector<Rat> apply_multiplicative(const IntMatrix& m, const std::vector<Rat>& v) {
  if (v.size() != m.cols())
    throw TropError(ErrorCode::Internal, "multiplicative apply shape mismatch");
  std::vector<Rat> out(m.rows(), Rat(1));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 1) out[i] *= rat_pow(v[j], m.at(i, j));
  return out;
}

struct ChartEvaluator {
  const AlgebraicLift& ctx;
  const LiftState& state;
  const TropicalCurve& curve;
  std::map<std::pair<int, int>, TSeries> memo;

  ChartEvaluator(const AlgebraicLift& c, const LiftState& s)
      : ctx(c), state(s), curve(c.curve()) {}

  TSeries chart(int w, int i) {
    auto key = std::make_pair(w, i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    TSeries value = compute(w, i);
    memo.emplace(key, value);
    return value;
  }

  TSeries compute(int w, int i) {
    const MarkedTree& tree = curve.tree();
    const RootedStructure& rooted = curve.rooted;
    if (i < 1 || i >= tree.ends)
      throw TropError(ErrorCode::Internal, "chart coordinate of the root end");
    if (tree.end_vertex[i - 1] == w)
      return TSeries::constant(ctx.offset(tree.end_edge_id(i)), ctx.ramification(),
                               ctx.working_truncation());
    if (rooted.is_above(i, w)) {
      for (int eid : rooted.upward_edges[w]) {
        if (tree.is_end_edge(eid)) continue;
        if ((rooted.ends_above_edge[eid] >> (i - 1)) & 1u) {
          TSeries below = chart(rooted.head[eid], i);
          long shift = ctx.edge_exponent(eid);
          return TSeries::constant(ctx.offset(eid), ctx.ramification(),
                                   ctx.working_truncation()) +
                 state.scales[eid].shifted(shift) * below;
        }
      }
      throw TropError(ErrorCode::Internal, "missing upward edge");
    }
    int pe = rooted.parent_edge[w];
    if (pe < 0) throw TropError(ErrorCode::Internal, "walked past the root");
    TSeries above = chart(rooted.parent_vertex[w], i);
    TSeries offset = TSeries::constant(ctx.offset(pe), ctx.ramification(),
                                       ctx.working_truncation());
    return (above - offset) * state.scales[pe].inverse().shifted(-ctx.edge_exponent(pe));
  }

  TSeries difference(int w, int i, int j) { return chart(w, i) - chart(w, j); }
};

}  // namespace

AlgebraicLift::AlgebraicLift(const TropicalCurve& curve, const ProblemSpec& spec,
                             int t_order, std::optional<std::vector<Rat>> essential_beta)
    : curve_(curve), spec_(spec) {
  if (!spec_.validated())
    throw TropError(ErrorCode::Internal, "problem data not validated");
  if (t_order < 1) throw TropError(ErrorCode::Invariant, "lift order must be positive");
  validate_curve(curve_, spec_.degrees);

  // cross-ratio rows with a negative tropical value: swap the pair and
  // invert the algebraic value (an exact symmetry of the problem)
  for (CrossRatioConstraint& x : spec_.cross_ratios) {
    if (x.tropical < 0) {
      std::swap(x.ends[2], x.ends[3]);
      x.tropical = -x.tropical;
      x.leading_coefficient = 1 / x.leading_coefficient;
    }
  }

  for (int i = 1; i <= spec_.ends(); ++i)
    if (!check_affine_constraint(curve_, spec_, i))
      throw TropError(ErrorCode::Invariant,
                      "curve violates toric constraint " + std::to_string(i));
  for (const CrossRatioConstraint& x : spec_.cross_ratios)
    if (cross_ratio_formula(curve_, x.ends) != x.tropical)
      throw TropError(ErrorCode::Invariant, "curve violates a cross-ratio constraint");

  // global ramification: least common denominator of lengths and positions
  Int denom(1);
  for (const Rat& l : curve_.lengths) denom = lcm(denom, l.get_den());
  for (const RatVec& p : curve_.positions)
    for (const Rat& c : p) denom = lcm(denom, c.get_den());
  ram_ = static_cast<int>(to_long(denom));

  const MarkedTree& tree = curve_.tree();
  edge_exponents_.resize(tree.bounded_count());
  Rat total_length(0);
  for (int eid = 0; eid < tree.bounded_count(); ++eid) {
    Rat scaled = curve_.lengths[eid] * ram_;
    if (!is_integer(scaled))
      throw TropError(ErrorCode::Internal, "length not integral at ramification");
    edge_exponents_[eid] = to_long(scaled.get_num());
    total_length += curve_.lengths[eid];
  }

  // Residual target: the requested t-order plus the curve's valuation
  // spread, so every emitted series and any chart change with shifts up to
  // the total edge length stays exact through t_order.
  Rat pad = Rat(2) * total_length * ram_;
  stop_order_ = static_cast<long>(t_order + 1) * ram_ + to_long(rat_floor(pad));
  work_trunc_ = stop_order_ + to_long(rat_floor(pad)) + 16;

  // chart offsets: minimal edge of each upward list gets 0, maximal 1,
  // essential edges get values from the problem data (iota order)
  const std::vector<Rat>& essentials =
      essential_beta ? *essential_beta : spec_.essential_beta;
  const RootedStructure& rooted = curve_.rooted;
  if (essentials.size() < rooted.essential_edges.size())
    throw TropError(ErrorCode::Invariant,
                    "tree has " + std::to_string(rooted.essential_edges.size()) +
                        " essential edges but only " +
                        std::to_string(essentials.size()) +
                        " chart offsets were supplied");
  offsets_.assign(tree.edge_count(), Rat(0));
  std::map<int, Rat> essential_value;
  for (std::size_t k = 0; k < rooted.essential_edges.size(); ++k) {
    const Rat& value = essentials[k];
    if (value == 0 || value == 1)
      throw TropError(ErrorCode::Invariant,
                      "essential chart offsets must avoid 0 and 1");
    essential_value[rooted.essential_edges[k]] = value;
  }
  for (int v = 0; v < tree.finite_count; ++v) {
    const auto& ups = rooted.upward_edges[v];
    if (ups.empty()) continue;
    std::set<Rat> seen;
    for (std::size_t k = 0; k < ups.size(); ++k) {
      Rat value;
      if (k == 0)
        value = 0;
      else if (k + 1 == ups.size())
        value = 1;
      else
        value = essential_value.at(ups[k]);
      offsets_[ups[k]] = value;
      if (!seen.insert(value).second)
        throw TropError(ErrorCode::Invariant,
                        "chart offsets collide at a vertex");
    }
  }

  // cross-ratio geometry: the two branch vertices and the separating path
  for (std::size_t x = 0; x < spec_.cross_ratios.size(); ++x) {
    const auto& quad = spec_.cross_ratios[x].ends;
    CrossRatioGeometry geo;
    geo.quad = quad;
    geo.coefficient = spec_.cross_ratios[x].leading_coefficient;
    geo.near_vertex = median_vertex(rooted, VertexRef::at_infinity(quad[0]),
                                    VertexRef::at_infinity(quad[2]),
                                    VertexRef::at_infinity(quad[1]));
    geo.far_vertex = median_vertex(rooted, VertexRef::at_infinity(quad[1]),
                                   VertexRef::at_infinity(quad[3]),
                                   VertexRef::at_infinity(quad[0]));
    geo.top_vertex = geo.near_vertex;
    for (const PathStep& s : geodesic(rooted, VertexRef::finite(geo.near_vertex),
                                      VertexRef::finite(geo.far_vertex))) {
      geo.path_edges.push_back(s.edge);
      int reached = s.direction > 0 ? rooted.head[s.edge] : rooted.tail[s.edge];
      if (rooted.depth[reached] < rooted.depth[geo.top_vertex])
        geo.top_vertex = reached;
    }
    // sanity: the path carries exactly the positive separation signs
    std::set<int> path_set(geo.path_edges.begin(), geo.path_edges.end());
    for (int eid = 0; eid < tree.bounded_count(); ++eid) {
      int sign = separates(rooted, eid, quad);
      bool on_path = path_set.count(eid) > 0;
      if ((sign == 1) != on_path || sign == -1)
        throw TropError(ErrorCode::Internal, "cross-ratio path mismatch");
    }
    geometry_.push_back(std::move(geo));
  }

  complex_ = build_deformation_complex(curve_, spec_);
  if (complex_.matrix.rows() != complex_.matrix.cols())
    throw TropError(ErrorCode::Invariant,
                    "lifting needs a square deformation matrix");
  snf_ = smith_normal_form(complex_.matrix);
  if (snf_.rank() != complex_.matrix.rows())
    throw TropError(ErrorCode::Invariant,
                    "lifting needs a finite complex multiplicity");
  inverse_ = invert_rational(RatMatrix::from_int(complex_.matrix));

  // targets: 1 on the edge block, leading coefficients elsewhere
  target_.assign(complex_.matrix.rows(),
                 TSeries::constant(Rat(1), ram_, work_trunc_));
  for (int j = 0; j < spec_.ends(); ++j) {
    const AffineConstraint& c = spec_.constraints[j];
    if (c.quotient_rank == 0) continue;
    RatVec coeffs = c.leading_coefficients
                        ? *c.leading_coefficients
                        : RatVec(static_cast<std::size_t>(spec_.rank), Rat(1));
    for (std::size_t l = 0; l < c.quotient_rank; ++l) {
      Rat value(1);
      for (int cc = 0; cc < spec_.rank; ++cc)
        if (c.projection.at(l, cc) != 0)
          value *= rat_pow(coeffs[cc], c.projection.at(l, cc));
      target_[complex_.constraint_row_start[j] + l] =
          TSeries::constant(value, ram_, work_trunc_);
    }
  }
  for (std::size_t x = 0; x < geometry_.size(); ++x)
    target_[complex_.cross_ratio_row_start + x] =
        TSeries::constant(geometry_[x].coefficient, ram_, work_trunc_);
}

const Rat& AlgebraicLift::offset(int eid) const {
  if (eid == curve_.tree().end_edge_id(curve_.tree().ends))
    throw TropError(ErrorCode::Internal, "the root end has no chart offset");
  return offsets_[eid];
}

long AlgebraicLift::edge_exponent(int eid) const { return edge_exponents_.at(eid); }

TSeries AlgebraicLift::chart_coordinate(const LiftState& state, int vertex,
                                        int end) const {
  ChartEvaluator eval(*this, state);
  return eval.chart(vertex, end);
}

std::vector<TSeries> AlgebraicLift::marked_points(const LiftState& state) const {
  ChartEvaluator eval(*this, state);
  std::vector<TSeries> out;
  for (int i = 1; i < curve_.tree().ends; ++i)
    out.push_back(eval.chart(curve_.rooted.root_vertex, i));
  return out;
}

LiftState AlgebraicLift::ones_state() const {
  LiftState s;
  TSeries one = TSeries::constant(Rat(1), ram_, work_trunc_);
  s.characters.assign(curve_.tree().finite_count,
                      std::vector<TSeries>(spec_.rank, one));
  s.scales.assign(curve_.tree().bounded_count(), one);
  return s;
}

TSeries AlgebraicLift::descent_factor(const LiftState& state, int top,
                                      int bottom) const {
  TSeries acc = TSeries::constant(Rat(1), ram_, work_trunc_);
  for (const PathStep& s : geodesic(curve_.rooted, VertexRef::finite(top),
                                    VertexRef::finite(bottom))) {
    if (s.direction < 0)
      throw TropError(ErrorCode::Internal, "descent path runs uphill");
    acc = acc * state.scales[s.edge].shifted(edge_exponents_[s.edge]);
  }
  return acc;
}

GluingFactors AlgebraicLift::gluing_factors(const LiftState& state) const {
  const MarkedTree& tree = curve_.tree();
  const RootedStructure& rooted = curve_.rooted;
  ChartEvaluator eval(*this, state);
  GluingFactors out;

  auto require_unit = [&](const TSeries& s, const std::string& what) {
    if (!s.is_unit())
      throw TropError(ErrorCode::Precision, "non-unit factor: " + what);
  };

  // edge block
  out.edge.assign(tree.bounded_count(), {});
  for (int eid = 0; eid < tree.bounded_count(); ++eid) {
    int t = rooted.tail[eid];
    std::vector<std::pair<TSeries, IntVec>> factors;
    std::uint32_t above_tail = rooted.ends_above_vertex[t];
    std::uint32_t above_head = rooted.ends_above_edge[eid];
    for (int i = 1; i < tree.ends; ++i) {
      bool in_tail = (above_tail >> (i - 1)) & 1u;
      bool in_head = (above_head >> (i - 1)) & 1u;
      const IntVec& slope = spec_.degrees[i - 1];
      if (is_zero(slope)) continue;
      if (in_tail && !in_head) {
        TSeries base = eval.chart(t, i) -
                       TSeries::constant(offsets_[eid], ram_, work_trunc_);
        require_unit(base, "chart difference at edge " + std::to_string(eid) +
                               ", end " + std::to_string(i));
        factors.push_back({std::move(base), slope});
      } else if (!in_tail) {
        TSeries y = eval.chart(t, i);
        TSeries base =
            y / (y - TSeries::constant(offsets_[eid], ram_, work_trunc_));
        require_unit(base, "chart ratio at edge " + std::to_string(eid) +
                               ", end " + std::to_string(i));
        factors.push_back({std::move(base), negate(slope)});
      }
    }
    out.edge[eid].assign(spec_.rank, TSeries::constant(Rat(1), ram_, work_trunc_));
    for (const auto& [base, expvec] : factors)
      for (int c = 0; c < spec_.rank; ++c)
        if (expvec[c] != 0)
          out.edge[eid][c] = out.edge[eid][c] * base.pow(to_long(expvec[c]));
    for (int c = 0; c < spec_.rank; ++c)
      require_unit(out.edge[eid][c], "edge factor " + std::to_string(eid));
  }

  // constraint block
  out.constraint.assign(spec_.ends(), {});
  for (int j = 1; j <= spec_.ends(); ++j) {
    const AffineConstraint& c = spec_.constraints[j - 1];
    if (c.quotient_rank == 0) continue;
    std::vector<TSeries>& rows = out.constraint[j - 1];
    rows.assign(c.quotient_rank, TSeries::constant(Rat(1), ram_, work_trunc_));
    if (j == tree.ends) continue;  // the root chart fixes this factor to 1
    int v = tree.end_vertex[j - 1];
    Rat beta = offsets_[tree.end_edge_id(j)];
    for (int i = 1; i <= tree.ends; ++i) {
      if (i == j) continue;
      const IntVec& slope = spec_.degrees[i - 1];
      if (is_zero(slope)) continue;
      IntVec evec = c.projection.apply(slope);
      if (is_zero(evec)) continue;
      TSeries base;
      if (i == tree.ends) {
        base = TSeries::constant(Rat(-1), ram_, work_trunc_);
      } else if (rooted.is_above(i, v)) {
        base = TSeries::constant(beta, ram_, work_trunc_) - eval.chart(v, i);
      } else {
        base = TSeries::constant(beta, ram_, work_trunc_) / eval.chart(v, i) -
               TSeries::constant(Rat(1), ram_, work_trunc_);
      }
      require_unit(base, "constraint factor at end " + std::to_string(j) +
                             ", marked point " + std::to_string(i));
      for (std::size_t l = 0; l < c.quotient_rank; ++l)
        if (evec[l] != 0) rows[l] = rows[l] * base.pow(to_long(evec[l]));
    }
    for (std::size_t l = 0; l < c.quotient_rank; ++l)
      require_unit(rows[l], "constraint row at end " + std::to_string(j));
  }

  // cross-ratio block
  for (const CrossRatioGeometry& geo : geometry_) {
    int a = geo.quad[0], b = geo.quad[1], cq = geo.quad[2], d = geo.quad[3];
    int w = geo.near_vertex, wp = geo.far_vertex, wpp = geo.top_vertex;
    int r = tree.ends;
    TSeries value;
    if (a == r) {
      value = eval.difference(wp, d, b) / eval.difference(wpp, cq, b) /
              descent_factor(state, wpp, w);
    } else if (b == r) {
      value = eval.difference(w, cq, a) / eval.difference(wpp, d, a) /
              descent_factor(state, wpp, wp);
    } else if (cq == r) {
      value = eval.difference(wp, d, b) / eval.difference(wpp, d, a) /
              descent_factor(state, wpp, w);
    } else if (d == r) {
      value = eval.difference(w, cq, a) / eval.difference(wpp, cq, b) /
              descent_factor(state, wpp, wp);
    } else {
      value = eval.difference(w, cq, a) * eval.difference(wp, d, b) /
              (eval.difference(wpp, d, a) * eval.difference(wpp, cq, b));
    }
    require_unit(value, "cross-ratio factor");
    out.cross_ratio.push_back(std::move(value));
  }
  return out;
}

std::vector<TSeries> AlgebraicLift::theta_map(const LiftState& state) const {
  const MarkedTree& tree = curve_.tree();
  const RootedStructure& rooted = curve_.rooted;
  GluingFactors factors = gluing_factors(state);
  std::vector<TSeries> rows(complex_.matrix.rows(),
                            TSeries::constant(Rat(1), ram_, work_trunc_));

  for (int eid = 0; eid < tree.bounded_count(); ++eid) {
    int t = rooted.tail[eid], h = rooted.head[eid];
    for (int c = 0; c < spec_.rank; ++c) {
      TSeries value = factors.edge[eid][c] * state.characters[t][c] /
                      state.characters[h][c];
      long exp = to_long(curve_.slopes[eid][c]);
      if (exp != 0) value = value * state.scales[eid].pow(exp);
      rows[complex_.edge_row(eid, c)] = value;
    }
  }
  for (int j = 1; j <= spec_.ends(); ++j) {
    const AffineConstraint& c = spec_.constraints[j - 1];
    if (c.quotient_rank == 0) continue;
    int v = tree.end_vertex[j - 1];
    for (std::size_t l = 0; l < c.quotient_rank; ++l) {
      TSeries value = factors.constraint[j - 1][l];
      for (int cc = 0; cc < spec_.rank; ++cc) {
        long exp = to_long(c.projection.at(l, cc));
        if (exp != 0) value = value * state.characters[v][cc].pow(exp);
      }
      rows[complex_.constraint_row_start[j - 1] + l] = value;
    }
  }
  for (std::size_t x = 0; x < geometry_.size(); ++x) {
    TSeries value = factors.cross_ratio[x];
    for (int eid : geometry_[x].path_edges) value = value * state.scales[eid];
    rows[complex_.cross_ratio_row_start + x] = value;
  }
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (!rows[k].is_unit())
      throw TropError(ErrorCode::Precision,
                      "gluing map row " + std::to_string(k) + " is not a unit");
  return rows;
}

std::vector<LiftState> AlgebraicLift::initial_solutions() const {
  std::vector<TSeries> at_ones = theta_map(ones_state());
  std::size_t n = at_ones.size();
  std::vector<Rat> residue(n);
  for (std::size_t k = 0; k < n; ++k)
    residue[k] = target_[k].coefficient(0) / at_ones[k].coefficient(0);

  // transform by U; solve the diagonal power system over Q
  std::vector<Rat> sigma = apply_multiplicative(snf_.U, residue);
  std::vector<std::vector<Rat>> candidates(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Int& d = snf_.divisors[k];
    if (d == 1) {
      candidates[k] = {sigma[k]};
      continue;
    }
    unsigned long degree = d.get_ui();
    std::optional<Rat> root = rational_root(sigma[k], degree);
    if (!root)
      throw TropError(ErrorCode::FieldExtensionRequired,
                      "initial solution needs an irrational root: degree " +
                          to_string(d) + " of " + to_string(sigma[k]));
    if (mpz_even_p(d.get_mpz_t()))
      candidates[k] = {*root, -*root};
    else
      candidates[k] = {*root};
  }

  std::vector<std::vector<Rat>> tuples{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Rat>> next;
    for (const auto& prefix : tuples)
      for (const Rat& choice : candidates[k]) {
        auto t = prefix;
        t.push_back(choice);
        next.push_back(std::move(t));
      }
    tuples = std::move(next);
  }

  std::vector<LiftState> out;
  for (const auto& z : tuples) {
    std::vector<Rat> x = apply_multiplicative(snf_.V, z);
    LiftState state = ones_state();
    for (int v = 0; v < curve_.tree().finite_count; ++v)
      for (int c = 0; c < spec_.rank; ++c)
        state.characters[v][c] =
            TSeries::constant(x[complex_.vertex_col(v, c)], ram_, work_trunc_);
    for (int eid = 0; eid < curve_.tree().bounded_count(); ++eid)
      state.scales[eid] =
          TSeries::constant(x[complex_.length_col(eid)], ram_, work_trunc_);
    out.push_back(std::move(state));
  }
  return out;
}

LiftedMap AlgebraicLift::lift(const LiftState& initial) const {
  LiftState state = initial;
  LiftedMap out;
  out.ramification = ram_;
  long previous = 0;
  const std::size_t n = target_.size();
  while (true) {
    std::vector<TSeries> rows = theta_map(state);
    long order = work_trunc_;
    for (std::size_t k = 0; k < n; ++k)
      order = std::min(order, rows[k].difference_order(target_[k]));
    if (order <= previous)
      throw TropError(ErrorCode::Precision,
                      "residual stopped improving at order " +
                          std::to_string(order) + " (pi-units)");
    out.residual_orders.push_back(order);
    previous = order;
    if (order >= stop_order_) break;

    // residual = 1 + pi^order * u; correct by the linearized system
    std::vector<TSeries> u(n);
    TSeries one = TSeries::constant(Rat(1), ram_, work_trunc_);
    for (std::size_t k = 0; k < n; ++k)
      u[k] = (target_[k] / rows[k] - one).shifted(-order);
    std::vector<TSeries> correction(complex_.matrix.cols(),
                                    TSeries::zero(ram_, work_trunc_ - order));
    for (std::size_t l = 0; l < complex_.matrix.cols(); ++l)
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& c = inverse_.at(l, k);
        if (c != 0) correction[l] = correction[l] + u[k].scaled(c);
      }
    auto bump = [&](TSeries& variable, std::size_t col) {
      variable = variable * (one + correction[col].shifted(order));
    };
    for (int v = 0; v < curve_.tree().finite_count; ++v)
      for (int c = 0; c < spec_.rank; ++c)
        bump(state.characters[v][c], complex_.vertex_col(v, c));
    for (int eid = 0; eid < curve_.tree().bounded_count(); ++eid)
      bump(state.scales[eid], complex_.length_col(eid));
  }
  out.achieved_order = previous;
  out.state = std::move(state);
  out.marked_points = marked_points(out.state);
  return out;
}

std::vector<LiftedMap> AlgebraicLift::lift_all() const {
  std::vector<LiftedMap> out;
  for (const LiftState& s : initial_solutions()) out.push_back(lift(s));
  return out;
}

bool AlgebraicLift::reproduces_tropical_curve(const LiftedMap& lifted,
                                              std::string* why) const {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  const MarkedTree& tree = curve_.tree();
  const RootedStructure& rooted = curve_.rooted;
  for (int eid = 0; eid < tree.bounded_count(); ++eid) {
    auto val = lifted.state.scales[eid].valuation();
    if (!val || *val != 0)
      return fail("edge scale " + std::to_string(eid) + " is not a unit");
  }
  for (int i = 1; i < tree.ends; ++i)
    for (int j = i + 1; j < tree.ends; ++j) {
      TSeries diff = lifted.marked_points[i - 1] - lifted.marked_points[j - 1];
      auto val = diff.valuation();
      if (!val)
        return fail("marked points " + std::to_string(i) + "," +
                    std::to_string(j) + " collide to precision");
      int split = median_vertex(rooted, VertexRef::finite(rooted.root_vertex),
                                VertexRef::at_infinity(i), VertexRef::at_infinity(j));
      Rat expect(0);
      for (const PathStep& s :
           geodesic(rooted, VertexRef::finite(rooted.root_vertex),
                    VertexRef::finite(split)))
        expect += curve_.lengths[s.edge];
      if (*val != expect)
        return fail("distance of marked points " + std::to_string(i) + "," +
                    std::to_string(j) + " disagrees with the tree metric");
    }
  return true;
}

}  // namespace tropcount
