#include "tropcount/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "tropcount/sha256.hpp"

namespace tropcount {

Rat rat_from_json(const Json& value) {
  if (value.is_number_integer())
    return Rat(static_cast<long>(value.get<long long>()));
  if (value.is_string()) return parse_rat(value.get<std::string>());
  throw TropError(ErrorCode::Parse, "expected a rational ('p/q' string or integer)");
}

Json rat_to_json(const Rat& value) { return to_string(value); }

namespace {

Int int_from_json(const Json& value) {
  if (value.is_number_integer())
    return Int(static_cast<long>(value.get<long long>()));
  if (value.is_string()) return parse_int(value.get<std::string>());
  throw TropError(ErrorCode::Parse, "expected an integer");
}

IntVec int_vec_from_json(const Json& value, const char* what) {
  if (!value.is_array())
    throw TropError(ErrorCode::Parse, std::string("expected an array for ") + what);
  IntVec out;
  for (const Json& x : value) out.push_back(int_from_json(x));
  return out;
}

RatVec rat_vec_from_json(const Json& value, const char* what) {
  if (!value.is_array())
    throw TropError(ErrorCode::Parse, std::string("expected an array for ") + what);
  RatVec out;
  for (const Json& x : value) out.push_back(rat_from_json(x));
  return out;
}

Json int_vec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(to_string(x));
  return out;
}

Json rat_vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

ProblemSpec problem_from_json(const Json& doc) {
  if (!doc.is_object()) throw TropError(ErrorCode::Parse, "problem must be an object");
  if (doc.value("schema", std::string()) != kProblemSchema)
    throw TropError(ErrorCode::Parse,
                    std::string("unknown schema; expected ") + kProblemSchema);
  ProblemSpec spec;
  if (!doc.contains("rank") || !doc["rank"].is_number_integer())
    throw TropError(ErrorCode::Parse, "missing integer field 'rank'");
  spec.rank = doc["rank"].get<int>();

  if (!doc.contains("degrees") || !doc["degrees"].is_array())
    throw TropError(ErrorCode::Parse, "missing array field 'degrees'");
  for (const Json& d : doc["degrees"])
    spec.degrees.push_back(int_vec_from_json(d, "a degree vector"));

  if (!doc.contains("constraints") || !doc["constraints"].is_array())
    throw TropError(ErrorCode::Parse, "missing array field 'constraints'");
  for (const Json& c : doc["constraints"]) {
    if (!c.is_object())
      throw TropError(ErrorCode::Parse, "constraints must be objects");
    AffineConstraint out;
    if (!c.contains("lattice") || !c["lattice"].is_array())
      throw TropError(ErrorCode::Parse, "constraint needs a 'lattice' row list");
    std::vector<IntVec> rows;
    for (const Json& row : c["lattice"])
      rows.push_back(int_vec_from_json(row, "a lattice generator"));
    out.lattice = rows.empty() ? IntMatrix(0, spec.rank) : IntMatrix::from_rows(rows);
    if (c.contains("point")) out.point = rat_vec_from_json(c["point"], "'point'");
    if (c.contains("coefficients"))
      out.leading_coefficients =
          rat_vec_from_json(c["coefficients"], "'coefficients'");
    spec.constraints.push_back(std::move(out));
  }

  if (doc.contains("cross_ratios")) {
    if (!doc["cross_ratios"].is_array())
      throw TropError(ErrorCode::Parse, "'cross_ratios' must be an array");
    for (const Json& x : doc["cross_ratios"]) {
      CrossRatioConstraint out;
      if (!x.is_object() || !x.contains("ends") || !x["ends"].is_array() ||
          x["ends"].size() != 4 || !x.contains("value"))
        throw TropError(ErrorCode::Parse,
                        "a cross-ratio needs four 'ends' and a 'value'");
      for (int k = 0; k < 4; ++k) out.ends[k] = x["ends"][k].get<int>();
      out.tropical = rat_from_json(x["value"]);
      if (x.contains("coefficient"))
        out.leading_coefficient = rat_from_json(x["coefficient"]);
      spec.cross_ratios.push_back(std::move(out));
    }
  }

  if (doc.contains("lift_order")) spec.lift_order = doc["lift_order"].get<int>();
  if (doc.contains("signs")) {
    std::vector<int> signs;
    for (const Json& s : doc["signs"]) signs.push_back(s.get<int>());
    spec.sign_vector = std::move(signs);
  }
  if (doc.contains("essential_beta"))
    for (const Json& b : doc["essential_beta"])
      spec.essential_beta.push_back(rat_from_json(b));

  spec.validate();
  return spec;
}

Json problem_to_json(const ProblemSpec& spec) {
  Json doc;
  doc["schema"] = kProblemSchema;
  doc["rank"] = spec.rank;
  doc["degrees"] = Json::array();
  for (const IntVec& d : spec.degrees) doc["degrees"].push_back(int_vec_to_json(d));
  doc["constraints"] = Json::array();
  for (const AffineConstraint& c : spec.constraints) {
    Json out;
    Json rows = Json::array();
    for (std::size_t i = 0; i < c.lattice.rows(); ++i) {
      IntVec row;
      for (std::size_t j = 0; j < c.lattice.cols(); ++j)
        row.push_back(c.lattice.at(i, j));
      rows.push_back(int_vec_to_json(row));
    }
    out["lattice"] = rows;
    if (!c.point.empty()) out["point"] = rat_vec_to_json(c.point);
    if (c.leading_coefficients)
      out["coefficients"] = rat_vec_to_json(*c.leading_coefficients);
    doc["constraints"].push_back(std::move(out));
  }
  doc["cross_ratios"] = Json::array();
  for (const CrossRatioConstraint& x : spec.cross_ratios) {
    Json out;
    out["ends"] = x.ends;
    out["value"] = rat_to_json(x.tropical);
    if (x.leading_coefficient != 1)
      out["coefficient"] = rat_to_json(x.leading_coefficient);
    doc["cross_ratios"].push_back(std::move(out));
  }
  if (spec.lift_order) doc["lift_order"] = *spec.lift_order;
  if (spec.sign_vector) doc["signs"] = *spec.sign_vector;
  if (!spec.essential_beta.empty()) {
    doc["essential_beta"] = Json::array();
    for (const Rat& b : spec.essential_beta)
      doc["essential_beta"].push_back(to_string(b));
  }
  return doc;
}

ProblemSpec load_problem_file(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw TropError(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  return problem_from_json(doc);
}

std::string canonical_problem_digest(const ProblemSpec& spec) {
  return sha256_hex(problem_to_json(spec).dump());
}

Json curve_to_json(const TropicalCurve& curve) {
  const MarkedTree& tree = curve.tree();
  Json out;
  out["tree"] = Json{{"ends", tree.ends},
                     {"finite_vertices", tree.finite_count},
                     {"end_vertices", tree.end_vertex},
                     {"bounded_edges", Json::array()}};
  for (const auto& [a, b] : tree.bounded)
    out["tree"]["bounded_edges"].push_back(Json::array({a, b}));
  out["slopes"] = Json::array();
  for (const IntVec& s : curve.slopes) out["slopes"].push_back(int_vec_to_json(s));
  out["lengths"] = Json::array();
  for (const Rat& l : curve.lengths) out["lengths"].push_back(to_string(l));
  out["positions"] = Json::array();
  for (const RatVec& p : curve.positions) out["positions"].push_back(rat_vec_to_json(p));
  return out;
}

Json result_to_json(const ProblemSpec& spec, const EnumerationResult& result) {
  Json doc;
  doc["schema"] = kResultSchema;
  doc["tool_version"] = kToolVersion;
  doc["problem_sha256"] = canonical_problem_digest(spec);
  doc["types_visited"] = result.types_visited;
  doc["tropically_general"] = result.tropically_general;
  doc["curves"] = Json::array();
  for (const AcceptedCurve& a : result.curves) {
    Json entry = curve_to_json(a.curve);
    Json report;
    report["e1_rank"] = a.report.e1_rank;
    report["divisors"] = Json::array();
    for (const Int& d : a.report.divisors)
      report["divisors"].push_back(to_string(d));
    report["m_complex"] =
        a.report.finite() ? Json(to_string(*a.report.m_complex)) : Json("infinite");
    report["regular_over_Q"] = a.report.regular_over_Q;
    report["even_divisors"] = a.report.epsilon_even;
    entry["multiplicity"] = std::move(report);
    doc["curves"].push_back(std::move(entry));
  }
  doc["total_complex"] =
      result.total_complex ? Json(to_string(*result.total_complex)) : Json("infinite");
  if (result.total_real) doc["total_real"] = to_string(*result.total_real);
  doc["diagnostics"] = Json::array();
  for (const RejectedType& d : result.diagnostics) {
    Json entry;
    entry["type_index"] = d.type_index;
    entry["reason"] = rejection_name(d.reason);
    doc["diagnostics"].push_back(std::move(entry));
  }
  return doc;
}

Json lifts_to_json(const AlgebraicLift& context, const std::vector<LiftedMap>& lifted) {
  Json out;
  out["ramification"] = context.ramification();
  out["target_order_pi"] = context.target_order();
  out["count"] = lifted.size();
  out["maps"] = Json::array();
  for (const LiftedMap& m : lifted) {
    Json entry;
    entry["achieved_order_pi"] = m.achieved_order;
    entry["residual_orders_pi"] = m.residual_orders;
    entry["edge_scales"] = Json::array();
    for (const TSeries& s : m.state.scales) entry["edge_scales"].push_back(s.str());
    entry["vertex_characters"] = Json::array();
    for (const auto& character : m.state.characters) {
      Json row = Json::array();
      for (const TSeries& s : character) row.push_back(s.str());
      entry["vertex_characters"].push_back(std::move(row));
    }
    entry["marked_points"] = Json::array();
    for (const TSeries& s : m.marked_points) entry["marked_points"].push_back(s.str());
    out["maps"].push_back(std::move(entry));
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TropError(ErrorCode::Internal, "cannot write " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TropError(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace tropcount
