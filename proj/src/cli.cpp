#include "tropcount/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "tropcount/problem_io.hpp"
#include "tropcount/render.hpp"

namespace tropcount {

namespace {

int exit_code(ErrorCode code) { return static_cast<int>(code); }

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Invariant: return "invariant";
    case ErrorCode::DimensionCondition: return "dimension-condition";
    case ErrorCode::GeneralityViolation: return "generality-violation";
    case ErrorCode::FieldExtensionRequired: return "field-extension-required";
    case ErrorCode::Precision: return "precision";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

std::vector<int> parse_sign(const std::string& text, std::size_t length) {
  std::vector<int> sign;
  if (text == "positive") {
    sign.assign(length, 1);
    return sign;
  }
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "1" || item == "+1")
      sign.push_back(1);
    else if (item == "-1")
      sign.push_back(-1);
    else
      throw TropError(ErrorCode::Parse, "sign entries must be +1 or -1");
  }
  if (sign.size() != length)
    throw TropError(ErrorCode::Invariant,
                    "sign vector needs " + std::to_string(length) + " entries");
  return sign;
}

Rat parse_rat_arg(const std::string& text) { return parse_rat(text); }

struct RunPlan {
  std::string command;
  std::string problem_path;
  std::string output_path = "result.json";
  std::string sign_text;
  std::string bbox_text;
  std::string projection_text;
  std::string render_prefix = "curve";
  int order = 0;
  bool order_set = false;
};

int execute(const RunPlan& plan, std::ostream& out) {
  ProblemSpec spec = load_problem_file(plan.problem_path);

  if (plan.command == "validate") {
    out << "problem ok: rank " << spec.rank << ", " << spec.ends() << " ends, "
        << spec.cross_ratio_count() << " cross-ratio constraints\n";
    out << "constraint quotient ranks:";
    for (const AffineConstraint& c : spec.constraints) out << " " << c.quotient_rank;
    out << "\n";
    for (int i = 0; i < spec.ends(); ++i) {
      const AffineConstraint& c = spec.constraints[i];
      if (c.quotient_rank == 0) continue;
      out << "derived projection for end " << (i + 1) << ":";
      for (std::size_t l = 0; l < c.projection.rows(); ++l) {
        out << " [";
        for (std::size_t j = 0; j < c.projection.cols(); ++j)
          out << (j ? "," : "") << to_string(c.projection.at(l, j));
        out << "] -> " << to_string(c.target[l]);
      }
      out << "\n";
    }
    out << "dimension condition: " << (spec.dimension_condition() ? "holds" : "fails")
        << "\n";
    return 0;
  }

  std::optional<std::vector<int>> sign;
  if (!plan.sign_text.empty()) sign = parse_sign(plan.sign_text, spec.sign_length());

  EnumerationResult result = enumerate_curves(spec, sign);
  int soft_exit = result.tropically_general
                      ? 0
                      : exit_code(ErrorCode::GeneralityViolation);

  if (plan.command == "count") {
    out << (result.total_complex ? to_string(*result.total_complex) : "infinite")
        << "\n";
    return soft_exit;
  }
  if (plan.command == "real-count") {
    out << (result.total_real ? to_string(*result.total_real) : "infinite") << "\n";
    return soft_exit;
  }
  if (plan.command == "enumerate") {
    Json doc = result_to_json(spec, result);
    write_text_file(plan.output_path, doc.dump(2) + "\n");
    out << "curves: " << result.curves.size() << ", total: "
        << (result.total_complex ? to_string(*result.total_complex) : "infinite")
        << ", written to " << plan.output_path << "\n";
    return soft_exit;
  }
  if (plan.command == "lift") {
    if (soft_exit != 0)
      throw TropError(ErrorCode::GeneralityViolation,
                      "constraints are not tropically general; refusing to lift");
    int order = plan.order_set ? plan.order : spec.lift_order.value_or(0);
    if (order < 1)
      throw TropError(ErrorCode::Invariant,
                      "lift needs --order or a lift_order field");
    Json doc = result_to_json(spec, result);
    doc["lifts"] = Json::array();
    std::size_t total = 0;
    for (const AcceptedCurve& accepted : result.curves) {
      AlgebraicLift context(accepted.curve, spec, order);
      std::vector<LiftedMap> lifted = context.lift_all();
      for (const LiftedMap& m : lifted) {
        std::string why;
        if (!context.reproduces_tropical_curve(m, &why))
          throw TropError(ErrorCode::Precision,
                          "lift does not tropicalize back: " + why);
      }
      total += lifted.size();
      doc["lifts"].push_back(lifts_to_json(context, lifted));
    }
    write_text_file(plan.output_path, doc.dump(2) + "\n");
    out << "lifted maps: " << total << " (order " << order << "), written to "
        << plan.output_path << "\n";
    return 0;
  }
  if (plan.command == "render") {
    RenderOptions options;
    {
      std::stringstream stream(plan.bbox_text);
      std::string item;
      RatVec box;
      while (std::getline(stream, item, ',')) box.push_back(parse_rat_arg(item));
      if (box.size() != 4)
        throw TropError(ErrorCode::Parse, "--bbox needs xmin,ymin,xmax,ymax");
      options.xmin = box[0];
      options.ymin = box[1];
      options.xmax = box[2];
      options.ymax = box[3];
    }
    if (!plan.projection_text.empty()) {
      RatMatrix proj(2, spec.rank);
      std::stringstream rows(plan.projection_text);
      std::string row;
      std::size_t i = 0;
      while (std::getline(rows, row, ';')) {
        if (i >= 2) throw TropError(ErrorCode::Parse, "projection needs 2 rows");
        std::stringstream cells(row);
        std::string cell;
        std::size_t j = 0;
        while (std::getline(cells, cell, ',')) {
          if (j >= static_cast<std::size_t>(spec.rank))
            throw TropError(ErrorCode::Parse, "projection row too long");
          proj.at(i, j++) = parse_rat_arg(cell);
        }
        if (j != static_cast<std::size_t>(spec.rank))
          throw TropError(ErrorCode::Parse, "projection row too short");
        ++i;
      }
      if (i != 2) throw TropError(ErrorCode::Parse, "projection needs 2 rows");
      options.projection = std::move(proj);
    }
    for (std::size_t k = 0; k < result.curves.size(); ++k) {
      std::string path = plan.render_prefix + "_" + std::to_string(k) + ".svg";
      write_text_file(path,
                      render_curve_svg(result.curves[k].curve, spec, options));
      out << "wrote " << path << "\n";
    }
    return soft_exit;
  }
  throw TropError(ErrorCode::Internal, "unknown command");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"tropical curve counts with cross-ratio constraints"};
  app.require_subcommand(1);
  RunPlan plan;

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("problem", plan.problem_path, "problem JSON file")->required();
  };
  CLI::App* validate = app.add_subcommand("validate", "check a problem file");
  add_problem(validate);
  CLI::App* enumerate = app.add_subcommand("enumerate", "solve and write a result file");
  add_problem(enumerate);
  enumerate->add_option("-o,--output", plan.output_path, "result file path");
  enumerate->add_option("--sign", plan.sign_text, "real sign: 'positive' or list");
  CLI::App* count = app.add_subcommand("count", "print the complex count");
  add_problem(count);
  CLI::App* real_count =
      app.add_subcommand("real-count", "print the real count for a sign");
  add_problem(real_count);
  real_count->add_option("--sign", plan.sign_text, "'positive' or comma list of +-1")
      ->required();
  CLI::App* lift = app.add_subcommand("lift", "lift solutions to algebraic maps");
  add_problem(lift);
  lift->add_option("--order", plan.order, "t-adic order of the lift")
      ->check(CLI::PositiveNumber);
  lift->add_option("-o,--output", plan.output_path, "result file path");
  CLI::App* render = app.add_subcommand("render", "write one SVG per curve");
  add_problem(render);
  render->add_option("--bbox", plan.bbox_text, "xmin,ymin,xmax,ymax")->required();
  render->add_option("--projection", plan.projection_text,
                     "2 x rank matrix 'a,b;c,d' for higher-rank curves");
  render->add_option("-o,--output-prefix", plan.render_prefix, "SVG name prefix");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << Json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump()
        << "\n";
    return exit_code(ErrorCode::Parse);
  }

  for (CLI::App* sub : app.get_subcommands()) plan.command = sub->get_name();
  plan.order_set = lift->count("--order") > 0;

  try {
    return execute(plan, out);
  } catch (const TropError& e) {
    err << Json{{"error", {{"code", code_name(e.code())}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << Json{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump()
        << "\n";
    return exit_code(ErrorCode::Internal);
  }
}

}  // namespace tropcount
