#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropcount/problem_io.hpp"
#include "tropcount/render.hpp"

namespace py = pybind11;

namespace {

using namespace tropcount;

IntMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<IntVec> parsed;
  for (const auto& row : rows) {
    IntVec out;
    for (const std::string& cell : row) out.push_back(parse_int(cell));
    parsed.push_back(std::move(out));
  }
  return IntMatrix::from_rows(parsed);
}

std::vector<std::vector<std::string>> matrix_to_rows(const IntMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ProblemSpec parse_problem(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw TropError(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  return problem_from_json(doc);
}

std::optional<std::vector<int>> parse_sign_arg(const py::object& sign,
                                               std::size_t length) {
  if (sign.is_none()) return std::nullopt;
  if (py::isinstance<py::str>(sign)) {
    std::string text = sign.cast<std::string>();
    if (text == "positive") return std::vector<int>(length, 1);
    throw TropError(ErrorCode::Parse, "sign must be 'positive' or a list of +-1");
  }
  return sign.cast<std::vector<int>>();
}

}  // namespace

PYBIND11_MODULE(_tropcount, m) {
  m.doc() = "tropical curve counts with cross-ratio constraints";

  m.def("trivalent_tree_count",
        [](int r) { return to_string(trivalent_tree_count(r)); },
        py::arg("ends"), "Number of trivalent trees with the given ordered ends.");

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<std::string>>& rows) {
        SmithDecomposition snf = smith_normal_form(matrix_from_rows(rows));
        py::dict out;
        out["U"] = matrix_to_rows(snf.U);
        out["D"] = matrix_to_rows(snf.D);
        out["V"] = matrix_to_rows(snf.V);
        std::vector<std::string> divisors;
        for (const Int& d : snf.divisors) divisors.push_back(to_string(d));
        out["divisors"] = divisors;
        return out;
      },
      py::arg("rows"),
      "Smith decomposition of an integer matrix given as rows of strings.");

  m.def(
      "count",
      [](const std::string& problem_json) {
        ProblemSpec spec = parse_problem(problem_json);
        EnumerationResult result = enumerate_curves(spec);
        return result.total_complex ? to_string(*result.total_complex)
                                    : std::string("infinite");
      },
      py::arg("problem_json"), "Total complex count for a problem document.");

  m.def(
      "real_count",
      [](const std::string& problem_json, const py::object& sign) {
        ProblemSpec spec = parse_problem(problem_json);
        auto parsed = parse_sign_arg(sign, spec.sign_length());
        if (!parsed)
          throw TropError(ErrorCode::Invariant, "real_count needs a sign");
        EnumerationResult result = enumerate_curves(spec, parsed);
        return result.total_real ? to_string(*result.total_real)
                                 : std::string("infinite");
      },
      py::arg("problem_json"), py::arg("sign") = py::str("positive"),
      "Total real count for a sign vector ('positive' or a list of +-1).");

  m.def(
      "enumerate",
      [](const std::string& problem_json, const py::object& sign) {
        ProblemSpec spec = parse_problem(problem_json);
        auto parsed = parse_sign_arg(sign, spec.sign_length());
        return result_to_json(spec, enumerate_curves(spec, parsed)).dump(2);
      },
      py::arg("problem_json"), py::arg("sign") = py::none(),
      "Full enumeration result as a JSON document string.");

  m.def(
      "lift",
      [](const std::string& problem_json, int order) {
        ProblemSpec spec = parse_problem(problem_json);
        EnumerationResult result = enumerate_curves(spec);
        if (!result.tropically_general)
          throw TropError(ErrorCode::GeneralityViolation,
                          "constraints are not tropically general");
        Json doc = result_to_json(spec, result);
        doc["lifts"] = Json::array();
        for (const AcceptedCurve& accepted : result.curves) {
          AlgebraicLift context(accepted.curve, spec, order);
          doc["lifts"].push_back(lifts_to_json(context, context.lift_all()));
        }
        return doc.dump(2);
      },
      py::arg("problem_json"), py::arg("order"),
      "Enumerate and lift every solution to the given t-adic order.");

  m.def(
      "render",
      [](const std::string& problem_json, const std::string& bbox) {
        ProblemSpec spec = parse_problem(problem_json);
        RenderOptions options;
        std::stringstream stream(bbox);
        std::string item;
        RatVec box;
        while (std::getline(stream, item, ',')) box.push_back(parse_rat(item));
        if (box.size() != 4)
          throw TropError(ErrorCode::Parse, "bbox needs xmin,ymin,xmax,ymax");
        options.xmin = box[0];
        options.ymin = box[1];
        options.xmax = box[2];
        options.ymax = box[3];
        std::vector<std::string> svgs;
        for (const AcceptedCurve& a : enumerate_curves(spec).curves)
          svgs.push_back(render_curve_svg(a.curve, spec, options));
        return svgs;
      },
      py::arg("problem_json"), py::arg("bbox"),
      "One SVG string per solution curve (rank-2 problems).");

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const TropError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

#ifdef TROPCOUNT_VERSION
  m.attr("__version__") = TROPCOUNT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
