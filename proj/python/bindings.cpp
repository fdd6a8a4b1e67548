// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "finapp/approach.hpp"
#include "finapp/expcheck.hpp"
#include "finapp/exponential.hpp"
#include "finapp/generate.hpp"
#include "finapp/io.hpp"

namespace py = pybind11;
using namespace finapp;

namespace {

std::vector<Cost> parse_costs(const std::vector<std::string>& texts) {
  std::vector<Cost> out;
  for (const auto& t : texts) out.push_back(parse_cost(t));
  return out;
}

std::vector<Cost> values_on(const ApproachSpace& s, const std::map<std::string, std::string>& f) {
  nlohmann::json j;
  j["values"] = f;
  return function_from_json(j, s.points());
}

std::string check_exponentiable(const ApproachSpace& s, const std::string& method,
                                const std::vector<std::string>& grid) {
  ExpReport r;
  if (method == "exact") {
    r = check_exponentiable_exact(s);
  } else if (method == "grid") {
    r = grid.empty() ? check_exponentiable_grid(s, dense_grid(s))
                     : check_exponentiable_grid(s, parse_costs(grid));
  } else if (method == "classify") {
    r = classify_finite(s);
  } else {
    throw FormatError("unknown method '" + method + "'; use exact, grid or classify");
  }
  return to_json(r, s.points()).dump();
}

}  // namespace

PYBIND11_MODULE(_finapp, m) {
  m.doc() = "Finite approach spaces over exact rational costs";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<CostParseError>(m, "CostParseError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InvalidSpace>(m, "InvalidSpace", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<NotAContraction>(m, "NotAContraction", PyExc_ValueError);

  m.def("normalize_cost", [](const std::string& t) { return to_string(parse_cost(t)); });
  m.def("cost_add", [](const std::string& u, const std::string& v) {
    return to_string(parse_cost(u) + parse_cost(v));
  });
  m.def("cost_ominus", [](const std::string& v, const std::string& u) {
    return to_string(ominus(parse_cost(v), parse_cost(u)));
  });
  m.def("cost_join", [](const std::string& u, const std::string& v) {
    return to_string(join(parse_cost(u), parse_cost(v)));
  });

  m.def("check_axioms", [](const std::string& text) {
    NumRel mat = space_matrix_from_json(parse_json(text));
    return to_json(check_axioms(mat), mat.source()).dump();
  });

  py::class_<ApproachSpace>(m, "Space")
      .def_static(
          "from_json",
          [](const std::string& text, bool pseudo) { return space_from_json(parse_json(text), pseudo); },
          py::arg("text"), py::arg("pseudo") = false)
      .def_static(
          "generate",
          [](std::size_t points, const std::vector<std::string>& values, std::uint64_t seed) {
            const std::vector<Cost> pool = parse_costs(values);
            if (pool.empty()) throw FormatError("values needs at least one cost");
            std::mt19937_64 rng(seed);
            return random_space(points, pool, rng);
          },
          py::arg("points"), py::arg("values"), py::arg("seed") = kDefaultSeed)
      .def("to_json", [](const ApproachSpace& s) { return space_to_json(s).dump(); })
      .def_property_readonly("points", [](const ApproachSpace& s) { return s.points().labels(); })
      .def_property_readonly("is_pseudo", &ApproachSpace::is_pseudo)
      .def("__len__", &ApproachSpace::size)
      .def("__eq__", [](const ApproachSpace& a, const ApproachSpace& b) { return a == b; })
      .def("conv", [](const ApproachSpace& s, const std::string& z, const std::string& x) {
        return to_string(s.conv(s.points().index_of(z), s.points().index_of(x)));
      })
      .def("dist", [](const ApproachSpace& s, const std::vector<std::string>& set,
                      const std::string& at) {
        Subset a = 0;
        for (const auto& label : set) a |= singleton(s.points().index_of(label));
        return to_string(dist_from_conv(s, a, s.points().index_of(at)));
      })
      .def("product", [](const ApproachSpace& s, const ApproachSpace& t) { return product(s, t); })
      .def("phi", [](const ApproachSpace& s, const std::string& z, const std::string& u,
                     const std::string& v) {
        const auto values = phi_uv(s, s.points().index_of(z), parse_cost(u), parse_cost(v));
        return function_to_json(s.points(), values)["values"].dump();
      })
      .def("exp_d", [](const ApproachSpace& s, const std::map<std::string, std::string>& psi,
                       const std::map<std::string, std::string>& phi) {
        const ContractionFn p = ContractionFn::certify(s, values_on(s, psi));
        const ContractionFn f = ContractionFn::certify(s, values_on(s, phi));
        return to_string(d_principal(s, p, f));
      })
      .def("check_exponentiable", &check_exponentiable, py::arg("method") = "exact",
           py::arg("grid") = std::vector<std::string>{})
      .def("replay", [](const ApproachSpace& s, const std::string& z, const std::string& x0,
                        const std::string& u, const std::string& v) {
        const ReplayReport r = replay_theorem(s, s.points().index_of(z), s.points().index_of(x0),
                                              parse_cost(u), parse_cost(v));
        return to_json(r, s.points()).dump();
      });
}
