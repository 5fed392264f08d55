#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <fstream>
#include <sstream>

#include "rkstab/cli.hpp"
#include "rkstab/io.hpp"
#include "rkstab/limits.hpp"
#include "rkstab/presets.hpp"
#include "rkstab/simulation.hpp"

namespace py = pybind11;
using namespace rkstab;

namespace {

ButcherTableau resolve_tableau(const std::string& scheme) {
  const auto& ids = builtin_scheme_ids();
  if (std::find(ids.begin(), ids.end(), scheme) != ids.end()) return builtin_scheme(scheme);
  std::ifstream in(scheme);
  if (!in) throw std::invalid_argument("'" + scheme + "' is neither a builtin scheme nor a file");
  return read_tableau(in);
}

PresetOverrides overrides(std::optional<std::size_t> n_cells, std::optional<double> t_final,
                          std::optional<double> tolerance, std::optional<bool> tv_wrap,
                          std::optional<std::string> lf) {
  PresetOverrides o;
  o.n_cells = n_cells;
  o.t_final = t_final;
  o.tolerance = tolerance;
  o.tv_wrap = tv_wrap;
  if (lf) {
    if (*lf == "local") {
      o.lf_variant = LaxFriedrichsVariant::local;
    } else if (*lf == "global") {
      o.lf_variant = LaxFriedrichsVariant::global;
    } else {
      throw std::invalid_argument("lf must be 'local' or 'global'");
    }
  }
  return o;
}

py::dict record_dict(const SimulationConfig& config, const SimulationRecord& rec) {
  py::dict d;
  d["verdict"] = py::module_::import("json").attr("loads")(verdict_json(config, rec).dump());
  d["times"] = rec.times;
  d["monitor_step_values"] = rec.monitor_step_values;
  d["monitor_stage_worst"] = rec.monitor_stage_worst;
  d["monitor_shifted_worst"] = rec.monitor_shifted_worst;
  d["min_rho"] = rec.min_rho;
  d["min_rhoe"] = rec.min_rhoe;
  d["final_state"] = rec.final_state;
  d["x"] = [&] {
    std::vector<double> x(config.grid.n_cells());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = config.grid.x(i);
    return x;
  }();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stability step-size analysis of explicit Runge-Kutta methods";

  py::register_exception<NonPhysicalState>(m, "NonPhysicalState", PyExc_RuntimeError);
  py::register_exception<TableauParseError>(m, "TableauParseError", PyExc_ValueError);
  py::register_exception<UnsupportedBoundary>(m, "UnsupportedBoundary", PyExc_ValueError);

  py::class_<ButcherTableau>(m, "ButcherTableau")
      .def(py::init(&make_tableau), py::arg("name"), py::arg("a"), py::arg("b"))
      .def_readonly("name", &ButcherTableau::name)
      .def_readonly("a", &ButcherTableau::a)
      .def_readonly("b", &ButcherTableau::b)
      .def_readonly("c", &ButcherTableau::c)
      .def_property_readonly("stages", &ButcherTableau::stages)
      .def("__repr__", [](const ButcherTableau& t) {
        return "<ButcherTableau " + t.name + " s=" + std::to_string(t.stages()) + ">";
      });

  py::class_<SspAnalysis>(m, "SspAnalysis")
      .def_readonly("ssp_coefficient", &SspAnalysis::ssp_coefficient)
      .def_readonly("satisfies_assumption1", &SspAnalysis::satisfies_assumption1)
      .def_readonly("bisection_tolerance", &SspAnalysis::bisection_tolerance);

  m.def("builtin_scheme_ids", &builtin_scheme_ids);
  m.def("builtin_scheme", [](const std::string& id) { return builtin_scheme(id); });
  m.def("read_tableau", [](const std::string& text) {
    std::istringstream in(text);
    return read_tableau(in);
  }, py::arg("text"), "Parse a tableau from its text form.");
  m.def("write_tableau", [](const ButcherTableau& t) {
    std::ostringstream out;
    write_tableau(out, t);
    return out.str();
  });
  m.def("consistency_issues", [](const ButcherTableau& t) {
    std::vector<std::string> out;
    for (const auto& issue : validate_consistency(t).issues) out.push_back(issue.message);
    return out;
  });
  m.def("check_assumption1", &check_assumption1);
  m.def("ssp_coefficient", &ssp_coefficient, py::arg("tableau"), py::arg("tol") = 1e-10);

  m.def("total_variation", py::overload_cast<const std::vector<double>&, bool>(&total_variation),
        py::arg("q"), py::arg("wrap") = true);
  m.def("quadratic_energy", py::overload_cast<const std::vector<double>&>(&quadratic_energy));
  m.def("minmod", &minmod);
  m.def("godunov_flux_burgers", &godunov_flux_burgers);

  m.def(
      "rhs_dissipative_burgers",
      [](const std::vector<double>& q, double dx, double mu) {
        const double n = static_cast<double>(q.size());
        return rhs_dissipative_burgers(ScalarField(Grid1D(q.size(), 0.0, dx * n), q), mu).q;
      },
      py::arg("q"), py::arg("dx"), py::arg("mu") = 1e-3, "Periodic grid.");
  m.def(
      "rhs_upwind_burgers",
      [](const std::vector<double>& q, double dx) {
        const double n = static_cast<double>(q.size());
        return rhs_upwind_burgers(ScalarField(Grid1D(q.size(), 0.0, dx * n), q)).q;
      },
      py::arg("q"), py::arg("dx"), "Periodic grid.");
  m.def(
      "rhs_muscl_burgers",
      [](const std::vector<double>& q, double dx, std::optional<std::pair<double, double>> dirichlet) {
        const double n = static_cast<double>(q.size());
        const Boundary b = dirichlet ? Boundary{Dirichlet{dirichlet->first, dirichlet->second}}
                                     : Boundary{Periodic{}};
        return rhs_muscl_burgers(ScalarField(Grid1D(q.size(), 0.0, dx * n, b), q)).q;
      },
      py::arg("q"), py::arg("dx"), py::arg("dirichlet") = py::none(),
      "Periodic unless boundary states (left, right) are given.");

  m.def("experiment_ids", &experiment_ids);
  m.def(
      "simulate",
      [](const std::string& experiment, const std::string& scheme, double dt_factor,
         std::optional<std::size_t> n_cells, std::optional<double> t_final,
         std::optional<double> tolerance, std::optional<bool> tv_wrap,
         std::optional<std::string> lf) {
        const auto config = experiment_preset(experiment, resolve_tableau(scheme), dt_factor,
                                              overrides(n_cells, t_final, tolerance, tv_wrap, lf));
        SimulationRecord rec;
        {
          py::gil_scoped_release release;
          rec = simulate(config);
        }
        return record_dict(config, rec);
      },
      py::arg("experiment"), py::arg("scheme"), py::arg("dt_factor") = 1.0,
      py::arg("n_cells") = py::none(), py::arg("t_final") = py::none(),
      py::arg("tolerance") = py::none(), py::arg("tv_wrap") = py::none(),
      py::arg("lf") = py::none(),
      "Run one preset experiment; returns the verdict and monitor histories.");

  m.def(
      "limits_table",
      [](const std::string& experiment, std::vector<std::string> schemes, double c_min,
         double c_max, double granularity, bool refine, unsigned threads,
         std::optional<std::size_t> n_cells, std::optional<double> t_final,
         std::optional<double> tolerance, std::optional<bool> tv_wrap,
         std::optional<std::string> lf) {
        if (schemes.empty()) schemes = builtin_scheme_ids();
        LimitTableOptions options{
            .c_min = c_min,
            .c_max = c_max,
            .granularity = granularity,
            .refine = refine,
            .threads = threads,
            .overrides = overrides(n_cells, t_final, tolerance, tv_wrap, lf),
        };
        LimitTable table;
        {
          py::gil_scoped_release release;
          table = limits_table(experiment, schemes, options);
        }
        return py::module_::import("json").attr("loads")(to_json(table).dump());
      },
      py::arg("experiment"), py::arg("schemes") = std::vector<std::string>{},
      py::arg("c_min") = 0.1, py::arg("c_max") = 5.0, py::arg("granularity") = 0.1,
      py::arg("refine") = false, py::arg("threads") = 0u, py::arg("n_cells") = py::none(),
      py::arg("t_final") = py::none(), py::arg("tolerance") = py::none(),
      py::arg("tv_wrap") = py::none(), py::arg("lf") = py::none(),
      "Measure c_s and c_p for each scheme; returns the JSON table as a dict.");

  m.def(
      "cli_main",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "rkstab");
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        py::gil_scoped_release release;
        return cli::main(static_cast<int>(argv.size()), argv.data());
      },
      py::arg("args"), "Run the command-line tool in-process; returns its exit code.");
}
