// Python bindings for the double-dot toolkit: parameters, generator,
// solvers, information measures, trajectory sampling and sweeps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "qdotinfo/fermi.hpp"
#include "qdotinfo/gillespie.hpp"
#include "qdotinfo/info.hpp"
#include "qdotinfo/io.hpp"
#include "qdotinfo/solver.hpp"
#include "qdotinfo/sweep.hpp"

namespace py = pybind11;
using namespace qdotinfo;

namespace {

std::string params_repr(const SystemParams& params) {
  std::ostringstream out;
  out << "SystemParams(";
  bool first = true;
  for (const auto& name : param_names()) {
    if (!first) out << ", ";
    out << name << "=" << param_field(params, name);
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coupled double-dot master-equation toolkit";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<AbsorbingStateError>(m, "AbsorbingStateError",
                                              PyExc_RuntimeError);
  py::register_exception<SweepError>(m, "SweepError", PyExc_RuntimeError);

  py::enum_<Reservoir>(m, "Reservoir")
      .value("H", Reservoir::H)
      .value("L", Reservoir::L);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init([](double eps_x, double eps_y, double u, double mu_d,
                       double mu_h, double mu_l, double t_d, double t_s,
                       double gamma_d, double gamma_h0, double gamma_h1,
                       double gamma_l0, double gamma_l1) {
             SystemParams p{eps_x, eps_y, u,       mu_d,     mu_h,
                            mu_l,  t_d,   t_s,     gamma_d,  gamma_h0,
                            gamma_h1, gamma_l0, gamma_l1};
             return p;
           }),
           py::kw_only(), py::arg("eps_x"), py::arg("eps_y"), py::arg("u"),
           py::arg("mu_d"), py::arg("mu_h"), py::arg("mu_l"), py::arg("t_d"),
           py::arg("t_s"), py::arg("gamma_d"), py::arg("gamma_h0"),
           py::arg("gamma_h1"), py::arg("gamma_l0"), py::arg("gamma_l1"))
      .def_readwrite("eps_x", &SystemParams::eps_x)
      .def_readwrite("eps_y", &SystemParams::eps_y)
      .def_readwrite("u", &SystemParams::u)
      .def_readwrite("mu_d", &SystemParams::mu_d)
      .def_readwrite("mu_h", &SystemParams::mu_h)
      .def_readwrite("mu_l", &SystemParams::mu_l)
      .def_readwrite("t_d", &SystemParams::t_d)
      .def_readwrite("t_s", &SystemParams::t_s)
      .def_readwrite("gamma_d", &SystemParams::gamma_d)
      .def_readwrite("gamma_h0", &SystemParams::gamma_h0)
      .def_readwrite("gamma_h1", &SystemParams::gamma_h1)
      .def_readwrite("gamma_l0", &SystemParams::gamma_l0)
      .def_readwrite("gamma_l1", &SystemParams::gamma_l1)
      .def("validate", [](const SystemParams& p) { validate(p); })
      .def("to_json", &params_to_json)
      .def_static("from_json", &params_from_json, py::arg("text"))
      .def("__eq__", [](const SystemParams& a, const SystemParams& b) { return a == b; })
      .def("__repr__", &params_repr);

  py::class_<Generator>(m, "Generator")
      .def_property_readonly("matrix", [](const Generator& g) { return g.g; })
      .def("rate", &Generator::rate, py::arg("from_state"), py::arg("to_state"))
      .def("max_exit_rate", &Generator::max_exit_rate);

  py::class_<StateDistribution>(m, "StateDistribution")
      .def(py::init([](const std::array<double, 4>& p) {
             StateDistribution d{p};
             validate(d);
             return d;
           }),
           py::arg("p"))
      .def_property_readonly("p", [](const StateDistribution& d) { return d.p; })
      .def("x_marginal", &StateDistribution::x_marginal)
      .def("y_marginal", &StateDistribution::y_marginal)
      .def("__getitem__",
           [](const StateDistribution& d, int i) {
             if (i < 0 || i >= 4) throw py::index_error();
             return d.p[i];
           })
      .def("__len__", [](const StateDistribution&) { return 4; })
      .def("__repr__", [](const StateDistribution& d) {
        std::ostringstream out;
        out << "StateDistribution([" << d.p[0] << ", " << d.p[1] << ", "
            << d.p[2] << ", " << d.p[3] << "])";
        return out.str();
      });

  py::class_<PhiResult>(m, "PhiResult")
      .def_readonly("phi", &PhiResult::phi)
      .def_readonly("p", &PhiResult::p)
      .def_readonly("q", &PhiResult::q)
      .def_readonly("per_state_terms", &PhiResult::per_state_terms);

  py::class_<TrajectoryStats>(m, "TrajectoryStats")
      .def_readonly("occupation", &TrajectoryStats::occupation)
      .def_readonly("total_time", &TrajectoryStats::total_time)
      .def_readonly("n_events", &TrajectoryStats::n_events)
      .def_readonly("seed", &TrajectoryStats::seed)
      .def("__eq__", [](const TrajectoryStats& a, const TrajectoryStats& b) {
        return a == b;
      });

  m.def("fermi", &fermi, py::arg("energy"), py::arg("mu"), py::arg("temperature"));
  m.def("detector_fill_fraction", &detector_fill_fraction, py::arg("params"),
        py::arg("y"));
  m.def("system_fill_fraction", &system_fill_fraction, py::arg("params"),
        py::arg("x"), py::arg("reservoir"));
  m.def("build_generator",
        py::overload_cast<const SystemParams&>(&build_generator),
        py::arg("params"));
  m.def("steady_state", &steady_state, py::arg("generator"));
  m.def(
      "evolve",
      [](const Generator& gen, const StateDistribution& p0, double t_end,
         std::optional<double> dt) { return evolve(gen, p0, t_end, dt); },
      py::arg("generator"), py::arg("p0"), py::arg("t_end"),
      py::arg("dt") = py::none());
  m.def("kl_divergence", &kl_divergence, py::arg("p"), py::arg("q"));
  m.def("disconnected_distribution", &disconnected_distribution, py::arg("params"));
  m.def("phi_mi", py::overload_cast<const SystemParams&>(&phi_mi),
        py::arg("params"));
  m.def("phi_mi",
        py::overload_cast<const SystemParams&, const SystemParams&>(&phi_mi),
        py::arg("interacting"), py::arg("disconnected"));
  m.def("shannon_entropy", &shannon_entropy, py::arg("p"));
  m.def("standard_mutual_information", &standard_mutual_information, py::arg("p"));
  m.def("sample_steady", &sample_steady, py::arg("params"), py::arg("seed"),
        py::arg("n_events"), py::arg("burn_in_events") = kDefaultBurnInEvents);

  py::enum_<DisconnectMode>(m, "DisconnectMode")
      .value("REBIND", DisconnectMode::kRebind)
      .value("KEEP_RESOLVED", DisconnectMode::kKeepResolved);

  py::enum_<Binding::Formula>(m, "BindingFormula")
      .value("EPS_X_PLUS_HALF_U", Binding::Formula::kEpsXPlusHalfU)
      .value("EPS_X_MINUS_HALF_U", Binding::Formula::kEpsXMinusHalfU)
      .value("CONSTANT", Binding::Formula::kConstant);

  py::class_<Binding>(m, "Binding")
      .def_readwrite("target", &Binding::target)
      .def_readwrite("formula", &Binding::formula)
      .def_readwrite("constant", &Binding::constant);
  m.def("parse_binding", &parse_binding, py::arg("text"));

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init([](const SystemParams& base, const std::string& var,
                       const std::vector<double>& grid,
                       const std::vector<std::string>& bindings,
                       DisconnectMode disconnect) {
             SweepSpec spec;
             spec.base = base;
             spec.swept_parameter = var;
             spec.grid = grid;
             for (const auto& text : bindings) {
               spec.bindings.push_back(parse_binding(text));
             }
             spec.disconnect = disconnect;
             return spec;
           }),
           py::arg("base"), py::arg("swept_parameter"), py::arg("grid"),
           py::arg("bindings") = std::vector<std::string>{},
           py::arg("disconnect") = DisconnectMode::kRebind)
      .def_readwrite("base", &SweepSpec::base)
      .def_readwrite("swept_parameter", &SweepSpec::swept_parameter)
      .def_readwrite("grid", &SweepSpec::grid)
      .def_readwrite("bindings", &SweepSpec::bindings)
      .def_readwrite("disconnect", &SweepSpec::disconnect);

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("swept_value", &SweepRecord::swept_value)
      .def_readonly("phi", &SweepRecord::phi)
      .def_readonly("p", &SweepRecord::p)
      .def_readonly("q", &SweepRecord::q)
      .def_readonly("entropy_p", &SweepRecord::entropy_p)
      .def_readonly("standard_mi", &SweepRecord::standard_mi);

  py::class_<FigureMember>(m, "FigureMember")
      .def_readonly("label", &FigureMember::label)
      .def_readonly("spec", &FigureMember::spec);

  py::class_<FigurePreset>(m, "FigurePreset")
      .def_readonly("name", &FigurePreset::name)
      .def_readonly("members", &FigurePreset::members);

  m.def("resolve_point", &resolve_point, py::arg("spec"), py::arg("value"));
  m.def("resolve_disconnected", &resolve_disconnected, py::arg("spec"),
        py::arg("value"));
  m.def("run_sweep", &run_sweep, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
  m.def("figure_preset", &figure_preset, py::arg("name"));
  m.def("default_u_grid", &default_u_grid);
  m.def("csv_string", [](const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    emit_csv(records, out);
    return out.str();
  });
}
