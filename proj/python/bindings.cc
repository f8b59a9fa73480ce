#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "xyzcyclic/distance.h"
#include "xyzcyclic/errors.h"
#include "xyzcyclic/noise.h"
#include "xyzcyclic/oracle.h"

namespace py = pybind11;
using namespace xyz;

namespace {

std::vector<std::string> generator_labels(const StabilizerCode& code) {
  std::vector<std::string> out;
  for (const auto& g : code.generators()) out.push_back(g.label());
  return out;
}

}  // namespace

PYBIND11_MODULE(xyzcyclic, m) {
  m.doc() = "XYZ cyclic stabilizer codes: construction, distance estimation and noise simulation";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InfeasibleSyndrome>(m, "InfeasibleSyndrome", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<WitnessNotFound>(m, "WitnessNotFound", PyExc_RuntimeError);

  py::enum_<PauliType>(m, "PauliType").value("X", PauliType::X).value("Y", PauliType::Y).value("Z", PauliType::Z);

  py::class_<XYZParams>(m, "XYZParams")
      .def(py::init([](std::size_t a, std::size_t b) { return XYZParams{a, b}; }), py::arg("a"), py::arg("b"))
      .def_readwrite("a", &XYZParams::a)
      .def_readwrite("b", &XYZParams::b)
      .def_property_readonly("n", &XYZParams::n)
      .def("__repr__", [](const XYZParams& p) {
        return "XYZParams(a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b) + ")";
      });

  py::class_<PauliString>(m, "PauliString")
      .def(py::init(&PauliString::from_label), py::arg("label"))
      .def_property_readonly("label", &PauliString::label)
      .def_property_readonly("weight", [](const PauliString& p) { return weight(p); })
      .def_property_readonly("num_qubits", &PauliString::num_qubits)
      .def("__mul__", [](const PauliString& p, const PauliString& q) { return multiply(p, q); })
      .def("commutes_with", [](const PauliString& p, const PauliString& q) { return !symplectic_product(p, q); })
      .def("__eq__", [](const PauliString& p, const PauliString& q) { return p == q; })
      .def("__repr__", [](const PauliString& p) { return "PauliString('" + p.label() + "')"; });

  py::class_<StabilizerCode>(m, "StabilizerCode")
      .def_static("from_labels", &StabilizerCode::from_labels)
      .def_property_readonly("num_qubits", &StabilizerCode::num_qubits)
      .def_property_readonly("generators", &generator_labels)
      .def_property_readonly("independent_rank", &StabilizerCode::independent_rank)
      .def_property_readonly("num_logical_qubits", [](const StabilizerCode& c) { return num_logical_qubits(c); })
      .def("is_logical", [](const StabilizerCode& c, const PauliString& p) { return is_logical(c, p); })
      .def("in_stabilizer_group", &StabilizerCode::in_stabilizer_group)
      .def("check_abelian", [](const StabilizerCode& c) { return check_abelian(c); });

  m.def("build_code", &build_code, py::arg("params"));
  m.def("seed_generator", &seed_generator_label, py::arg("params"));
  m.def("code_dimension", &code_dimension, py::arg("params"));
  m.def("has_repetition_structure", &has_repetition_structure, py::arg("params"), py::arg("sigma"));
  m.def("repetition_by_rank", &repetition_by_rank, py::arg("params"), py::arg("sigma"));
  m.def("x_witness_params", &x_witness_params, py::arg("b"), py::arg("l"));
  m.def("x_logical_witness", &x_logical_witness, py::arg("b"), py::arg("l"));
  m.def("y_logical_witness", &y_logical_witness, py::arg("params"));
  m.def("y_weight_upper_bound", &y_weight_upper_bound, py::arg("b"));

  py::enum_<BpVariant>(m, "BpVariant")
      .value("PRODUCT_SUM", BpVariant::ProductSum)
      .value("MIN_SUM", BpVariant::MinSum);
  py::enum_<BpSchedule>(m, "BpSchedule")
      .value("PARALLEL", BpSchedule::Parallel)
      .value("SERIAL", BpSchedule::Serial);

  py::class_<DecoderConfig>(m, "DecoderConfig")
      .def(py::init<>())
      .def_readwrite("max_bp_iterations", &DecoderConfig::max_bp_iterations)
      .def_readwrite("bp_variant", &DecoderConfig::bp_variant)
      .def_readwrite("min_sum_scale", &DecoderConfig::min_sum_scale)
      .def_readwrite("osd_order", &DecoderConfig::osd_order)
      .def_readwrite("schedule", &DecoderConfig::schedule)
      .def_readwrite("coset_aware_exhaustive", &DecoderConfig::coset_aware_exhaustive)
      .def_readwrite("stop_on_bp_convergence", &DecoderConfig::stop_on_bp_convergence);
  m.def("default_distance_decoder", &default_distance_decoder);
  m.def("default_simulation_decoder", &default_simulation_decoder);

  py::class_<DistanceReport>(m, "DistanceReport")
      .def_readonly("n", &DistanceReport::n)
      .def_readonly("d_x_up", &DistanceReport::d_x_up)
      .def_readonly("d_z_up", &DistanceReport::d_z_up)
      .def_readonly("d_y_up", &DistanceReport::d_y_up)
      .def_readonly("x_witness", &DistanceReport::x_witness)
      .def_readonly("z_witness", &DistanceReport::z_witness)
      .def_readonly("y_witness", &DistanceReport::y_witness)
      .def_readonly("trials", &DistanceReport::trials)
      .def_readonly("seed", &DistanceReport::seed)
      .def_readonly("skipped", &DistanceReport::skipped)
      .def_property_readonly("min_distance", &DistanceReport::min_distance);

  m.def(
      "distance_upper_bound",
      [](const StabilizerCode& code, std::size_t trials, std::uint64_t seed, std::optional<DecoderConfig> cfg,
         double prior_p, std::size_t threads) {
        DistanceOptions opts;
        opts.prior_p = prior_p;
        opts.threads = threads;
        py::gil_scoped_release release;
        return distance_upper_bound(code, trials, cfg.value_or(default_distance_decoder()), seed, opts);
      },
      py::arg("code"), py::arg("trials"), py::arg("seed") = 1, py::arg("decoder") = py::none(),
      py::arg("prior_p") = 0.05, py::arg("threads") = 1);
  m.def(
      "exhaustive_distance",
      [](const StabilizerCode& code, std::size_t w_max, double max_candidates) {
        oracle::EnumerationBudget budget;
        budget.max_candidates = max_candidates;
        return exhaustive_distance(code, w_max, budget);
      },
      py::arg("code"), py::arg("w_max"), py::arg("max_candidates") = oracle::EnumerationBudget{}.max_candidates);
  m.def(
      "search_optimal",
      [](std::size_t b, std::size_t a_max, std::size_t trials, std::uint64_t seed,
         std::size_t screen_trials) -> std::optional<std::pair<std::size_t, DistanceReport>> {
        SearchOptions opts;
        opts.screen_trials = screen_trials;
        py::gil_scoped_release release;
        return search_optimal(b, a_max, trials, default_distance_decoder(), seed, opts);
      },
      py::arg("b"), py::arg("a_max"), py::arg("trials"), py::arg("seed") = 1, py::arg("screen_trials") = 200);
  m.def(
      "overhead_row",
      [](std::size_t d) {
        const OverheadRow r = overhead_row(d);
        return std::make_pair(r.xyz_n, r.xzzx_n);
      },
      py::arg("d"));

  py::class_<NoiseModel>(m, "NoiseModel")
      .def_static("depolarizing", &NoiseModel::depolarizing, py::arg("p"))
      .def_static("z_biased", &NoiseModel::z_biased, py::arg("p"), py::arg("eta"))
      .def_static("pure", &NoiseModel::pure, py::arg("sigma"), py::arg("p"))
      .def_readonly("p", &NoiseModel::p)
      .def_property_readonly("kind", &NoiseModel::kind_name)
      .def_property_readonly("eta", &NoiseModel::eta_value)
      .def("rates", [](const NoiseModel& n) {
        const ChannelRates r = channel_rates(n);
        return py::make_tuple(r.p_x, r.p_y, r.p_z);
      });

  py::class_<RateEstimate>(m, "RateEstimate")
      .def_readonly("params", &RateEstimate::params)
      .def_readonly("noise", &RateEstimate::noise)
      .def_readonly("trials", &RateEstimate::trials)
      .def_readonly("failures", &RateEstimate::failures)
      .def_readonly("infeasible", &RateEstimate::infeasible)
      .def_readonly("p_logical", &RateEstimate::p_logical)
      .def_readonly("stderr", &RateEstimate::stderr_)
      .def_readonly("seed", &RateEstimate::seed)
      .def("wilson", &RateEstimate::wilson, py::arg("z") = 1.96);

  m.def(
      "logical_error_rate",
      [](const XYZParams& params, const NoiseModel& noise, std::size_t trials, std::uint64_t seed,
         std::optional<DecoderConfig> cfg, std::size_t threads) {
        SimulationOptions opts;
        opts.threads = threads;
        py::gil_scoped_release release;
        return logical_error_rate(params, noise, trials, cfg.value_or(default_simulation_decoder()), seed, opts);
      },
      py::arg("params"), py::arg("noise"), py::arg("trials"), py::arg("seed") = 1, py::arg("decoder") = py::none(),
      py::arg("threads") = 1);
  m.def(
      "threshold_sweep",
      [](const std::vector<XYZParams>& codes, const NoiseModel& noise, const std::vector<double>& p_grid,
         std::size_t trials, std::uint64_t seed, std::optional<DecoderConfig> cfg, std::size_t threads) {
        SimulationOptions opts;
        opts.threads = threads;
        py::gil_scoped_release release;
        return threshold_sweep(codes, noise, p_grid, trials, cfg.value_or(default_simulation_decoder()), seed, opts);
      },
      py::arg("codes"), py::arg("noise"), py::arg("p_grid"), py::arg("trials"), py::arg("seed") = 1,
      py::arg("decoder") = py::none(), py::arg("threads") = 1);
  m.def(
      "sweep_csv",
      [](const std::vector<RateEstimate>& rows) {
        std::ostringstream os;
        write_sweep_csv(os, rows);
        return os.str();
      },
      py::arg("rows"));
}
