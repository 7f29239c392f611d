#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

#include "lsekit/batch.hpp"
#include "lsekit/cli.hpp"
#include "lsekit/csv.hpp"
#include "lsekit/rls.hpp"
#include "lsekit/simulate.hpp"

namespace py = pybind11;
using namespace lsekit;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

Dataset dataset_from_arrays(const Matrix& regressors, const Vector& outputs) {
    if (regressors.rows() != outputs.size()) {
        throw ShapeError("regressors must have one row per output");
    }
    if (regressors.rows() < 1) {
        throw EmptyInputError("need at least one sample");
    }
    Dataset ds(regressors.cols());
    for (Index i = 0; i < regressors.rows(); ++i) {
        ds.append(regressors.row(i).transpose(), outputs(i));
    }
    return ds;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Streaming linear least-squares estimation toolkit: batch and "
              "recursive estimators over a dense linear-algebra core.";

    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<EmptyInputError>(m, "EmptyInputError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<SingularityError>(m, "SingularityError",
                                             PyExc_RuntimeError);
    py::register_exception<NumericalError>(m, "NumericalError",
                                           PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    // matrix core
    m.def("pseudo_inverse",
          [](const Matrix& mat, std::optional<double> rcond) {
              return rcond ? pseudo_inverse(mat, *rcond) : pseudo_inverse(mat);
          },
          py::arg("m"), py::arg("rcond") = std::nullopt,
          "Moore-Penrose pseudo-inverse via SVD with singular-value cutoff "
          "rcond * sigma_max (default: machine epsilon * max(rows, cols)).");
    m.def("woodbury_inverse", &woodbury_inverse, py::arg("a_inv"), py::arg("u"),
          py::arg("c"), py::arg("v"),
          "(A + U C V)^-1 from a known A^-1, inverting only m x m systems.");
    m.def("sherman_morrison_update", &sherman_morrison_update, py::arg("a_inv"),
          py::arg("u"), py::arg("v"), py::arg("floor") = 1e-12,
          "(A + u v^T)^-1 from a known A^-1 in O(n^2).");
    m.def("symmetrize", &symmetrize, py::arg("m"),
          "(M + M^T) / 2, exactly symmetric.");

    // data model
    py::class_<Sample>(m, "Sample")
        .def(py::init([](const Vector& regressor, double output) {
                 return Sample{regressor, output};
             }),
             py::arg("regressor"), py::arg("output"))
        .def_readonly("regressor", &Sample::regressor)
        .def_readonly("output", &Sample::output);

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<Index>(), py::arg("dim"))
        .def("append",
             [](Dataset& ds, const Vector& regressor, double output) {
                 ds.append(regressor, output);
             },
             py::arg("regressor"), py::arg("output"))
        .def_property_readonly("dim", &Dataset::dim)
        .def("__len__", &Dataset::size)
        .def("__getitem__",
             [](const Dataset& ds, Index i) {
                 if (i < 0 || i >= ds.size()) {
                     throw py::index_error();
                 }
                 return ds[i];
             });

    m.def("dataset_from_arrays", &dataset_from_arrays, py::arg("regressors"),
          py::arg("outputs"),
          "Build a Dataset from a (k, n) regressor matrix and length-k outputs.");

    // batch estimation
    py::class_<BatchSolution>(m, "BatchSolution")
        .def_readonly("theta_hat", &BatchSolution::theta_hat)
        .def_readonly("residual_cost", &BatchSolution::residual_cost)
        .def_readonly("rank", &BatchSolution::rank)
        .def_readonly("used_pseudo_inverse", &BatchSolution::used_pseudo_inverse)
        .def("__repr__", [](const BatchSolution& s) {
            return "<BatchSolution rank=" + std::to_string(s.rank) +
                   " residual_cost=" + std::to_string(s.residual_cost) + ">";
        });

    m.def("assemble",
          [](const Dataset& ds) {
              auto sys = assemble(ds);
              return py::make_tuple(sys.phi, sys.outputs);
          },
          py::arg("dataset"),
          "Stack a dataset into (Phi, Y): Phi is n x k with one column per "
          "sample, Y has dimension k.");
    m.def("solve_batch",
          [](const Dataset& ds, std::optional<double> rcond) {
              return rcond ? solve_batch(ds, *rcond) : solve_batch(ds);
          },
          py::arg("dataset"), py::arg("rcond") = std::nullopt,
          "One-shot least-squares solve; rank-deficient systems return the "
          "minimum-norm solution.");
    m.def("cost", &cost, py::arg("dataset"), py::arg("theta"),
          py::arg("forgetting_factor") = 1.0,
          "Half sum of squared residuals; sample j of k carries weight "
          "forgetting_factor^(k-j).");

    // recursive estimation
    py::class_<rls::ForgettingConfig>(m, "ForgettingConfig")
        .def(py::init([](double forgetting_factor, double f0_scale,
                         std::optional<Vector> theta0,
                         double denominator_floor) {
                 rls::ForgettingConfig cfg;
                 cfg.lambda = forgetting_factor;
                 cfg.f0_scale = f0_scale;
                 if (theta0) {
                     cfg.theta0 = *theta0;
                 }
                 cfg.denominator_floor = denominator_floor;
                 rls::validate(cfg);
                 return cfg;
             }),
             py::arg("forgetting_factor") = 1.0, py::arg("f0_scale") = 1e6,
             py::arg("theta0") = std::nullopt,
             py::arg("denominator_floor") = 1e-12)
        .def_property_readonly(
            "forgetting_factor",
            [](const rls::ForgettingConfig& c) { return c.lambda; })
        .def_readonly("f0_scale", &rls::ForgettingConfig::f0_scale)
        .def_readonly("theta0", &rls::ForgettingConfig::theta0)
        .def_readonly("denominator_floor",
                      &rls::ForgettingConfig::denominator_floor);

    py::class_<rls::EstimatorState>(m, "EstimatorState")
        .def_readonly("theta_hat", &rls::EstimatorState::theta_hat)
        .def_readonly("gain", &rls::EstimatorState::gain)
        .def_readonly("step", &rls::EstimatorState::step)
        .def_readonly("last_prediction", &rls::EstimatorState::last_prediction)
        .def_readonly("last_innovation", &rls::EstimatorState::last_innovation)
        .def_property_readonly("dim", &rls::EstimatorState::dim)
        .def("__repr__", [](const rls::EstimatorState& s) {
            return "<EstimatorState step=" + std::to_string(s.step) +
                   " dim=" + std::to_string(s.dim()) + ">";
        });

    py::class_<rls::StepRecord>(m, "StepRecord")
        .def_readonly("step", &rls::StepRecord::step)
        .def_readonly("prediction", &rls::StepRecord::prediction)
        .def_readonly("innovation", &rls::StepRecord::innovation)
        .def_readonly("theta_hat", &rls::StepRecord::theta_hat)
        .def_readonly("gain_trace", &rls::StepRecord::gain_trace);

    m.def("rls_init", &rls::init, py::arg("dim"),
          py::arg("config") = rls::ForgettingConfig{},
          "Fresh estimator state: gain = f0_scale * I, theta_hat = theta0.");
    m.def("rls_predict", &rls::predict, py::arg("state"), py::arg("phi"),
          "A-priori prediction phi^T theta_hat; the state is not advanced.");
    m.def("rls_step",
          [](const rls::EstimatorState& state, const Vector& phi, double output,
             const rls::ForgettingConfig& cfg) {
              return rls::step(state, Sample{phi, output}, cfg);
          },
          py::arg("state"), py::arg("phi"), py::arg("output"),
          py::arg("config") = rls::ForgettingConfig{},
          "One recursive update; returns the successor state.");
    m.def("gain_trace", &rls::gain_trace, py::arg("state"),
          "tr F(k), the adaptation-headroom diagnostic.");
    m.def("rls_run",
          [](const Dataset& ds, const rls::ForgettingConfig& cfg) {
              auto result = rls::run(ds, cfg);
              return py::make_tuple(result.state, result.records);
          },
          py::arg("dataset"), py::arg("config") = rls::ForgettingConfig{},
          "Fold the estimator over a dataset; returns (final_state, records).");

    // synthetic scenarios
    py::enum_<ScenarioKind>(m, "ScenarioKind")
        .value("spring", ScenarioKind::spring)
        .value("lift", ScenarioKind::lift)
        .value("generic_linear", ScenarioKind::generic_linear)
        .value("drifting", ScenarioKind::drifting);

    py::enum_<DriftKind>(m, "DriftKind")
        .value("sinusoidal", DriftKind::sinusoidal)
        .value("piecewise_constant", DriftKind::piecewise_constant);

    py::class_<DriftSchedule>(m, "DriftSchedule")
        .def(py::init([](DriftKind kind, const Vector& base,
                         const Vector& amplitude, double period) {
                 return DriftSchedule{kind, base, amplitude, period};
             }),
             py::arg("kind") = DriftKind::sinusoidal,
             py::arg("base") = Vector{}, py::arg("amplitude") = Vector{},
             py::arg("period") = 200.0)
        .def_readonly("kind", &DriftSchedule::kind)
        .def_readonly("base", &DriftSchedule::base)
        .def_readonly("amplitude", &DriftSchedule::amplitude)
        .def_readonly("period", &DriftSchedule::period);

    py::class_<LiftGeometry>(m, "LiftGeometry")
        .def(py::init([](double air_density, double airspeed, double wing_area) {
                 return LiftGeometry{air_density, airspeed, wing_area};
             }),
             py::arg("air_density") = 1.225, py::arg("airspeed") = 20.0,
             py::arg("wing_area") = 0.5)
        .def_readonly("air_density", &LiftGeometry::air_density)
        .def_readonly("airspeed", &LiftGeometry::airspeed)
        .def_readonly("wing_area", &LiftGeometry::wing_area);

    py::class_<ScenarioSpec>(m, "ScenarioSpec")
        .def(py::init([](ScenarioKind kind, std::optional<Vector> true_theta,
                         std::optional<DriftSchedule> drift, Index num_samples,
                         double noise_std, std::uint64_t seed, double input_min,
                         double input_max, std::optional<LiftGeometry> lift) {
                 ScenarioSpec spec;
                 spec.kind = kind;
                 if (true_theta) {
                     spec.true_theta = *true_theta;
                 }
                 if (drift) {
                     spec.drift = *drift;
                 }
                 spec.num_samples = num_samples;
                 spec.noise_std = noise_std;
                 spec.seed = seed;
                 spec.input_min = input_min;
                 spec.input_max = input_max;
                 if (lift) {
                     spec.lift = *lift;
                 }
                 return spec;
             }),
             py::arg("kind") = ScenarioKind::generic_linear,
             py::arg("true_theta") = std::nullopt,
             py::arg("drift") = std::nullopt, py::arg("num_samples") = 100,
             py::arg("noise_std") = 0.0, py::arg("seed") = 0,
             py::arg("input_min") = -1.0, py::arg("input_max") = 1.0,
             py::arg("lift") = std::nullopt)
        .def_readonly("kind", &ScenarioSpec::kind)
        .def_readonly("true_theta", &ScenarioSpec::true_theta)
        .def_readonly("drift", &ScenarioSpec::drift)
        .def_readonly("num_samples", &ScenarioSpec::num_samples)
        .def_readonly("noise_std", &ScenarioSpec::noise_std)
        .def_readonly("seed", &ScenarioSpec::seed)
        .def_readonly("input_min", &ScenarioSpec::input_min)
        .def_readonly("input_max", &ScenarioSpec::input_max)
        .def_readonly("lift", &ScenarioSpec::lift);

    py::class_<GeneratedStream>(m, "GeneratedStream")
        .def_readonly("dataset", &GeneratedStream::dataset)
        .def_readonly("true_theta_per_step", &GeneratedStream::true_theta_per_step)
        .def_readonly("spec", &GeneratedStream::spec);

    m.def("generate", &generate, py::arg("spec"),
          "Deterministic synthetic stream for a scenario spec.");

    // CSV interchange
    m.def("write_samples_csv",
          [](const std::filesystem::path& path, const Dataset& ds) {
              write_samples_csv(path, ds);
          },
          py::arg("path"), py::arg("dataset"));
    m.def("read_samples_csv", &read_samples_csv, py::arg("path"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
