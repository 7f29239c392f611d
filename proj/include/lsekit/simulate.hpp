#pragma once

#include <cstdint>
#include <vector>

#include "lsekit/dataset.hpp"
#include "lsekit/matrix.hpp"

namespace lsekit {

enum class ScenarioKind {
    spring,          // F = k * displacement
    lift,            // L = q S (CL0 + CLa * alpha), q = rho V^2 / 2
    generic_linear,  // y = phi^T theta, phi uniform
    drifting,        // generic regressors, time-varying theta
};

enum class DriftKind { sinusoidal, piecewise_constant };

/// Time-varying parameter schedule, evaluated at 1-based step j:
///   sinusoidal:         theta(j) = base + amplitude * sin(2 pi j / period)
///   piecewise_constant: theta(j) alternates base and base + amplitude,
///                       switching every `period` samples (first segment
///                       is base).
struct DriftSchedule {
    DriftKind kind = DriftKind::sinusoidal;
    Vector base;
    Vector amplitude;
    double period = 200.0;
};

Vector drift_theta_at(const DriftSchedule& schedule, Index step);

/// Lift-scenario constants; defaults are SI values recorded in the README.
struct LiftGeometry {
    double air_density = 1.225;  // kg/m^3
    double airspeed = 20.0;      // m/s
    double wing_area = 0.5;      // m^2
};

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::generic_linear;
    Vector true_theta;   // spring: [k]; lift: [CL0, CLa]; generic: any dim
    DriftSchedule drift; // drifting only
    Index num_samples = 100;
    double noise_std = 0.0;
    std::uint64_t seed = 0;
    double input_min = -1.0;  // excitation interval for drawn inputs
    double input_max = 1.0;
    LiftGeometry lift;
};

struct GeneratedStream {
    Dataset dataset;
    std::vector<Vector> true_theta_per_step;  // aligned 1:1 with samples
    ScenarioSpec spec;
};

/// Regressor dimension a spec will generate.
Index scenario_dim(const ScenarioSpec& spec);

/// Deterministic synthetic stream for a scenario. Identical specs (seed
/// included) give byte-identical streams; noise is additive Gaussian on the
/// output only.
GeneratedStream generate(const ScenarioSpec& spec);

} // namespace lsekit
