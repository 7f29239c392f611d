#include "lsekit/simulate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lsekit/random.hpp"

namespace lsekit {

namespace {

void validate_spec(const ScenarioSpec& spec) {
    if (spec.num_samples < 1) {
        throw ConfigError("num_samples must be at least 1");
    }
    if (!(spec.noise_std >= 0.0) || !std::isfinite(spec.noise_std)) {
        throw ConfigError("noise_std must be a nonnegative finite real");
    }
    if (!(spec.input_min < spec.input_max)) {
        throw ConfigError("input range must be non-degenerate (min < max)");
    }
    switch (spec.kind) {
    case ScenarioKind::spring:
        if (spec.true_theta.size() != 1) {
            throw ConfigError("spring scenario takes a single parameter [k]");
        }
        break;
    case ScenarioKind::lift:
        if (spec.true_theta.size() != 2) {
            throw ConfigError("lift scenario takes parameters [CL0, CLa]");
        }
        if (!(spec.lift.air_density > 0.0) || !(spec.lift.wing_area > 0.0)) {
            throw ConfigError("lift geometry must have positive density and area");
        }
        break;
    case ScenarioKind::generic_linear:
        if (spec.true_theta.size() < 1) {
            throw ConfigError("generic-linear scenario needs a parameter vector");
        }
        break;
    case ScenarioKind::drifting:
        if (spec.drift.base.size() < 1) {
            throw ConfigError("drifting scenario needs a base parameter vector");
        }
        if (spec.drift.amplitude.size() != spec.drift.base.size()) {
            throw ConfigError("drift amplitude must match the base dimension");
        }
        if (!(spec.drift.period > 0.0)) {
            throw ConfigError("drift period must be positive");
        }
        break;
    }
    if (spec.true_theta.size() > 0) {
        require_finite(spec.true_theta, "true_theta");
    }
    if (spec.drift.base.size() > 0) {
        require_finite(spec.drift.base, "drift base");
        require_finite(spec.drift.amplitude, "drift amplitude");
    }
}

} // namespace

Vector drift_theta_at(const DriftSchedule& schedule, Index step) {
    if (schedule.kind == DriftKind::sinusoidal) {
        const double phase =
            2.0 * std::numbers::pi * static_cast<double>(step) / schedule.period;
        return schedule.base + schedule.amplitude * std::sin(phase);
    }
    const auto segment = static_cast<long long>(
        std::floor(static_cast<double>(step - 1) / schedule.period));
    return (segment % 2 == 1) ? Vector(schedule.base + schedule.amplitude)
                              : schedule.base;
}

Index scenario_dim(const ScenarioSpec& spec) {
    switch (spec.kind) {
    case ScenarioKind::spring:
        return 1;
    case ScenarioKind::lift:
        return 2;
    case ScenarioKind::generic_linear:
        return spec.true_theta.size();
    case ScenarioKind::drifting:
        return spec.drift.base.size();
    }
    throw ConfigError("unknown scenario kind");
}

GeneratedStream generate(const ScenarioSpec& spec) {
    validate_spec(spec);
    const Index dim = scenario_dim(spec);

    Prng rng(spec.seed);
    GeneratedStream out{Dataset(dim), {}, spec};
    out.true_theta_per_step.reserve(static_cast<std::size_t>(spec.num_samples));

    const double q_area = 0.5 * spec.lift.air_density * spec.lift.airspeed *
                          spec.lift.airspeed * spec.lift.wing_area;

    for (Index j = 1; j <= spec.num_samples; ++j) {
        Vector phi(dim);
        Vector theta;
        switch (spec.kind) {
        case ScenarioKind::spring:
            phi(0) = rng.uniform(spec.input_min, spec.input_max);
            theta = spec.true_theta;
            break;
        case ScenarioKind::lift: {
            const double alpha = rng.uniform(spec.input_min, spec.input_max);
            phi(0) = q_area;
            phi(1) = q_area * alpha;
            theta = spec.true_theta;
            break;
        }
        case ScenarioKind::generic_linear:
            for (Index i = 0; i < dim; ++i) {
                phi(i) = rng.uniform(spec.input_min, spec.input_max);
            }
            theta = spec.true_theta;
            break;
        case ScenarioKind::drifting:
            for (Index i = 0; i < dim; ++i) {
                phi(i) = rng.uniform(spec.input_min, spec.input_max);
            }
            theta = drift_theta_at(spec.drift, j);
            break;
        }

        double y = phi.dot(theta);
        if (spec.noise_std > 0.0) {
            y += spec.noise_std * rng.normal();
        }
        out.dataset.append(std::move(phi), y);
        out.true_theta_per_step.push_back(std::move(theta));
    }
    return out;
}

} // namespace lsekit
