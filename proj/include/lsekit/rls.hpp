#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lsekit/dataset.hpp"
#include "lsekit/matrix.hpp"

namespace lsekit::rls {

/// Estimator parameters: forgetting factor, initial gain scale alpha
/// (F(0) = alpha * I), initial parameter guess and the denominator guard.
/// An empty theta0 stands for the all-zeros default.
struct ForgettingConfig {
    double lambda = 1.0;
    double f0_scale = 1e6;
    Vector theta0{};
    double denominator_floor = 1e-12;
};

/// Throws ConfigError when a field is out of range.
void validate(const ForgettingConfig& cfg);

/// Immutable per-step snapshot of the estimator.
struct EstimatorState {
    Vector theta_hat;
    Matrix gain;              // symmetric positive definite, n x n
    Index step = 0;
    double last_prediction = 0.0;
    double last_innovation = 0.0;

    Index dim() const { return theta_hat.size(); }
};

struct StepRecord {
    Index step = 0;
    double prediction = 0.0;
    double innovation = 0.0;
    Vector theta_hat;
    double gain_trace = 0.0;
};

EstimatorState init(Index dim, const ForgettingConfig& cfg = {});

/// A-priori prediction phi^T theta_hat; does not advance the state.
double predict(const EstimatorState& state, const Vector& phi);

/// One estimator transition: predict, form the innovation, update the gain
/// (discounted rank-one inverse update, then symmetrized) and correct the
/// parameters with the fresh gain. The input state is left untouched.
EstimatorState step(const EstimatorState& state, const Sample& sample,
                    const ForgettingConfig& cfg);

/// tr F(k); shrinks as samples accumulate with lambda = 1, which is the
/// diagnostic for the estimator ceasing to adapt.
double gain_trace(const EstimatorState& state);

using SampleSource = std::function<std::optional<Sample>()>;
using RecordSink = std::function<void(const StepRecord&)>;

/// Folds `step` over a pull-based source, holding only the current sample
/// and the n x n state. Errors are rethrown with the failing step index.
EstimatorState run_stream(Index dim, const ForgettingConfig& cfg,
                          const SampleSource& next_sample,
                          const RecordSink& sink = {});

struct RunResult {
    EstimatorState state;
    std::vector<StepRecord> records;
};

/// Fold over a materialized dataset, collecting one record per step.
RunResult run(const Dataset& ds, const ForgettingConfig& cfg = {});

} // namespace lsekit::rls
