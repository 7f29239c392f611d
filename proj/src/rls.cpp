#include "lsekit/rls.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <sstream>

namespace lsekit::rls {

namespace {

std::string annotated(Index step, const char* what) {
    std::ostringstream os;
    os << "step " << step << ": " << what;
    return os.str();
}

} // namespace

void validate(const ForgettingConfig& cfg) {
    if (!(cfg.lambda > 0.0) || cfg.lambda > 1.0) {
        throw ConfigError("forgetting factor must lie in (0, 1]");
    }
    if (!(cfg.f0_scale > 0.0) || !std::isfinite(cfg.f0_scale)) {
        throw ConfigError("f0_scale must be a positive finite real");
    }
    if (!(cfg.denominator_floor > 0.0)) {
        throw ConfigError("denominator_floor must be positive");
    }
    if (cfg.theta0.size() > 0) {
        require_finite(cfg.theta0, "theta0");
    }
}

EstimatorState init(Index dim, const ForgettingConfig& cfg) {
    if (dim < 1) {
        throw ConfigError("estimator dimension must be positive");
    }
    validate(cfg);

    EstimatorState state;
    if (cfg.theta0.size() == 0) {
        state.theta_hat = Vector::Zero(dim);
    } else if (cfg.theta0.size() == dim) {
        state.theta_hat = cfg.theta0;
    } else {
        std::ostringstream os;
        os << "theta0 dimension " << cfg.theta0.size()
           << " does not match estimator dimension " << dim;
        throw ConfigError(os.str());
    }
    state.gain = Matrix::Identity(dim, dim) * cfg.f0_scale;
    return state;
}

double predict(const EstimatorState& state, const Vector& phi) {
    if (phi.size() != state.dim()) {
        std::ostringstream os;
        os << "regressor dimension " << phi.size()
           << " does not match estimator dimension " << state.dim();
        throw ShapeError(os.str());
    }
    require_finite(phi, "phi");
    return phi.dot(state.theta_hat);
}

EstimatorState step(const EstimatorState& state, const Sample& sample,
                    const ForgettingConfig& cfg) {
    validate(cfg);
    validate_sample(sample, state.dim());
    const Vector& phi = sample.regressor;

    const double prediction = phi.dot(state.theta_hat);
    const double innovation = sample.output - prediction;

    // Discounted rank-one inverse update. With the gain symmetric,
    // F phi phi^T F is the outer product of F phi with itself.
    const Vector gain_phi = state.gain * phi;
    const double denom = cfg.lambda + phi.dot(gain_phi);
    if (std::abs(denom) < cfg.denominator_floor) {
        std::ostringstream os;
        os << "gain update denominator " << denom << " below floor "
           << cfg.denominator_floor;
        throw SingularityError(os.str());
    }
    Matrix gain = symmetrize(
        (state.gain - (gain_phi * gain_phi.transpose()) / denom) / cfg.lambda);

    Eigen::LLT<Matrix> llt(gain);
    if (llt.info() != Eigen::Success) {
        throw NumericalError(
            "updated gain matrix is no longer positive definite");
    }

    EstimatorState next;
    next.theta_hat = state.theta_hat + gain * phi * innovation;
    next.gain = std::move(gain);
    next.step = state.step + 1;
    next.last_prediction = prediction;
    next.last_innovation = innovation;
    return next;
}

double gain_trace(const EstimatorState& state) { return state.gain.trace(); }

EstimatorState run_stream(Index dim, const ForgettingConfig& cfg,
                          const SampleSource& next_sample,
                          const RecordSink& sink) {
    EstimatorState state = init(dim, cfg);
    bool saw_sample = false;
    while (auto sample = next_sample()) {
        saw_sample = true;
        try {
            state = step(state, *sample, cfg);
        } catch (const SingularityError& e) {
            throw SingularityError(annotated(state.step + 1, e.what()));
        } catch (const NumericalError& e) {
            throw NumericalError(annotated(state.step + 1, e.what()));
        } catch (const ShapeError& e) {
            throw ShapeError(annotated(state.step + 1, e.what()));
        } catch (const DataError& e) {
            throw DataError(annotated(state.step + 1, e.what()));
        }
        if (sink) {
            sink(StepRecord{state.step, state.last_prediction,
                            state.last_innovation, state.theta_hat,
                            state.gain.trace()});
        }
    }
    if (!saw_sample) {
        throw EmptyInputError("sample stream produced no samples");
    }
    return state;
}

RunResult run(const Dataset& ds, const ForgettingConfig& cfg) {
    if (ds.empty()) {
        throw EmptyInputError("cannot run the estimator on an empty dataset");
    }
    RunResult result;
    result.records.reserve(static_cast<std::size_t>(ds.size()));
    Index i = 0;
    result.state = run_stream(
        ds.dim(), cfg,
        [&]() -> std::optional<Sample> {
            if (i >= ds.size()) {
                return std::nullopt;
            }
            return ds[i++];
        },
        [&](const StepRecord& rec) { result.records.push_back(rec); });
    return result;
}

} // namespace lsekit::rls
