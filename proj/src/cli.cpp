#include "lsekit/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>

#include "lsekit/batch.hpp"
#include "lsekit/csv.hpp"
#include "lsekit/simulate.hpp"

namespace lsekit::cli {

namespace {

using nlohmann::json;

struct GenerateArgs {
    std::string scenario;
    long num_samples = 100;
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string truth_path;
    std::vector<double> range{-1.0, 1.0};
    double spring_k = 2.0;
    double cl0 = 0.3;
    double cla = 5.0;
    double rho = 1.225;
    double airspeed = 20.0;
    double wing_area = 0.5;
    std::vector<double> theta{1.0};
    std::vector<double> amplitude;
    double period = 200.0;
    std::string drift = "sin";
};

struct FitArgs {
    std::string input;
    std::string mode;
    double rcond = -1.0;  // negative: use the default cutoff
    double lambda = 1.0;
    double f0_scale = 1e6;
    std::vector<double> theta0;
    std::string trace_path;
};

struct EvalArgs {
    std::string trace_path;
    std::string truth_path;
    long window = 100;
};

std::string default_truth_path(const std::string& out_path) {
    std::filesystem::path p(out_path);
    const auto ext = p.extension();
    p.replace_extension();
    p += "_truth";
    p += ext.empty() ? std::filesystem::path(".csv") : ext;
    return p.string();
}

ScenarioSpec build_spec(const GenerateArgs& a) {
    ScenarioSpec spec;
    spec.num_samples = a.num_samples;
    spec.noise_std = a.noise;
    spec.seed = a.seed;
    spec.input_min = a.range.at(0);
    spec.input_max = a.range.at(1);

    if (a.scenario == "spring") {
        spec.kind = ScenarioKind::spring;
        spec.true_theta = make_vector(std::span<const double>(&a.spring_k, 1));
    } else if (a.scenario == "lift") {
        spec.kind = ScenarioKind::lift;
        const double coeffs[] = {a.cl0, a.cla};
        spec.true_theta = make_vector(coeffs);
        spec.lift = LiftGeometry{a.rho, a.airspeed, a.wing_area};
    } else if (a.scenario == "generic-linear") {
        spec.kind = ScenarioKind::generic_linear;
        spec.true_theta = make_vector(a.theta);
    } else {
        spec.kind = ScenarioKind::drifting;
        spec.drift.base = make_vector(a.theta);
        if (a.amplitude.empty()) {
            spec.drift.amplitude =
                Vector::Constant(spec.drift.base.size(), 0.5);
        } else {
            spec.drift.amplitude = make_vector(a.amplitude);
        }
        spec.drift.period = a.period;
        spec.drift.kind = a.drift == "step" ? DriftKind::piecewise_constant
                                            : DriftKind::sinusoidal;
    }
    return spec;
}

void cmd_generate(const GenerateArgs& args) {
    const auto stream = generate(build_spec(args));
    write_samples_csv(std::filesystem::path(args.out_path), stream.dataset);
    const std::string truth =
        args.truth_path.empty() ? default_truth_path(args.out_path) : args.truth_path;
    write_truth_csv(std::filesystem::path(truth), stream.true_theta_per_step);
}

json to_json(const FitReport& report) {
    json j;
    j["theta_hat"] = report.theta_hat;
    j["residual_cost"] = report.residual_cost;
    j["num_samples"] = report.num_samples;
    j["mode"] = report.mode;
    j["lambda"] = report.lambda;
    j["f0_scale"] = report.f0_scale;
    if (report.rank) {
        j["rank"] = *report.rank;
    }
    if (report.final_gain_trace) {
        j["final_gain_trace"] = *report.final_gain_trace;
    }
    return j;
}

FitReport fit_batch(const FitArgs& args) {
    const Dataset ds = read_samples_csv(args.input);
    const BatchSolution sol = args.rcond < 0.0 ? solve_batch(ds)
                                               : solve_batch(ds, args.rcond);
    FitReport report;
    report.theta_hat.assign(sol.theta_hat.begin(), sol.theta_hat.end());
    report.residual_cost = sol.residual_cost;
    report.num_samples = static_cast<long>(ds.size());
    report.mode = "batch";
    report.rank = static_cast<long>(sol.rank);
    return report;
}

FitReport fit_recursive(const FitArgs& args) {
    rls::ForgettingConfig cfg;
    cfg.lambda = args.lambda;
    cfg.f0_scale = args.f0_scale;
    if (!args.theta0.empty()) {
        cfg.theta0 = make_vector(args.theta0);
    }
    rls::validate(cfg);

    // First streaming pass: fold the estimator over the file row by row,
    // optionally mirroring each step into the trace file.
    CsvSampleReader reader(std::filesystem::path(args.input));
    std::ofstream trace;
    if (!args.trace_path.empty()) {
        trace.open(args.trace_path);
        if (!trace) {
            throw IoError("cannot open " + args.trace_path + " for writing");
        }
        write_trace_header(trace, reader.dim());
    }
    rls::RecordSink sink;
    if (trace.is_open()) {
        sink = [&trace](const rls::StepRecord& rec) {
            write_trace_record(trace, rec);
        };
    }
    long steps = 0;
    const rls::EstimatorState state = rls::run_stream(
        reader.dim(), cfg,
        [&reader, &steps]() {
            auto s = reader.next();
            if (s) {
                ++steps;
            }
            return s;
        },
        sink);
    if (trace.is_open()) {
        trace.flush();
        if (!trace) {
            throw IoError("failed writing " + args.trace_path);
        }
    }

    // Second streaming pass for the discounted residual cost of the final
    // estimate: S_k = lambda * S_{k-1} + r_k^2 gives sum of lambda^(k-j) r_j^2.
    CsvSampleReader second(std::filesystem::path(args.input));
    double weighted_sq = 0.0;
    while (auto s = second.next()) {
        const double r = s->output - s->regressor.dot(state.theta_hat);
        weighted_sq = cfg.lambda * weighted_sq + r * r;
    }

    FitReport report;
    report.theta_hat.assign(state.theta_hat.begin(), state.theta_hat.end());
    report.residual_cost = 0.5 * weighted_sq;
    report.num_samples = steps;
    report.mode = "recursive";
    report.lambda = cfg.lambda;
    report.f0_scale = cfg.f0_scale;
    report.final_gain_trace = rls::gain_trace(state);
    return report;
}

void cmd_fit(const FitArgs& args, std::ostream& out) {
    const FitReport report =
        args.mode == "batch" ? fit_batch(args) : fit_recursive(args);
    out << to_json(report).dump() << "\n";
}

void cmd_eval(const EvalArgs& args, std::ostream& out) {
    const auto trace = read_trace_csv(args.trace_path);
    const auto truth = read_truth_csv(args.truth_path);
    if (trace.size() != truth.size()) {
        throw DataError("trace has " + std::to_string(trace.size()) +
                        " steps but ground truth has " +
                        std::to_string(truth.size()));
    }
    if (trace.empty()) {
        throw EmptyInputError("trace holds no steps");
    }
    const Index dim = trace.front().theta_hat.size();
    if (truth.front().size() != dim) {
        throw DataError("trace dimension " + std::to_string(dim) +
                        " does not match ground-truth dimension " +
                        std::to_string(truth.front().size()));
    }

    const long k = static_cast<long>(trace.size());
    const long window = std::min<long>(args.window, k);

    // Windows are aligned to the end of the run so the final window always
    // spans the last `window` steps; the earliest window may be short.
    struct Window {
        long first, last;
        double rmse;
    };
    std::vector<Window> windows;
    double total_sq = 0.0;
    for (long last = k; last > 0; last -= window) {
        const long first = std::max<long>(1, last - window + 1);
        double sq = 0.0;
        for (long j = first; j <= last; ++j) {
            const auto idx = static_cast<std::size_t>(j - 1);
            sq += (trace[idx].theta_hat - truth[idx]).squaredNorm();
        }
        total_sq += sq;
        const double denom = static_cast<double>((last - first + 1) * dim);
        windows.push_back({first, last, std::sqrt(sq / denom)});
    }

    json j;
    j["dim"] = dim;
    j["num_steps"] = k;
    j["window_size"] = window;
    j["overall_rmse"] = std::sqrt(total_sq / static_cast<double>(k * dim));
    j["final_window_rmse"] = windows.front().rmse;
    json::array_t out_windows;
    for (auto it = windows.rbegin(); it != windows.rend(); ++it) {
        json w;
        w["first_step"] = it->first;
        w["last_step"] = it->last;
        w["rmse"] = it->rmse;
        out_windows.push_back(std::move(w));
    }
    j["windows"] = std::move(out_windows);
    out << j.dump() << "\n";
}

} // namespace

std::string report_to_json(const FitReport& report) {
    return to_json(report).dump();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Streaming linear least-squares estimation toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate_cmd =
        app.add_subcommand("generate", "Write a synthetic sample stream and "
                                       "its ground-truth parameters as CSV");
    generate_cmd
        ->add_option("--scenario", gen.scenario, "Scenario kind")
        ->required()
        ->check(CLI::IsMember({"spring", "lift", "generic-linear", "drifting"}));
    generate_cmd->add_option("--n", gen.num_samples, "Number of samples")
        ->capture_default_str();
    generate_cmd->add_option("--noise", gen.noise, "Output noise std dev")
        ->capture_default_str();
    generate_cmd->add_option("--seed", gen.seed, "RNG seed")
        ->capture_default_str();
    generate_cmd->add_option("--out", gen.out_path, "Samples CSV path")
        ->required();
    generate_cmd->add_option("--truth-out", gen.truth_path,
                             "Ground-truth CSV path (default: <out>_truth.csv)");
    generate_cmd
        ->add_option("--range", gen.range, "Input excitation interval LO HI")
        ->expected(2);
    generate_cmd->add_option("--k", gen.spring_k, "Spring constant (spring)")
        ->capture_default_str();
    generate_cmd->add_option("--cl0", gen.cl0, "Zero-alpha lift coefficient (lift)")
        ->capture_default_str();
    generate_cmd->add_option("--cla", gen.cla, "Lift-curve slope (lift)")
        ->capture_default_str();
    generate_cmd->add_option("--rho", gen.rho, "Air density (lift)")
        ->capture_default_str();
    generate_cmd->add_option("--airspeed", gen.airspeed, "Airspeed (lift)")
        ->capture_default_str();
    generate_cmd->add_option("--wing-area", gen.wing_area, "Wing area (lift)")
        ->capture_default_str();
    generate_cmd
        ->add_option("--theta", gen.theta,
                     "True parameters (generic-linear) or drift base (drifting)")
        ->delimiter(',');
    generate_cmd
        ->add_option("--amplitude", gen.amplitude,
                     "Drift amplitude per component (default 0.5 each)")
        ->delimiter(',');
    generate_cmd->add_option("--period", gen.period, "Drift period in samples")
        ->capture_default_str();
    generate_cmd->add_option("--drift", gen.drift, "Drift schedule")
        ->check(CLI::IsMember({"sin", "step"}))
        ->capture_default_str();

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand(
        "fit", "Fit parameters to a samples CSV and print a JSON report");
    fit_cmd->add_option("--input", fit.input, "Samples CSV path")->required();
    fit_cmd->add_option("--mode", fit.mode, "Estimator mode")
        ->required()
        ->check(CLI::IsMember({"batch", "recursive"}));
    fit_cmd->add_option("--rcond", fit.rcond,
                        "Singular-value cutoff for the batch pseudo-inverse "
                        "(default: machine epsilon times the dimension)");
    fit_cmd->add_option("--lambda", fit.lambda, "Forgetting factor (recursive)")
        ->capture_default_str();
    fit_cmd->add_option("--f0-scale", fit.f0_scale,
                        "Initial gain scale alpha, F(0) = alpha I (recursive)")
        ->capture_default_str();
    fit_cmd
        ->add_option("--theta0", fit.theta0,
                     "Initial parameter guess (recursive, default zeros)")
        ->delimiter(',');
    fit_cmd->add_option("--trace", fit.trace_path,
                        "Write a per-step trace CSV (recursive)");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand(
        "eval", "Score a trace CSV against ground truth, printing JSON RMSE");
    eval_cmd->add_option("--trace", eval.trace_path, "Trace CSV path")
        ->required();
    eval_cmd->add_option("--truth", eval.truth_path, "Ground-truth CSV path")
        ->required();
    eval_cmd->add_option("--window", eval.window, "RMSE window size in steps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("lsekit");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (generate_cmd->parsed()) {
            cmd_generate(gen);
        } else if (fit_cmd->parsed()) {
            if (fit.rcond < 0.0 && fit_cmd->count("--rcond") > 0) {
                throw ConfigError("rcond must be a nonnegative real");
            }
            cmd_fit(fit, out);
        } else if (eval_cmd->parsed()) {
            cmd_eval(eval, out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

} // namespace lsekit::cli
