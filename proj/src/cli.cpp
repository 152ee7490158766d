// Copyright 2026 The sbovqa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sbovqa/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbovqa/io.hpp"
#include "sbovqa/scaling.hpp"
#include "sbovqa/serialize.hpp"
#include "sbovqa/trace.hpp"

namespace sbovqa {

namespace {

namespace fs = std::filesystem;

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> optimizer;
    std::optional<long long> shots;
    std::optional<int> tau;
    std::optional<double> patch_size;
    std::optional<int> iters;
    std::optional<int> runs;
    std::string out_dir = "sbovqa_out";
};

std::string vector_text(const Eigen::VectorXd &v) {
    std::string text = "[";
    for (Eigen::Index d = 0; d < v.size(); ++d) {
        if (d > 0) {
            text += ", ";
        }
        text += format_double(v[d]);
    }
    return text + "]";
}

nlohmann::json vector_json(const Eigen::VectorXd &v) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index d = 0; d < v.size(); ++d) {
        arr.push_back(v[d]);
    }
    return arr;
}

void write_output(const fs::path &path, const std::string &content,
                  std::ostream &out) {
    atomic_write_file(path, content);
    out << "wrote " << path.string() << "\n";
}

void warn_unused(const ConfigFile &cfg, std::ostream &err) {
    const auto unused = cfg.unused_keys();
    if (!unused.empty()) {
        err << "note: unused config keys:";
        for (const auto &key : unused) {
            err << " " << key;
        }
        err << "\n";
    }
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> items;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin != std::string::npos) {
            items.push_back(item.substr(begin, end - begin + 1));
        }
    }
    return items;
}

} // namespace

Problem problem_from_config(const ConfigFile &cfg) {
    ConfigErrors errors(cfg);
    const std::string kind = cfg.get_string("problem.kind", "qaoa");
    const int max_qubits = static_cast<int>(
        cfg.get_int("problem.max_qubits", kDefaultMaxQubits));

    if (kind == "qaoa") {
        const int p = static_cast<int>(cfg.get_int("problem.p", 1));
        if (p < 1) {
            errors.add("problem.p", "must be >= 1");
        }
        const std::string source = cfg.get_string("problem.graph", "er");
        Graph graph;
        if (source == "file") {
            if (!cfg.has("problem.graph_file")) {
                errors.add("problem.graph", "graph = file needs graph_file");
                errors.throw_if_any();
            }
            graph = load_graph(cfg.get_string("problem.graph_file"));
        } else {
            const int n = static_cast<int>(cfg.get_int("problem.n", 4));
            const auto graph_seed = static_cast<std::uint64_t>(
                cfg.get_int("problem.graph_seed", 1));
            RngStream rng(graph_seed, 0x9a);
            if (n < 2) {
                errors.add("problem.n", "must be >= 2");
                errors.throw_if_any();
            }
            if (source == "er") {
                const double edge_prob =
                    cfg.get_double("problem.edge_prob", 0.5);
                if (!(edge_prob > 0.0) || edge_prob > 1.0) {
                    errors.add("problem.edge_prob", "must be in (0, 1]");
                    errors.throw_if_any();
                }
                graph = random_connected_graph(n, edge_prob, rng);
            } else if (source == "regular") {
                const int kappa =
                    static_cast<int>(cfg.get_int("problem.kappa", 3));
                if (kappa < 1 || kappa >= n ||
                    (static_cast<long long>(n) * kappa) % 2 != 0) {
                    errors.add("problem.kappa",
                               "needs 1 <= kappa < n and even n * kappa");
                    errors.throw_if_any();
                }
                graph = random_regular_graph(n, kappa, rng);
            } else {
                errors.add("problem.graph", "must be er, regular, or file");
                errors.throw_if_any();
            }
        }
        errors.throw_if_any();
        return Problem::qaoa(std::move(graph), p, max_qubits);
    }

    if (kind == "hardware_efficient") {
        const int n = static_cast<int>(cfg.get_int("problem.n", 4));
        const int layers = static_cast<int>(cfg.get_int("problem.layers", 1));
        if (n < 1) {
            errors.add("problem.n", "must be >= 1");
        }
        if (layers < 1) {
            errors.add("problem.layers", "must be >= 1");
        }
        if (!cfg.has("problem.observable_file")) {
            errors.add("problem.kind",
                       "hardware_efficient needs problem.observable_file");
        }
        errors.throw_if_any();
        Observable obs =
            load_observable(cfg.get_string("problem.observable_file"));
        if (obs.num_qubits != n) {
            errors.add("problem.observable_file",
                       "observable qubit count differs from problem.n");
        }
        errors.throw_if_any();
        return Problem::hardware_efficient(n, layers, std::move(obs),
                                           max_qubits);
    }

    errors.add("problem.kind", "must be qaoa or hardware_efficient");
    errors.throw_if_any();
    throw std::logic_error("unreachable");
}

SboConfig sbo_config_from(const ConfigFile &cfg) {
    SboConfig sbo;
    sbo.patch_size = cfg.get_double("sbo.patch_size", 0.2);
    sbo.tau = static_cast<int>(cfg.get_int("sbo.tau", 20));
    sbo.eps_initial = cfg.get_double("sbo.eps_initial", 0.0);
    sbo.eps_interior = cfg.get_double("sbo.eps_interior", -1.0);
    sbo.eps_final = cfg.get_double("sbo.eps_final", -1.0);
    sbo.fixed_bandwidth = cfg.get_double("sbo.bandwidth", 0.0);
    sbo.inner.restarts = static_cast<int>(cfg.get_int("sbo.restarts", 4));
    return sbo;
}

SpsaConfig spsa_config_from(const ConfigFile &cfg) {
    SpsaConfig spsa;
    spsa.a = cfg.get_double("spsa.a", 0.2);
    spsa.c = cfg.get_double("spsa.c", 0.2);
    spsa.alpha = cfg.get_double("spsa.alpha", 0.602);
    spsa.gamma = cfg.get_double("spsa.gamma", 0.101);
    spsa.stability_offset = cfg.get_double("spsa.stability_offset", 0.0);
    return spsa;
}

QuasiNewtonConfig qn_config_from(const ConfigFile &cfg) {
    QuasiNewtonConfig qn;
    qn.fd_step = cfg.get_double("qn.fd_step", 1e-2);
    qn.max_step = cfg.get_double("qn.max_step", 0.5);
    return qn;
}

namespace {

BenchmarkConfig benchmark_config_from(const ConfigFile &cfg,
                                      const Overrides &over) {
    BenchmarkConfig bench;
    bench.problem = problem_from_config(cfg);
    bench.optimizers =
        over.optimizer
            ? split_list(*over.optimizer)
            : split_list(cfg.get_string("benchmark.optimizers", "sbo,spsa"));
    bench.runs = over.runs.value_or(
        static_cast<int>(cfg.get_int("benchmark.runs", 20)));
    bench.base_seed = over.seed.value_or(
        static_cast<std::uint64_t>(cfg.get_int("benchmark.seed", 1)));
    bench.shots_per_iteration = over.shots.value_or(
        cfg.get_int("budget.shots_per_iteration", 5000));
    bench.iterations = over.iters.value_or(
        static_cast<int>(cfg.get_int("budget.iterations", 100)));
    bench.sbo = sbo_config_from(cfg);
    bench.spsa = spsa_config_from(cfg);
    bench.qn = qn_config_from(cfg);
    if (over.tau) {
        bench.sbo.tau = *over.tau;
    }
    if (over.patch_size) {
        bench.sbo.patch_size = *over.patch_size;
    }
    bench.optimum.starts =
        static_cast<int>(cfg.get_int("optimum.starts", 50));
    return bench;
}

int cmd_optimize(const std::string &config_path, const Overrides &over,
                 std::ostream &out, std::ostream &err) {
    const ConfigFile cfg = ConfigFile::load(config_path);
    const Problem problem = problem_from_config(cfg);
    const std::string optimizer = over.optimizer.value_or(
        cfg.get_string("optimize.optimizer", "sbo"));
    const std::uint64_t seed = over.seed.value_or(
        static_cast<std::uint64_t>(cfg.get_int("optimize.seed", 1)));
    const int iterations = over.iters.value_or(
        static_cast<int>(cfg.get_int("budget.iterations", 100)));
    const long long shots_per_iteration = over.shots.value_or(
        cfg.get_int("budget.shots_per_iteration", 5000));

    const Eigen::VectorXd theta0 = initial_point(problem.dimension(), seed);
    const RngStream rng(seed, 0x5b0);
    RunTrace trace;
    if (optimizer == "sbo") {
        SboConfig sbo = sbo_config_from(cfg);
        if (over.tau) {
            sbo.tau = *over.tau;
        }
        if (over.patch_size) {
            sbo.patch_size = *over.patch_size;
        }
        sbo.iterations = iterations;
        if (shots_per_iteration % sbo.tau != 0) {
            ConfigErrors errors(cfg);
            errors.add("budget.shots_per_iteration",
                       "must be divisible by sbo.tau");
            errors.throw_if_any();
        }
        sbo.shots_per_sample = shots_per_iteration / sbo.tau;
        trace = sbo_run(problem.objective(), theta0, sbo, rng);
    } else if (optimizer == "spsa") {
        SpsaConfig spsa = spsa_config_from(cfg);
        spsa.iterations = iterations;
        spsa.shots_per_iteration = shots_per_iteration;
        trace = spsa_run(problem.objective(), theta0, spsa, rng);
    } else if (optimizer == "qn") {
        QuasiNewtonConfig qn = qn_config_from(cfg);
        qn.iterations = iterations;
        qn.shots_per_iteration = shots_per_iteration;
        trace = quasi_newton_run(problem.objective(), theta0, std::nullopt,
                                 qn, rng);
    } else {
        throw std::runtime_error("unknown optimizer: " + optimizer +
                                 " (expected sbo, spsa, or qn)");
    }
    warn_unused(cfg, err);

    out << "optimizer: " << optimizer << "\n";
    out << "dimension: " << problem.dimension() << "\n";
    out << "total shots: " << trace.total_shots << "\n";
    out << "theta_opt: " << vector_text(trace.theta_opt) << "\n";
    out << "exact value at theta_opt: "
        << format_double(problem.exact_value(trace.theta_opt)) << "\n";
    const fs::path dir(over.out_dir);
    write_output(dir / "trace.json", trace_to_json(trace), out);
    write_output(dir / "trace.csv", trace_to_csv(trace), out);
    return 0;
}

int cmd_benchmark(const std::string &config_path, const Overrides &over,
                  bool write_traces, std::ostream &out, std::ostream &err) {
    const ConfigFile cfg = ConfigFile::load(config_path);
    const BenchmarkConfig bench = benchmark_config_from(cfg, over);
    warn_unused(cfg, err);
    const BenchmarkResult result = run_benchmark(bench);

    out << "true optimum: " << format_double(result.optimum.value) << "\n";
    out << "final mean rel_err:\n";
    for (const auto &name : bench.optimizers) {
        out << "  " << name << ": "
            << format_double(result.summary.at(name).mean_rel_err.back())
            << "\n";
    }
    const fs::path dir(over.out_dir);
    write_output(dir / "benchmark.csv", benchmark_rows_to_csv(result.rows),
                 out);
    write_output(dir / "summary.json",
                 benchmark_summary_to_json(bench, result), out);
    if (write_traces) {
        for (std::size_t t = 0; t < result.traces.size(); ++t) {
            const auto &trace = result.traces[t];
            const auto seed =
                bench.base_seed +
                static_cast<std::uint64_t>(t % static_cast<std::size_t>(
                                               bench.runs));
            write_output(dir / "traces" /
                             (trace.optimizer + "_seed" +
                              std::to_string(seed) + ".trace.json"),
                         trace_to_json(trace), out);
        }
    }
    return 0;
}

int cmd_sweep(const std::string &config_path, const Overrides &over,
              std::ostream &out, std::ostream &err) {
    const ConfigFile cfg = ConfigFile::load(config_path);
    const Problem problem = problem_from_config(cfg);
    const std::uint64_t seed = over.seed.value_or(
        static_cast<std::uint64_t>(cfg.get_int("sweep.seed", 1)));
    const int runs = over.runs.value_or(
        static_cast<int>(cfg.get_int("sweep.runs", 10)));
    const int tau =
        over.tau.value_or(static_cast<int>(cfg.get_int("sweep.tau", 30)));
    const long long shots_per_sample =
        cfg.get_int("sweep.shots_per_sample", 60);
    const int iterations = over.iters.value_or(
        static_cast<int>(cfg.get_int("sweep.iterations", 100)));
    const std::vector<double> grid =
        sweep_grid(cfg.get_double("sweep.grid_min", 0.02),
                   cfg.get_double("sweep.grid_max", 0.40),
                   cfg.get_double("sweep.grid_step", 0.02));

    TrueOptimumOptions opt_opts;
    opt_opts.starts = static_cast<int>(cfg.get_int("optimum.starts", 50));
    warn_unused(cfg, err);
    const RngStream root(seed, 0x53e9);
    const TrueOptimum optimum =
        true_optimum(problem, opt_opts, root.substream(0));

    const NoisyObjective objective = problem.objective();
    const PatchErrorFn final_error = [&](double ell, int, RngStream &rng) {
        SboConfig sbo;
        sbo.patch_size = ell;
        sbo.tau = tau;
        sbo.iterations = iterations;
        sbo.shots_per_sample = shots_per_sample;
        RngStream theta_rng = rng.substream(0);
        Eigen::VectorXd theta0(problem.dimension());
        for (Eigen::Index d = 0; d < theta0.size(); ++d) {
            theta0[d] = theta_rng.uniform(0.0, 2.0 * std::numbers::pi);
        }
        const RunTrace trace =
            sbo_run(objective, theta0, sbo, rng.substream(1));
        return relative_abs_error(problem.exact_value(trace.theta_opt),
                                  optimum.value);
    };
    const SweepResult result =
        sweep_patch_size(final_error, grid, runs, root.substream(1));

    out << "ell_star: " << format_double(result.ell_star) << "\n";
    nlohmann::json doc;
    doc["ell_star"] = result.ell_star;
    doc["grid"] = result.grid;
    doc["mean_error"] = result.mean_error;
    doc["stderr"] = result.stderr_error;
    doc["runs"] = result.runs;
    doc["true_optimum"] = optimum.value;
    const fs::path dir(over.out_dir);
    write_output(dir / "sweep.csv", sweep_to_csv(result), out);
    write_output(dir / "sweep.json", doc.dump(2) + "\n", out);
    return 0;
}

int cmd_bound(bool qaoa, int p, int kappa, const std::string &lambdas_text,
              const std::optional<std::string> &out_dir, std::ostream &out) {
    AnsatzComplexity complexity;
    if (qaoa) {
        complexity = qaoa_complexity(p, kappa);
    } else {
        if (lambdas_text.empty()) {
            throw std::runtime_error(
                "bound needs either --qaoa with -p/--kappa or --lambdas");
        }
        for (const auto &item : split_list(lambdas_text)) {
            complexity.lambdas.push_back(
                static_cast<int>(std::stoll(item)));
        }
    }
    const double heuristic = patch_size_heuristic(complexity);
    const CriticalPointBound bound = critical_point_bound(complexity);
    out << "dimension: " << complexity.dimension() << "\n";
    out << "patch size heuristic: " << format_double(heuristic) << "\n";
    out << "critical point log-bound: " << format_double(bound.log_value)
        << "\n";
    out << "critical point bound: " << format_double(bound.value) << "\n";
    if (out_dir) {
        nlohmann::json doc;
        doc["dimension"] = complexity.dimension();
        doc["lambdas"] = complexity.lambdas;
        doc["patch_size_heuristic"] = heuristic;
        doc["log_bound"] = bound.log_value;
        doc["bound"] = std::isinf(bound.value) ? nlohmann::json()
                                               : nlohmann::json(bound.value);
        atomic_write_file(fs::path(*out_dir) / "bound.json",
                          doc.dump(2) + "\n");
        out << "wrote " << (fs::path(*out_dir) / "bound.json").string()
            << "\n";
    }
    return 0;
}

int cmd_fit(const std::string &input_path, const Overrides &over,
            std::ostream &out) {
    const std::string text = read_file(input_path);
    std::istringstream in(text);
    std::string line;
    std::vector<PatchScalePoint> points;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line_no == 1) {
            continue; // header: p,kappa,ell_star
        }
        std::istringstream fields(line);
        std::string p_text, kappa_text, ell_text;
        if (!std::getline(fields, p_text, ',') ||
            !std::getline(fields, kappa_text, ',') ||
            !std::getline(fields, ell_text)) {
            throw std::runtime_error(input_path + ":" +
                                     std::to_string(line_no) +
                                     ": expected p,kappa,ell_star");
        }
        points.push_back({static_cast<int>(std::stoll(p_text)),
                          static_cast<int>(std::stoll(kappa_text)),
                          parse_double(ell_text)});
    }
    const ScalingFit fitted = fit_scaling(points);
    out << "alpha: " << format_double(fitted.alpha) << "\n";
    out << "beta: " << format_double(fitted.beta) << "\n";
    out << "residual: " << format_double(fitted.residual_norm) << "\n";
    const fs::path dir(over.out_dir);
    write_output(dir / "fit.json", scaling_fit_to_json(fitted), out);
    return 0;
}

int cmd_true_optimum(const std::string &config_path, const Overrides &over,
                     std::ostream &out, std::ostream &err) {
    const ConfigFile cfg = ConfigFile::load(config_path);
    const Problem problem = problem_from_config(cfg);
    TrueOptimumOptions opts;
    opts.starts = static_cast<int>(cfg.get_int("optimum.starts", 50));
    const std::uint64_t seed = over.seed.value_or(
        static_cast<std::uint64_t>(cfg.get_int("optimum.seed", 1)));
    warn_unused(cfg, err);
    const TrueOptimum optimum =
        true_optimum(problem, opts, RngStream(seed, 0x09));

    out << "value: " << format_double(optimum.value) << "\n";
    out << "argmin: " << vector_text(optimum.argmin) << "\n";
    nlohmann::json doc;
    doc["value"] = optimum.value;
    doc["argmin"] = vector_json(optimum.argmin);
    doc["basin_values"] = optimum.basin_values;
    doc["starts"] = opts.starts;
    doc["seed"] = seed;
    const fs::path dir(over.out_dir);
    write_output(dir / "true_optimum.json", doc.dump(2) + "\n", out);
    return 0;
}

} // namespace

int cmd_dispatch(std::vector<std::string> args, std::ostream &out,
                 std::ostream &err) {
    CLI::App app{"surrogate-based optimization experiments for shot-noisy "
                 "variational objectives"};
    app.require_subcommand(1);

    Overrides over;
    std::string config_path;

    const auto add_common = [&](CLI::App *cmd, bool needs_config) {
        auto *config_opt =
            cmd->add_option("--config", config_path, "experiment config file");
        if (needs_config) {
            config_opt->required();
        }
        cmd->add_option("--out-dir", over.out_dir, "output directory");
        cmd->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t v) { over.seed = v; },
            "base random seed");
        cmd->add_option_function<std::string>(
            "--optimizer", [&](const std::string &v) { over.optimizer = v; },
            "optimizer selection {sbo,spsa,qn}");
        cmd->add_option_function<long long>(
            "--shots", [&](long long v) { over.shots = v; },
            "shots per iteration");
        cmd->add_option_function<int>(
            "--tau", [&](int v) { over.tau = v; },
            "surrogate samples per patch");
        cmd->add_option_function<double>(
            "--patch-size", [&](double v) { over.patch_size = v; },
            "patch side length");
        cmd->add_option_function<int>(
            "--iters", [&](int v) { over.iters = v; },
            "optimizer iterations");
        cmd->add_option_function<int>(
            "--runs", [&](int v) { over.runs = v; }, "independent runs");
    };

    auto *optimize =
        app.add_subcommand("optimize", "run a single optimization");
    add_common(optimize, true);

    auto *benchmark = app.add_subcommand(
        "benchmark", "budget-matched optimizer comparison campaign");
    add_common(benchmark, true);
    bool write_traces = false;
    benchmark->add_flag("--traces", write_traces,
                        "also write per-run trace.json files");

    auto *sweep = app.add_subcommand(
        "sweep-patch-size", "scan patch sizes and locate the error minimizer");
    add_common(sweep, true);

    auto *bound = app.add_subcommand(
        "bound", "critical-point bound and patch-size heuristic");
    bool bound_qaoa = false;
    int bound_p = 1;
    int bound_kappa = 3;
    std::string lambdas_text;
    std::string bound_out_dir;
    bound->add_flag("--qaoa", bound_qaoa, "QAOA on a kappa-regular graph");
    bound->add_option("-p,--layers", bound_p, "QAOA layers");
    bound->add_option("--kappa", bound_kappa, "graph regularity");
    bound->add_option("--lambdas", lambdas_text,
                      "comma-separated per-parameter rotation counts");
    auto *bound_dir_opt =
        bound->add_option("--out-dir", bound_out_dir, "output directory");

    auto *fit = app.add_subcommand(
        "fit", "power-law fit of optimal patch sizes vs kappa (p + 1)");
    std::string fit_input;
    fit->add_option("--input", fit_input, "CSV with columns p,kappa,ell_star")
        ->required();
    fit->add_option("--out-dir", over.out_dir, "output directory");

    auto *opt_cmd = app.add_subcommand(
        "true-optimum", "reference optimum of the exact objective");
    add_common(opt_cmd, true);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
        if (optimize->parsed()) {
            return cmd_optimize(config_path, over, out, err);
        }
        if (benchmark->parsed()) {
            return cmd_benchmark(config_path, over, write_traces, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(config_path, over, out, err);
        }
        if (bound->parsed()) {
            return cmd_bound(bound_qaoa, bound_p, bound_kappa, lambdas_text,
                             bound_dir_opt->count() > 0
                                 ? std::optional(bound_out_dir)
                                 : std::nullopt,
                             out);
        }
        if (fit->parsed()) {
            return cmd_fit(fit_input, over, out);
        }
        if (opt_cmd->parsed()) {
            return cmd_true_optimum(config_path, over, out, err);
        }
        throw std::runtime_error("no subcommand selected");
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        nlohmann::json report;
        report["error"] = {{"type", "usage"}, {"message", e.what()}};
        err << report.dump() << "\n";
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    } catch (const std::exception &e) {
        nlohmann::json report;
        report["error"] = {{"type", "run"}, {"message", e.what()}};
        err << report.dump() << "\n";
        return 1;
    }
}

} // namespace sbovqa
