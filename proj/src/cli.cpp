#include "gdr/cli.hpp"

#include "gdr/csv.hpp"
#include "gdr/engine.hpp"
#include "gdr/errors.hpp"
#include "gdr/experiment.hpp"
#include "gdr/graph.hpp"
#include "gdr/limits.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace gdr::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// Raised for bad flags or config contents; maps to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    int p = 50;
    std::vector<int> n{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::vector<std::string> alg{"all"};
    double theta = 1.0;
    std::vector<double> theta_grid;
    std::optional<int> instances;
    int starts = 10;
    double tol = 1e-6;
    long max_iters = 1'000'000;
    std::optional<std::uint64_t> seed;
    std::string dim_mode = "generic";
    std::optional<int> d_min;
    std::optional<int> d_max;
    int core_dim = 0;
    int jobs = 1;
    std::string out;
    std::string config;
    std::string in;
    std::string best;
    std::string problem;
    std::string manifest;
    double angle = kSpiralDefaultAngle;
    json graph;
};

std::uint64_t hash_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path.string());
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c = 0;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex(std::uint64_t v) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << v;
    return s.str();
}

/// Output file written through a temporary so that failures leave nothing behind.
class PendingOutput {
public:
    explicit PendingOutput(std::string path) : path_(std::move(path)), tmp_(path_ + ".tmp") {
        if (path_.empty()) {
            throw UsageError("--out is required");
        }
        std::ofstream probe(tmp_, std::ios::binary | std::ios::trunc);
        if (!probe) {
            throw UsageError("cannot write to " + path_);
        }
    }
    PendingOutput(const PendingOutput&) = delete;
    PendingOutput& operator=(const PendingOutput&) = delete;
    ~PendingOutput() {
        if (!committed_) {
            std::error_code ec;
            fs::remove(tmp_, ec);
        }
    }

    void commit(const std::string& contents) {
        {
            std::ofstream file(tmp_, std::ios::binary | std::ios::trunc);
            file << contents;
            if (!file) {
                throw UsageError("failed writing " + path_);
            }
        }
        fs::rename(tmp_, path_);
        committed_ = true;
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::string tmp_;
    bool committed_ = false;
};

void write_manifest(const std::string& command, const json& config, const std::vector<std::string>& inputs,
                    const std::string& output, double wall_seconds) {
    json manifest;
    manifest["tool"] = "gdr";
    manifest["version"] = GDR_VERSION;
    manifest["command"] = command;
    manifest["config"] = config;
    manifest["wall_time_s"] = wall_seconds;
    manifest["inputs"] = json::array();
    for (const auto& in : inputs) {
        manifest["inputs"].push_back({{"path", in}, {"fnv1a64", hex(hash_file(in))}});
    }
    manifest["outputs"] = json::array({{{"path", output}, {"fnv1a64", hex(hash_file(output))}}});
    std::ofstream file(output + ".manifest.json", std::ios::binary | std::ios::trunc);
    file << manifest.dump(2) << '\n';
}

std::vector<GraphName> parse_algorithms(const std::vector<std::string>& names) {
    std::vector<GraphName> out;
    for (const auto& name : names) {
        if (name == "all") {
            out.assign(std::begin(kNamedGraphs), std::end(kNamedGraphs));
            continue;
        }
        const auto parsed = parse_graph_name(name);
        if (!parsed) {
            throw UsageError("unknown algorithm '" + name + "'");
        }
        out.push_back(*parsed);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DimMode dim_mode_of(const Settings& s) {
    DimMode mode = DimMode::generic_default(s.p);
    if (s.dim_mode == "common-core") {
        mode.kind = DimMode::Kind::common_core;
        mode.core_dim = s.core_dim;
    } else if (s.dim_mode != "generic") {
        throw UsageError("--dim-mode must be generic or common-core");
    }
    if (s.d_min) {
        mode.d_min = *s.d_min;
    }
    if (s.d_max) {
        mode.d_max = *s.d_max;
    }
    return mode;
}

ExperimentConfig experiment_config(const Settings& s, int default_instances) {
    if (!s.seed) {
        throw UsageError("--seed is required for experiment subcommands");
    }
    ExperimentConfig config;
    config.p = s.p;
    config.n_values = s.n;
    config.instances = s.instances.value_or(default_instances);
    config.starts = s.starts;
    if (!s.theta_grid.empty()) {
        config.theta_grid = s.theta_grid;
    }
    config.algorithms = parse_algorithms(s.alg);
    config.tol = s.tol;
    config.max_iters = s.max_iters;
    config.master_seed = *s.seed;
    config.dim_mode = dim_mode_of(s);
    config.jobs = s.jobs;
    try {
        config.validate();
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
    return config;
}

json describe(const ExperimentConfig& c) {
    const DimMode mode = c.resolved_dim_mode();
    json algs = json::array();
    for (const auto a : c.algorithms) {
        algs.push_back(std::string(to_string(a)));
    }
    return {{"p", c.p},
            {"n", c.n_values},
            {"alg", algs},
            {"instances", c.instances},
            {"starts", c.starts},
            {"theta_grid", c.theta_grid},
            {"tol", c.tol},
            {"max_iters", c.max_iters},
            {"seed", c.master_seed},
            {"dim_mode", mode.kind == DimMode::Kind::generic ? "generic" : "common-core"},
            {"d_min", mode.d_min},
            {"d_max", mode.d_max},
            {"core_dim", mode.core_dim},
            {"jobs", c.jobs}};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- subcommands ---------------------------------------------------------

Problem load_problem(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot read problem file " + path);
    }
    json j;
    try {
        j = json::parse(file);
    } catch (const json::exception& e) {
        throw UsageError("problem file: " + std::string(e.what()));
    }
    if (!j.contains("subspaces") || !j["subspaces"].is_array()) {
        throw UsageError("problem file needs a 'subspaces' array of spanning-vector lists");
    }
    std::vector<Subspace> subspaces;
    std::optional<Eigen::Index> p;
    for (const auto& vectors : j["subspaces"]) {
        const auto rows = vectors.get<std::vector<std::vector<double>>>();
        if (rows.empty()) {
            throw UsageError("problem file: each subspace needs at least one spanning vector");
        }
        const auto dim = static_cast<Eigen::Index>(rows.front().size());
        if (p && *p != dim) {
            throw UsageError("problem file: vectors of different lengths");
        }
        p = dim;
        Matrix m(dim, static_cast<Eigen::Index>(rows.size()));
        for (std::size_t c = 0; c < rows.size(); ++c) {
            if (static_cast<Eigen::Index>(rows[c].size()) != dim) {
                throw UsageError("problem file: vectors of different lengths");
            }
            for (Eigen::Index r = 0; r < dim; ++r) {
                m(r, static_cast<Eigen::Index>(c)) = rows[c][static_cast<std::size_t>(r)];
            }
        }
        subspaces.push_back(orthonormalize(m));
    }
    return Problem(std::move(subspaces));
}

AlgorithmGraph custom_graph(const json& desc) {
    auto edges_of = [](const json& list) {
        std::vector<Edge> edges;
        for (const auto& pair : list) {
            const auto e = pair.get<std::vector<int>>();
            if (e.size() != 2) {
                throw UsageError("graph edges must be [from, to] pairs");
            }
            edges.push_back({e[0] - 1, e[1] - 1});
        }
        return edges;
    };
    if (!desc.is_object() || !desc.contains("n") || !desc.contains("edges")) {
        throw UsageError("custom algorithm needs a 'graph' object with 'n', 'edges' and 'sub_edges'");
    }
    const auto edges = edges_of(desc["edges"]);
    const auto sub = desc.contains("sub_edges") ? edges_of(desc["sub_edges"]) : edges;
    return AlgorithmGraph(desc["n"].get<int>(), edges, sub, GraphName::custom);
}

int cmd_solve(const Settings& s, std::ostream& out) {
    const auto algs = s.alg.size() == 1 && s.alg.front() == "all" ? std::vector<std::string>{"complete"} : s.alg;
    if (algs.size() != 1) {
        throw UsageError("solve takes exactly one --alg");
    }
    const auto name = parse_graph_name(algs.front());
    if (!name) {
        throw UsageError("unknown algorithm '" + algs.front() + "'");
    }
    const RunConfig run_config = [&] {
        try {
            return RunConfig(s.theta, s.tol, s.max_iters);
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
    }();
    std::optional<PendingOutput> output;
    if (!s.out.empty()) {
        output.emplace(s.out);
    }
    const std::uint64_t seed = s.seed ? *s.seed : std::random_device{}();

    std::optional<Problem> problem;
    Matrix v0;
    if (!s.problem.empty()) {
        problem = load_problem(s.problem);
        const int n = static_cast<int>(problem->size());
        v0 = generate_starts(static_cast<int>(problem->ambient_dim()), n, 1,
                             derive_seed(seed, static_cast<std::uint64_t>(n), 0))
                 .front();
    } else {
        if (s.n.empty() || s.n.front() < 2) {
            throw UsageError("solve needs --n >= 2");
        }
        ExperimentConfig config;
        config.p = s.p;
        config.n_values = {s.n.front()};
        config.instances = 1;
        config.starts = 1;
        config.master_seed = seed;
        config.dim_mode = dim_mode_of(s);
        try {
            config.dim_mode->validate(s.p);
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
        Instance instance = make_instance(config, s.n.front(), 0);
        problem = std::move(instance.problem);
        v0 = std::move(instance.starts.front());
    }
    const int n = static_cast<int>(problem->size());
    const AlgorithmGraph graph = *name == GraphName::custom ? custom_graph(s.graph) : build_named(*name, n);
    if (graph.size() != n) {
        throw UsageError("graph size does not match the number of subspaces");
    }
    const SplittingOperator op = build_operator(graph);

    json result{{"algorithm", std::string(to_string(*name))},
                {"p", problem->ambient_dim()},
                {"n", n},
                {"theta", s.theta},
                {"tol", s.tol},
                {"seed", seed}};
    RunResult run_result;
    std::optional<LimitData> limits;
    try {
        limits = LimitOracle(*problem, op).limits(v0);
    } catch (const DegenerateAlpha&) {
        limits.reset();
    }
    if (limits) {
        run_result = run(*problem, op, run_config, v0, limits->v_star);
        result["stopping_rule"] = "governing_limit";
    } else {
        run_result = run_until_stationary(*problem, op, run_config, v0);
        result["stopping_rule"] = "successive_difference";
    }
    result["iterations"] = run_result.iterations;
    result["converged"] = run_result.converged;
    result["final_residual"] = run_result.final_residual;
    json feasibility = json::array();
    for (int i = 0; i < n; ++i) {
        const Vector xi = run_result.shadows.col(i);
        feasibility.push_back((xi - project((*problem)[static_cast<std::size_t>(i)], xi)).norm());
    }
    result["feasibility_errors"] = feasibility;
    if (limits) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst, (run_result.shadows.col(i) - limits->x_star).norm());
        }
        result["oracle_x_error"] = worst;
        result["x_star_norm"] = limits->x_star.norm();
    } else {
        result["oracle_x_error"] = nullptr;
    }
    const std::string text = result.dump(2) + "\n";
    out << text;
    if (output) {
        output->commit(text);
    }
    return run_result.converged ? kSuccess : kNotConverged;
}

int cmd_demo_spiral(const Settings& s, std::ostream& out) {
    PendingOutput output(s.out);
    const auto start = std::chrono::steady_clock::now();
    SpiralDemo demo;
    try {
        demo = demo_spiral(s.angle);
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    csv::write_spiral(csv, demo);
    output.commit(csv.str());
    write_manifest("demo-spiral", {{"angle", s.angle}}, {}, output.path(), seconds_since(start));
    out << "demo-spiral: " << demo.result.iterations << " iterations, wrote " << output.path() << "\n";
    return kSuccess;
}

int cmd_sweep(const Settings& s, std::ostream& out) {
    const ExperimentConfig config = experiment_config(s, 20);
    PendingOutput output(s.out);
    const auto start = std::chrono::steady_clock::now();
    const auto records = theta_sweep(config);
    std::ostringstream csv;
    csv::write_sweep(csv, records);
    output.commit(csv.str());
    write_manifest("sweep-theta", describe(config), {}, output.path(), seconds_since(start));
    out << "sweep-theta: " << records.size() << " rows (" << config.n_values.size() * config.instances
        << " instances) written to " << output.path() << "\n";
    return kSuccess;
}

template <class Reader>
auto read_csv_file(const std::string& path, Reader reader) {
    if (path.empty()) {
        throw UsageError("--in is required");
    }
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot read " + path);
    }
    try {
        return reader(file);
    } catch (const InvalidInput& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_best_theta(const Settings& s, std::ostream& out) {
    PendingOutput output(s.out);
    const auto start = std::chrono::steady_clock::now();
    const auto records = read_csv_file(s.in, [](std::istream& in) { return csv::read_sweep(in); });
    if (records.empty()) {
        throw UsageError(s.in + ": no rows");
    }
    const auto best = best_theta(records);
    std::ostringstream csv;
    csv::write_best_theta(csv, best);
    output.commit(csv.str());
    write_manifest("best-theta", {{"in", s.in}}, {s.in}, output.path(), seconds_since(start));
    for (const auto& b : best) {
        out << to_string(b.algorithm) << " n=" << b.n << " best_theta=" << b.theta << "\n";
    }
    return kSuccess;
}

int cmd_compare(const Settings& s, std::ostream& out) {
    const ExperimentConfig config = experiment_config(s, 100);
    std::vector<BestTheta> best;
    std::vector<std::string> inputs;
    if (!s.best.empty()) {
        best = read_csv_file(s.best, [](std::istream& in) { return csv::read_best_theta(in); });
        inputs.push_back(s.best);
    } else {
        try {
            RunConfig check(s.theta);
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
        for (const auto alg : config.algorithms) {
            for (const int n : config.n_values) {
                best.push_back({alg, n, s.theta, 0.0});
            }
        }
    }
    PendingOutput output(s.out);
    const auto start = std::chrono::steady_clock::now();
    std::vector<CompareRecord> records;
    try {
        records = compare(config, best);
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    csv::write_compare(csv, records);
    output.commit(csv.str());
    json described = describe(config);
    described["best"] = s.best;
    write_manifest("compare", described, inputs, output.path(), seconds_since(start));
    out << "compare: " << records.size() << " rows written to " << output.path() << "\n";
    return kSuccess;
}

int cmd_aggregate(const Settings& s, std::ostream& out) {
    PendingOutput output(s.out);
    const auto start = std::chrono::steady_clock::now();
    const auto records = read_csv_file(s.in, [](std::istream& in) { return csv::read_compare(in); });
    if (records.empty()) {
        throw UsageError(s.in + ": no rows");
    }
    const auto agg = aggregate_by_n(records);
    std::ostringstream csv;
    csv::write_aggregate(csv, agg);
    output.commit(csv.str());
    write_manifest("aggregate", {{"in", s.in}}, {s.in}, output.path(), seconds_since(start));
    out << "aggregate: " << agg.size() << " rows written to " << output.path() << "\n";
    return kSuccess;
}

int cmd_verify(const Settings& s, std::ostream& out) {
    std::ifstream file(s.manifest);
    if (!file) {
        throw UsageError("cannot read manifest " + s.manifest);
    }
    json manifest;
    try {
        manifest = json::parse(file);
    } catch (const json::exception& e) {
        throw UsageError("manifest: " + std::string(e.what()));
    }
    bool ok = true;
    for (const char* section : {"inputs", "outputs"}) {
        for (const auto& entry : manifest.value(section, json::array())) {
            const std::string path = entry.at("path").get<std::string>();
            const std::string expected = entry.at("fnv1a64").get<std::string>();
            std::string actual = "missing";
            if (fs::exists(path)) {
                actual = hex(hash_file(path));
            }
            const bool match = actual == expected;
            ok = ok && match;
            out << (match ? "ok       " : "MISMATCH ") << path << "\n";
        }
    }
    return ok ? kSuccess : kUsageError;
}

// --- option wiring -------------------------------------------------------

void add_experiment_options(CLI::App* sub, Settings& s) {
    sub->add_option("--p", s.p, "ambient dimension");
    sub->add_option("--n", s.n, "comma-separated numbers of subspaces")->delimiter(',');
    sub->add_option("--alg", s.alg, "comma-separated algorithms or 'all'")->delimiter(',');
    sub->add_option("--theta-grid", s.theta_grid, "comma-separated relaxation parameters")->delimiter(',');
    sub->add_option("--instances", s.instances, "random problems per n");
    sub->add_option("--starts", s.starts, "starting points per problem");
    sub->add_option("--tol", s.tol, "stopping tolerance on ||v - v*||");
    sub->add_option("--max-iters", s.max_iters, "iteration cap per run");
    sub->add_option("--seed", s.seed, "master seed");
    sub->add_option("--dim-mode", s.dim_mode, "generic or common-core");
    sub->add_option("--d-min", s.d_min, "smallest subspace dimension");
    sub->add_option("--d-max", s.d_max, "largest subspace dimension");
    sub->add_option("--core-dim", s.core_dim, "dimension of the shared core (common-core mode)");
    sub->add_option("--jobs", s.jobs, "worker threads");
    sub->add_option("--out", s.out, "output CSV path");
    sub->add_option("--config", s.config, "JSON file mirroring the flags");
}

/// Fills every setting not given on the command line from the config file.
void apply_config(const CLI::App& sub, Settings& s) {
    if (s.config.empty()) {
        return;
    }
    std::ifstream file(s.config);
    if (!file) {
        throw UsageError("cannot read config " + s.config);
    }
    json j;
    try {
        j = json::parse(file);
    } catch (const json::exception& e) {
        throw UsageError("config: " + std::string(e.what()));
    }
    auto given = [&sub](const std::string& flag) {
        const CLI::Option* opt = sub.get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    auto take = [&](const char* key, const std::string& flag, auto& target) {
        if (j.contains(key) && !given(flag)) {
            using T = std::decay_t<decltype(target)>;
            if constexpr (std::is_same_v<T, std::vector<int>>) {
                target = j[key].is_array() ? j[key].get<T>() : T{j[key].get<int>()};
            } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
                target = j[key].is_array() ? j[key].get<T>() : T{j[key].get<std::string>()};
            } else if constexpr (std::is_same_v<T, std::optional<int>>) {
                target = j[key].get<int>();
            } else if constexpr (std::is_same_v<T, std::optional<std::uint64_t>>) {
                target = j[key].get<std::uint64_t>();
            } else {
                target = j[key].get<T>();
            }
        }
    };
    try {
        take("p", "--p", s.p);
        take("n", "--n", s.n);
        take("alg", "--alg", s.alg);
        take("theta", "--theta", s.theta);
        take("theta_grid", "--theta-grid", s.theta_grid);
        take("instances", "--instances", s.instances);
        take("starts", "--starts", s.starts);
        take("tol", "--tol", s.tol);
        take("max_iters", "--max-iters", s.max_iters);
        take("seed", "--seed", s.seed);
        take("dim_mode", "--dim-mode", s.dim_mode);
        take("d_min", "--d-min", s.d_min);
        take("d_max", "--d-max", s.d_max);
        take("core_dim", "--core-dim", s.core_dim);
        take("jobs", "--jobs", s.jobs);
        take("out", "--out", s.out);
        take("problem", "--problem", s.problem);
        if (j.contains("graph")) {
            s.graph = j["graph"];
        }
    } catch (const json::exception& e) {
        throw UsageError("config: " + std::string(e.what()));
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph-based Douglas-Rachford splitting for subspace feasibility problems", "gdr"};
    app.require_subcommand(1);
    Settings s;

    auto* solve = app.add_subcommand("solve", "run one algorithm on one random or loaded problem");
    add_experiment_options(solve, s);
    solve->add_option("--theta", s.theta, "relaxation parameter in (0, 2)");
    solve->add_option("--problem", s.problem, "JSON problem file with spanning vectors per subspace");

    auto* demo = app.add_subcommand("demo-spiral", "two-line classical DR trajectory as CSV");
    demo->add_option("--angle", s.angle, "angle between the lines in radians");
    demo->add_option("--out", s.out, "output CSV path");

    auto* sweep = app.add_subcommand("sweep-theta", "relaxation-parameter sweep with performance ratios");
    add_experiment_options(sweep, s);

    auto* best = app.add_subcommand("best-theta", "best grid theta per algorithm and n from a sweep CSV");
    best->add_option("--in", s.in, "sweep CSV");
    best->add_option("--out", s.out, "output CSV path");

    auto* cmp = app.add_subcommand("compare", "run every algorithm at its best theta and record Pierra angles");
    add_experiment_options(cmp, s);
    cmp->add_option("--best", s.best, "best-theta CSV (otherwise --theta is used for every algorithm)");
    cmp->add_option("--theta", s.theta, "uniform relaxation parameter when --best is absent");

    auto* agg = app.add_subcommand("aggregate", "mean iterations per algorithm and n from a compare CSV");
    agg->add_option("--in", s.in, "compare CSV");
    agg->add_option("--out", s.out, "output CSV path");

    auto* verify = app.add_subcommand("verify", "re-hash the files listed in a run manifest");
    verify->add_option("--manifest", s.manifest, "manifest JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    try {
        apply_config(*chosen, s);
        if (chosen == solve) {
            return cmd_solve(s, out);
        }
        if (chosen == demo) {
            return cmd_demo_spiral(s, out);
        }
        if (chosen == sweep) {
            return cmd_sweep(s, out);
        }
        if (chosen == best) {
            return cmd_best_theta(s, out);
        }
        if (chosen == cmp) {
            return cmd_compare(s, out);
        }
        if (chosen == agg) {
            return cmd_aggregate(s, out);
        }
        return cmd_verify(s, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << chosen->help();
        return kUsageError;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DisconnectedSubgraph& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace gdr::cli
