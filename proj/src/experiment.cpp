#include "gdr/experiment.hpp"

#include "gdr/angles.hpp"
#include "gdr/engine.hpp"
#include "gdr/errors.hpp"
#include "gdr/limits.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

namespace gdr {
namespace {

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(count);
            }
        }
    };
    const auto threads = static_cast<std::size_t>(std::max(1, jobs));
    if (threads == 1 || count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < std::min(threads, count); ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

struct Cell {
    int n;
    int instance_id;
};

std::vector<Cell> cells_of(const ExperimentConfig& config) {
    std::vector<Cell> cells;
    for (const int n : config.n_values) {
        for (int i = 0; i < config.instances; ++i) {
            cells.push_back({n, i});
        }
    }
    return cells;
}

/// Runs every start of `instance` at one theta; the limits are precomputed.
CellStats run_starts(const Instance& instance, const SplittingOperator& op,
                     const std::vector<Matrix>& limits, double theta, const ExperimentConfig& config) {
    const RunConfig run_config(theta, config.tol, config.max_iters);
    double total = 0.0;
    int converged = 0;
    for (std::size_t s = 0; s < instance.starts.size(); ++s) {
        const RunResult r = run(instance.problem, op, run_config, instance.starts[s], limits[s]);
        total += static_cast<double>(r.iterations);
        converged += r.converged ? 1 : 0;
    }
    const auto count = static_cast<double>(instance.starts.size());
    return {total / count, converged / count};
}

std::vector<Matrix> limits_for(const Instance& instance, const SplittingOperator& op) {
    const LimitOracle oracle(instance.problem, op);
    std::vector<Matrix> limits;
    limits.reserve(instance.starts.size());
    for (const auto& start : instance.starts) {
        limits.push_back(oracle.limits(start).v_star);
    }
    return limits;
}

void report(const ProgressFn& progress, std::mutex& mutex, std::size_t& done, std::size_t total,
            const Cell& cell) {
    if (!progress) {
        return;
    }
    std::lock_guard lock(mutex);
    ++done;
    progress("n=" + std::to_string(cell.n) + " instance=" + std::to_string(cell.instance_id) + " (" +
             std::to_string(done) + "/" + std::to_string(total) + ")");
}

}  // namespace

DimMode DimMode::generic_default(int p) {
    return {Kind::generic, (p + 3) / 4, (3 * p + 3) / 4, 0};
}

void DimMode::validate(int p) const {
    if (d_min < 1 || d_max > p - 1 || d_min > d_max) {
        throw InvalidInput("dimension range must satisfy 1 <= d_min <= d_max <= p-1 (p=" +
                           std::to_string(p) + ", d_min=" + std::to_string(d_min) +
                           ", d_max=" + std::to_string(d_max) + ")");
    }
    if (kind == Kind::common_core && (core_dim < 0 || core_dim > d_min)) {
        throw InvalidInput("common core dimension must satisfy 0 <= core_dim <= d_min");
    }
}

std::vector<double> default_theta_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) {
        grid.push_back(i / 10.0);
    }
    return grid;
}

DimMode ExperimentConfig::resolved_dim_mode() const {
    return dim_mode ? *dim_mode : DimMode::generic_default(p);
}

void ExperimentConfig::validate(int min_n) const {
    if (p < 2) {
        throw InvalidInput("ambient dimension p must be at least 2");
    }
    if (n_values.empty()) {
        throw InvalidInput("no values of n given");
    }
    for (const int n : n_values) {
        if (n < min_n) {
            throw InvalidInput("n must be at least " + std::to_string(min_n));
        }
    }
    if (instances < 1 || starts < 1) {
        throw InvalidInput("instances and starts must be positive");
    }
    if (theta_grid.empty()) {
        throw InvalidInput("theta grid is empty");
    }
    for (const double t : theta_grid) {
        if (!(t > 0.0 && t < 2.0)) {
            throw InvalidInput("every theta must lie in (0, 2)");
        }
    }
    if (algorithms.empty()) {
        throw InvalidInput("no algorithms selected");
    }
    for (const auto a : algorithms) {
        if (a == GraphName::custom) {
            throw InvalidInput("experiments run named algorithms only");
        }
    }
    if (!(tol > 0.0) || max_iters < 1) {
        throw InvalidInput("tol must be positive and max_iters at least 1");
    }
    if (jobs < 1) {
        throw InvalidInput("jobs must be at least 1");
    }
    resolved_dim_mode().validate(p);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a, std::uint64_t b) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(parent) ^ a) ^ (b + 0x632be59bd9b4e019ULL));
}

Problem generate_problem(int p, int n, const DimMode& mode, Rng& rng) {
    if (n < 2) {
        throw InvalidInput("generate_problem: need n >= 2");
    }
    mode.validate(p);
    std::uniform_int_distribution<int> pick(mode.d_min, mode.d_max);
    std::vector<Subspace> subspaces;
    subspaces.reserve(static_cast<std::size_t>(n));
    if (mode.kind == DimMode::Kind::generic) {
        for (int i = 0; i < n; ++i) {
            subspaces.push_back(random_subspace(p, pick(rng), rng));
        }
        return Problem(std::move(subspaces));
    }
    const Matrix core = mode.core_dim > 0 ? random_subspace(p, mode.core_dim, rng).basis() : Matrix(p, 0);
    for (int i = 0; i < n; ++i) {
        const int d = pick(rng);
        Matrix spanning(p, d);
        spanning.leftCols(mode.core_dim) = core;
        spanning.rightCols(d - mode.core_dim) = gaussian_matrix(p, d - mode.core_dim, rng);
        subspaces.push_back(orthonormalize(spanning));
    }
    return Problem(std::move(subspaces));
}

std::vector<Matrix> generate_starts(int p, int n, int count, std::uint64_t seed) {
    std::vector<Matrix> starts;
    starts.reserve(static_cast<std::size_t>(count));
    for (int s = 0; s < count; ++s) {
        Rng rng(derive_seed(seed, 1, static_cast<std::uint64_t>(s)));
        starts.push_back(gaussian_matrix(p, n - 1, rng));
    }
    return starts;
}

Instance make_instance(const ExperimentConfig& config, int n, int instance_id) {
    const std::uint64_t seed = derive_seed(config.master_seed, static_cast<std::uint64_t>(n),
                                           static_cast<std::uint64_t>(instance_id));
    Rng rng(derive_seed(seed, 0));
    Problem problem = generate_problem(config.p, n, config.resolved_dim_mode(), rng);
    return {n, instance_id, seed, std::move(problem), generate_starts(config.p, n, config.starts, seed)};
}

std::uint64_t fingerprint(std::span<const Matrix> starts) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const void* data, std::size_t bytes) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < bytes; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& m : starts) {
        const std::array<Eigen::Index, 2> shape{m.rows(), m.cols()};
        feed(shape.data(), sizeof(shape));
        feed(m.data(), static_cast<std::size_t>(m.size()) * sizeof(double));
    }
    return h;
}

std::vector<SweepRecord> theta_sweep(const ExperimentConfig& config, const ProgressFn& progress) {
    config.validate();
    const auto cells = cells_of(config);
    std::vector<std::vector<SweepRecord>> slots(cells.size());
    std::mutex progress_mutex;
    std::size_t done = 0;

    parallel_for(cells.size(), config.jobs, [&](std::size_t c) {
        const Cell cell = cells[c];
        const Instance instance = make_instance(config, cell.n, cell.instance_id);
        auto& out = slots[c];
        for (const GraphName alg : config.algorithms) {
            const SplittingOperator op = build_operator(build_named(alg, cell.n));
            const std::vector<Matrix> limits = limits_for(instance, op);
            const std::size_t first = out.size();
            for (const double theta : config.theta_grid) {
                const CellStats stats = run_starts(instance, op, limits, theta, config);
                out.push_back({alg, cell.n, cell.instance_id, theta, stats.mean_iterations, 0.0,
                               stats.converged_fraction});
            }
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = first; r < out.size(); ++r) {
                if (out[r].converged_fraction == 1.0) {
                    best = std::min(best, out[r].mean_iterations);
                }
            }
            if (!std::isfinite(best)) {
                for (std::size_t r = first; r < out.size(); ++r) {
                    best = std::min(best, out[r].mean_iterations);
                }
            }
            for (std::size_t r = first; r < out.size(); ++r) {
                const double k = out[r].mean_iterations;
                out[r].tau = best > 0.0 ? k / best : (k == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
            }
        }
        report(progress, progress_mutex, done, cells.size(), cell);
    });

    std::vector<SweepRecord> records;
    for (auto& slot : slots) {
        records.insert(records.end(), slot.begin(), slot.end());
    }
    std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.algorithm, a.n, a.instance_id, a.theta) <
               std::tie(b.algorithm, b.n, b.instance_id, b.theta);
    });
    return records;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw InvalidInput("median of an empty list");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<BestTheta> best_theta(std::span<const SweepRecord> records) {
    if (records.empty()) {
        throw InvalidInput("best_theta: no records");
    }
    std::map<std::tuple<GraphName, int, double>, std::vector<double>> by_theta;
    for (const auto& r : records) {
        by_theta[{r.algorithm, r.n, r.theta}].push_back(r.mean_iterations);
    }
    std::map<std::pair<GraphName, int>, BestTheta> best;
    for (const auto& [key, values] : by_theta) {
        const auto [alg, n, theta] = key;
        const double m = median(values);
        auto [it, inserted] = best.try_emplace({alg, n}, BestTheta{alg, n, theta, m});
        if (inserted) {
            continue;
        }
        BestTheta& current = it->second;
        const bool better = m < current.median_iterations ||
                            (m == current.median_iterations &&
                             std::abs(theta - 1.0) < std::abs(current.theta - 1.0));
        if (better) {
            current = {alg, n, theta, m};
        }
    }
    std::vector<BestTheta> out;
    for (const auto& [key, value] : best) {
        out.push_back(value);
    }
    return out;
}

std::vector<CompareRecord> compare(const ExperimentConfig& config, std::span<const BestTheta> best,
                                   const ProgressFn& progress) {
    config.validate();
    std::map<std::pair<GraphName, int>, double> theta_for;
    for (const auto& b : best) {
        theta_for[{b.algorithm, b.n}] = b.theta;
    }
    for (const GraphName alg : config.algorithms) {
        for (const int n : config.n_values) {
            if (!theta_for.contains({alg, n})) {
                throw InvalidInput("compare: no best theta for " + std::string(to_string(alg)) +
                                   " at n=" + std::to_string(n));
            }
        }
    }

    const auto cells = cells_of(config);
    std::vector<std::vector<CompareRecord>> slots(cells.size());
    std::mutex progress_mutex;
    std::size_t done = 0;

    parallel_for(cells.size(), config.jobs, [&](std::size_t c) {
        const Cell cell = cells[c];
        const Instance instance = make_instance(config, cell.n, cell.instance_id);
        const double angle = pierra_angle(instance.problem).angle_rad;
        for (const GraphName alg : config.algorithms) {
            const SplittingOperator op = build_operator(build_named(alg, cell.n));
            const double theta = theta_for.at({alg, cell.n});
            const CellStats stats = run_starts(instance, op, limits_for(instance, op), theta, config);
            slots[c].push_back({alg, cell.n, cell.instance_id, angle, theta, stats.mean_iterations});
        }
        report(progress, progress_mutex, done, cells.size(), cell);
    });

    std::vector<CompareRecord> records;
    for (auto& slot : slots) {
        records.insert(records.end(), slot.begin(), slot.end());
    }
    std::sort(records.begin(), records.end(), [](const CompareRecord& a, const CompareRecord& b) {
        return std::tie(a.algorithm, a.n, a.instance_id) < std::tie(b.algorithm, b.n, b.instance_id);
    });
    return records;
}

std::vector<AggregateRecord> aggregate_by_n(std::span<const CompareRecord> records) {
    if (records.empty()) {
        throw InvalidInput("aggregate_by_n: no records");
    }
    std::map<std::pair<GraphName, int>, std::pair<double, int>> sums;
    for (const auto& r : records) {
        auto& [sum, count] = sums[{r.algorithm, r.n}];
        sum += r.mean_iterations;
        ++count;
    }
    std::vector<AggregateRecord> out;
    for (const auto& [key, value] : sums) {
        out.push_back({key.first, key.second, value.first / value.second});
    }
    return out;
}

namespace {

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw InvalidInput("spearman: need two equally long samples of size >= 2");
    }
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const Eigen::Map<const Vector> va(ra.data(), static_cast<Eigen::Index>(ra.size()));
    const Eigen::Map<const Vector> vb(rb.data(), static_cast<Eigen::Index>(rb.size()));
    const Vector ca = va.array() - va.mean();
    const Vector cb = vb.array() - vb.mean();
    const double denom = ca.norm() * cb.norm();
    if (denom == 0.0) {
        throw InvalidInput("spearman: constant sample");
    }
    return ca.dot(cb) / denom;
}

}  // namespace gdr
