#pragma once

#include "gdr/graph.hpp"
#include "gdr/subspace.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gdr {

/// How random subspace dimensions are drawn.
///   generic:     d_i uniform in [d_min, d_max], independent subspaces.
///   common_core: a shared core_dim-dimensional W is contained in every U_i.
struct DimMode {
    enum class Kind { generic, common_core };

    Kind kind = Kind::generic;
    int d_min = 0;
    int d_max = 0;
    int core_dim = 0;

    /// d_i uniform in [ceil(p/4), ceil(3p/4)].
    static DimMode generic_default(int p);
    void validate(int p) const;
};

std::vector<double> default_theta_grid();  // 0.1, 0.2, ..., 1.9

struct ExperimentConfig {
    int p = 50;
    std::vector<int> n_values{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    int instances = 20;
    int starts = 10;
    std::vector<double> theta_grid = default_theta_grid();
    std::vector<GraphName> algorithms{std::begin(kNamedGraphs), std::end(kNamedGraphs)};
    double tol = 1e-6;
    long max_iters = 1'000'000;
    std::uint64_t master_seed = 0;
    std::optional<DimMode> dim_mode;  ///< unset: DimMode::generic_default(p)
    int jobs = 1;

    DimMode resolved_dim_mode() const;
    /// Throws InvalidInput on any inconsistent field. `min_n` is 3 for the
    /// experiment workflows and 2 for single solves.
    void validate(int min_n = 3) const;
};

/// Counter-based seed derivation (splitmix64 finalizer over the mixed inputs),
/// so that instances do not depend on which algorithms or thetas are run.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a, std::uint64_t b = 0);

Problem generate_problem(int p, int n, const DimMode& mode, Rng& rng);

/// `count` starting tuples (p x (n-1), i.i.d. standard Gaussian entries).
std::vector<Matrix> generate_starts(int p, int n, int count, std::uint64_t seed);

/// One random feasibility problem together with its shared starting points.
struct Instance {
    int n = 0;
    int instance_id = 0;
    std::uint64_t seed = 0;
    Problem problem;
    std::vector<Matrix> starts;
};

Instance make_instance(const ExperimentConfig& config, int n, int instance_id);

/// FNV-1a over the raw bytes of the starting points.
std::uint64_t fingerprint(std::span<const Matrix> starts);

struct CellStats {
    double mean_iterations = 0.0;
    double converged_fraction = 0.0;
};

struct SweepRecord {
    GraphName algorithm = GraphName::custom;
    int n = 0;
    int instance_id = 0;
    double theta = 0.0;
    double mean_iterations = 0.0;
    double tau = 0.0;
    double converged_fraction = 0.0;
};

struct BestTheta {
    GraphName algorithm = GraphName::custom;
    int n = 0;
    double theta = 0.0;
    double median_iterations = 0.0;
};

struct CompareRecord {
    GraphName algorithm = GraphName::custom;
    int n = 0;
    int instance_id = 0;
    double pierra_angle_rad = 0.0;
    double theta_used = 0.0;
    double mean_iterations = 0.0;
};

struct AggregateRecord {
    GraphName algorithm = GraphName::custom;
    int n = 0;
    double mean_iterations = 0.0;
};

/// Called once per finished (n, instance) cell with a short status line.
using ProgressFn = std::function<void(const std::string&)>;

/// Every (n, instance, algorithm, theta) cell, sorted by that key. Runs that
/// hit max_iters count as max_iters and are excluded from the tau minimum.
std::vector<SweepRecord> theta_sweep(const ExperimentConfig& config, const ProgressFn& progress = {});

/// Per (algorithm, n): the grid theta minimising the median over instances of
/// mean_iterations; ties go to the theta closest to 1.
std::vector<BestTheta> best_theta(std::span<const SweepRecord> records);

/// Runs each algorithm at its best theta and records the Pierra angle.
std::vector<CompareRecord> compare(const ExperimentConfig& config, std::span<const BestTheta> best,
                                   const ProgressFn& progress = {});

std::vector<AggregateRecord> aggregate_by_n(std::span<const CompareRecord> records);

double median(std::vector<double> values);

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace gdr
