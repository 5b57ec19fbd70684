#pragma once

#include "gdr/graph.hpp"
#include "gdr/subspace.hpp"

#include <vector>

namespace gdr {

/// Parameters of one run. Construction rejects theta outside (0, 2),
/// non-positive tolerances and max_iters < 1.
class RunConfig {
public:
    explicit RunConfig(double theta, double tol = 1e-6, long max_iters = 1'000'000, bool trace = false);

    double theta() const noexcept { return theta_; }
    double tol() const noexcept { return tol_; }
    long max_iters() const noexcept { return max_iters_; }
    bool trace() const noexcept { return trace_; }

private:
    double theta_;
    double tol_;
    long max_iters_;
    bool trace_;
};

/**
 * Governing and shadow blocks at iteration k.
 *
 * Blocks are stored as matrix columns: v is p x (n-1) (column j is v_j),
 * x is p x n (column i is x_i).
 */
struct IterationState {
    Matrix v;
    Matrix x;
    long k = 0;

    /// State at k = 0. The shadows start at zero; the first sweep never reads
    /// them because node 1 has no in-neighbours.
    static IterationState initial(const Matrix& v0, Eigen::Index n);
};

struct RunResult {
    long iterations = 0;
    bool converged = false;
    double final_residual = 0.0;  ///< ||v^k - v*|| (stacked Euclidean norm)
    Vector x_final;               ///< shadow x_1 at termination
    Matrix shadows;               ///< all shadows x_1..x_n at termination
    Matrix v_final;
    std::vector<double> residuals;  ///< one entry per k = 0..iterations when tracing
};

/// One full sweep of the graph-based DR recurrence; nodes are visited in order
/// so in-neighbour sums use the freshly updated shadows.
IterationState graph_dr_step(const Problem& problem, const SplittingOperator& op, double theta,
                             IterationState state);

/// In-place variant used by the run loop.
void graph_dr_sweep(const Problem& problem, const SplittingOperator& op, double theta,
                    IterationState& state);

struct ClassicalStep {
    Vector x1;
    Vector x2;
    Vector v_next;
};

/// x1 = P_U1 v, x2 = P_U2(2 x1 - v), v_next = v + theta (x2 - x1).
ClassicalStep classical_dr_step(const Subspace& u1, const Subspace& u2, double theta,
                                const Vector& v);

/// Iterates until ||v^k - v*|| < tol, checked after every full sweep (and
/// once before the first). Hitting max_iters returns converged = false.
RunResult run(const Problem& problem, const SplittingOperator& op, const RunConfig& config,
              const Matrix& v0, const Matrix& v_star);

/// Fallback when no limit is available: stops once ||v^{k+1} - v^k|| < tol.
/// `final_residual` then holds the last step length.
RunResult run_until_stationary(const Problem& problem, const SplittingOperator& op,
                               const RunConfig& config, const Matrix& v0);

struct SpiralPoint {
    long k = 0;
    Eigen::Vector2d v;
    Eigen::Vector2d x1;  ///< shadows evaluated at v^k
    Eigen::Vector2d x2;
    double dist_v = 0.0;  ///< ||v^k - v*||
    double dist_x = 0.0;  ///< ||x1 - x*||
};

struct SpiralDemo {
    RunResult result;
    std::vector<SpiralPoint> points;  ///< iterations + 1 rows
};

inline constexpr double kSpiralDefaultAngle = 0.5235987755982988;  // pi/6

/// Classical DR (theta = 1, tol = 1e-6) on the x-axis and the line at
/// `angle` through the origin, started from v0 = (0.3, 1).
SpiralDemo demo_spiral(double angle = kSpiralDefaultAngle);

}  // namespace gdr
