#include "gdr/engine.hpp"

#include "gdr/errors.hpp"
#include "gdr/limits.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gdr {
namespace {

void check_dims(const Problem& problem, const SplittingOperator& op, const Matrix& v) {
    const auto n = static_cast<Eigen::Index>(problem.size());
    if (op.size() != n) {
        throw InvalidInput("graph has " + std::to_string(op.size()) + " nodes but the problem has " +
                           std::to_string(n) + " subspaces");
    }
    if (v.rows() != problem.ambient_dim() || v.cols() != n - 1) {
        throw InvalidInput("governing blocks must be p x (n-1)");
    }
}

}  // namespace

RunConfig::RunConfig(double theta, double tol, long max_iters, bool trace)
    : theta_(theta), tol_(tol), max_iters_(max_iters), trace_(trace) {
    if (!(theta > 0.0 && theta < 2.0)) {
        throw InvalidInput("relaxation parameter must lie in (0, 2), got " + std::to_string(theta));
    }
    if (!(tol > 0.0)) {
        throw InvalidInput("tolerance must be positive");
    }
    if (max_iters < 1) {
        throw InvalidInput("max_iters must be at least 1");
    }
}

IterationState IterationState::initial(const Matrix& v0, Eigen::Index n) {
    return {v0, Matrix::Zero(v0.rows(), n), 0};
}

void graph_dr_sweep(const Problem& problem, const SplittingOperator& op, double theta,
                    IterationState& state) {
    check_dims(problem, op, state.v);
    const Eigen::Index n = op.size();
    if (state.x.rows() != state.v.rows() || state.x.cols() != n) {
        throw InvalidInput("shadow blocks must be p x n");
    }
    Vector arg(state.v.rows());
    for (Eigen::Index i = 0; i < n; ++i) {
        const double inv_d = 1.0 / op.d[i];
        arg.noalias() = state.v * op.z.row(i).transpose();
        arg *= inv_d;
        for (const int h : op.in_neighbors[i]) {
            arg += (2.0 * inv_d) * state.x.col(h);
        }
        state.x.col(i) = project(problem[static_cast<std::size_t>(i)], arg);
    }
    state.v.noalias() -= theta * (state.x * op.z);
    ++state.k;
}

IterationState graph_dr_step(const Problem& problem, const SplittingOperator& op, double theta,
                             IterationState state) {
    graph_dr_sweep(problem, op, theta, state);
    return state;
}

ClassicalStep classical_dr_step(const Subspace& u1, const Subspace& u2, double theta,
                                const Vector& v) {
    if (u1.ambient_dim() != u2.ambient_dim() || v.size() != u1.ambient_dim()) {
        throw InvalidInput("classical_dr_step: dimension mismatch");
    }
    ClassicalStep step;
    step.x1 = project(u1, v);
    step.x2 = project(u2, 2.0 * step.x1 - v);
    step.v_next = v + theta * (step.x2 - step.x1);
    return step;
}

RunResult run(const Problem& problem, const SplittingOperator& op, const RunConfig& config,
              const Matrix& v0, const Matrix& v_star) {
    check_dims(problem, op, v0);
    if (v_star.rows() != v0.rows() || v_star.cols() != v0.cols()) {
        throw InvalidInput("run: limit blocks do not match the starting blocks");
    }
    IterationState state = IterationState::initial(v0, op.size());
    RunResult result;
    double residual = (state.v - v_star).norm();
    if (config.trace()) {
        result.residuals.push_back(residual);
    }
    while (!(residual < config.tol()) && state.k < config.max_iters()) {
        graph_dr_sweep(problem, op, config.theta(), state);
        residual = (state.v - v_star).norm();
        if (config.trace()) {
            result.residuals.push_back(residual);
        }
    }
    result.iterations = state.k;
    result.converged = residual < config.tol();
    result.final_residual = residual;
    result.x_final = state.x.col(0);
    result.shadows = std::move(state.x);
    result.v_final = std::move(state.v);
    return result;
}

RunResult run_until_stationary(const Problem& problem, const SplittingOperator& op,
                               const RunConfig& config, const Matrix& v0) {
    check_dims(problem, op, v0);
    IterationState state = IterationState::initial(v0, op.size());
    RunResult result;
    double step = std::numeric_limits<double>::infinity();
    Matrix previous;
    while (!(step < config.tol()) && state.k < config.max_iters()) {
        previous = state.v;
        graph_dr_sweep(problem, op, config.theta(), state);
        step = (state.v - previous).norm();
        if (config.trace()) {
            result.residuals.push_back(step);
        }
    }
    result.iterations = state.k;
    result.converged = step < config.tol();
    result.final_residual = step;
    result.x_final = state.x.col(0);
    result.shadows = std::move(state.x);
    result.v_final = std::move(state.v);
    return result;
}

SpiralDemo demo_spiral(double angle) {
    if (!(angle > 0.0 && angle < std::numbers::pi / 2)) {
        throw InvalidInput("demo_spiral: angle must lie in (0, pi/2)");
    }
    const Subspace u1 = orthonormalize(Eigen::Vector2d(1.0, 0.0));
    const Subspace u2 = orthonormalize(Eigen::Vector2d(std::cos(angle), std::sin(angle)));
    const Eigen::Vector2d v0(0.3, 1.0);
    const RunConfig config(1.0, 1e-6, 100'000, true);

    const Vector v_star = dr_limit_two(u1, u2, v0);
    const Vector x_star = project(u1, v_star);

    SpiralDemo demo;
    Vector v = v0;
    for (long k = 0;; ++k) {
        const ClassicalStep step = classical_dr_step(u1, u2, config.theta(), v);
        SpiralPoint point;
        point.k = k;
        point.v = v;
        point.x1 = step.x1;
        point.x2 = step.x2;
        point.dist_v = (v - v_star).norm();
        point.dist_x = (step.x1 - x_star).norm();
        demo.points.push_back(point);
        demo.result.residuals.push_back(point.dist_v);
        if (point.dist_v < config.tol() || k >= config.max_iters()) {
            demo.result.iterations = k;
            demo.result.converged = point.dist_v < config.tol();
            demo.result.final_residual = point.dist_v;
            demo.result.x_final = step.x1;
            demo.result.v_final = v;
            break;
        }
        v = step.v_next;
    }
    return demo;
}

}  // namespace gdr
