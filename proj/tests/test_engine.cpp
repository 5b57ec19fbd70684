#include "gdr/engine.hpp"
#include "gdr/errors.hpp"
#include "gdr/graph.hpp"
#include "gdr/limits.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace gdr;
using gdr::test::span_of;
using gdr::test::vec;

namespace {

Matrix column(const Vector& v) {
    Matrix m(v.size(), 1);
    m.col(0) = v;
    return m;
}

}  // namespace

TEST_CASE("RunConfig validation") {
    CHECK_NOTHROW(RunConfig(1.0));
    CHECK_NOTHROW(RunConfig(1.999));
    CHECK_THROWS_AS(RunConfig(0.0), InvalidInput);
    CHECK_THROWS_AS(RunConfig(2.0), InvalidInput);
    CHECK_THROWS_AS(RunConfig(-0.5), InvalidInput);
    CHECK_THROWS_AS(RunConfig(1.0, 0.0), InvalidInput);
    CHECK_THROWS_AS(RunConfig(1.0, 1e-6, 0), InvalidInput);
    const RunConfig c(1.5, 1e-8, 10, true);
    CHECK(c.theta() == 1.5);
    CHECK(c.tol() == 1e-8);
    CHECK(c.max_iters() == 10);
    CHECK(c.trace());
}

TEST_CASE("one sweep with two nodes on hand-computed lines") {
    const Problem problem({span_of({{1, 0}}), span_of({{1, 1}})});
    const auto op = build_operator(build_named(GraphName::sequential, 2));
    const auto next = graph_dr_step(problem, op, 1.0, IterationState::initial(column(vec({1, 0})), 2));
    CHECK(next.k == 1);
    CHECK((next.x.col(0) - vec({1, 0})).norm() < 1e-15);
    CHECK((next.x.col(1) - vec({0.5, 0.5})).norm() < 1e-15);
    CHECK((next.v.col(0) - vec({0.5, 0.5})).norm() < 1e-15);

    const auto classical = classical_dr_step(problem[0], problem[1], 1.0, vec({1, 0}));
    CHECK((classical.x1 - vec({1, 0})).norm() < 1e-15);
    CHECK((classical.x2 - vec({0.5, 0.5})).norm() < 1e-15);
    CHECK((classical.v_next - vec({0.5, 0.5})).norm() < 1e-15);
}

TEST_CASE("classical step on hand cases") {
    const Subspace line = span_of({{1, 2}});
    const Vector v = vec({2, 4});
    const auto same = classical_dr_step(line, line, 0.7, v);
    CHECK((same.x1 - v).norm() < 1e-14);
    CHECK((same.x2 - v).norm() < 1e-14);
    CHECK((same.v_next - v).norm() < 1e-14);

    const auto ortho = classical_dr_step(span_of({{1, 0}}), span_of({{0, 1}}), 1.0, vec({1, 0}));
    CHECK((ortho.x1 - vec({1, 0})).norm() < 1e-15);
    CHECK(ortho.x2.norm() < 1e-15);
    CHECK(ortho.v_next.norm() < 1e-15);

    CHECK_THROWS_AS(classical_dr_step(line, span_of({{1, 0, 0}}), 1.0, v), InvalidInput);
}

TEST_CASE("a limit point stays fixed") {
    Rng rng(8);
    for (const auto name : kNamedGraphs) {
        const Problem problem = test::random_problem(12, 4, 3, 9, rng);
        const auto op = build_operator(build_named(name, 4));
        const Matrix v0 = gaussian_matrix(12, 3, rng);
        const auto limits = explicit_limits(problem, op, v0);
        auto state = IterationState::initial(limits.v_star, 4);
        state.x = gaussian_matrix(12, 4, rng);
        const auto next = graph_dr_step(problem, op, 1.3, state);
        CHECK((next.v - limits.v_star).norm() < 1e-10);
    }
}

TEST_CASE("whole-space sets with a zero start stay at zero") {
    const Problem problem({Subspace::full(3), Subspace::full(3), Subspace::full(3)});
    const auto op = build_operator(build_named(GraphName::complete, 3));
    auto state = IterationState::initial(Matrix::Zero(3, 2), 3);
    for (int k = 0; k < 5; ++k) {
        state = graph_dr_step(problem, op, 0.4, state);
    }
    CHECK(state.v.norm() == 0.0);
    CHECK(state.x.norm() == 0.0);
}

TEST_CASE("dimension mismatches are rejected") {
    const Problem problem({Subspace::full(3), Subspace::full(3), Subspace::full(3)});
    const auto op4 = build_operator(build_named(GraphName::complete, 4));
    CHECK_THROWS_AS(graph_dr_step(problem, op4, 1.0, IterationState::initial(Matrix::Zero(3, 3), 4)),
                    InvalidInput);
    const auto op3 = build_operator(build_named(GraphName::complete, 3));
    CHECK_THROWS_AS(graph_dr_step(problem, op3, 1.0, IterationState::initial(Matrix::Zero(2, 2), 3)),
                    InvalidInput);
    CHECK_THROWS_AS(run(problem, op3, RunConfig(1.0), Matrix::Zero(3, 2), Matrix::Zero(3, 3)), InvalidInput);
}

TEST_CASE("two nodes reproduce classical DR") {
    Rng rng(101);
    const auto op = build_operator(build_named(GraphName::sequential, 2));
    std::uniform_real_distribution<double> theta_dist(0.05, 1.95);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index p = 3 + trial % 8;
        std::uniform_int_distribution<Eigen::Index> dim(1, p - 1);
        const Problem problem({random_subspace(p, dim(rng), rng), random_subspace(p, dim(rng), rng)});
        const double theta = theta_dist(rng);
        Vector v = gaussian_matrix(p, 1, rng).col(0);
        auto state = IterationState::initial(column(v), 2);
        for (int k = 0; k < 50; ++k) {
            const auto classical = classical_dr_step(problem[0], problem[1], theta, v);
            graph_dr_sweep(problem, op, theta, state);
            CHECK((state.x.col(0) - classical.x1).norm() <= 1e-14);
            CHECK((state.x.col(1) - classical.x2).norm() <= 1e-14);
            CHECK((state.v.col(0) - classical.v_next).norm() <= 1e-14);
            v = classical.v_next;
        }
    }
}

TEST_CASE("x-iterates do not depend on the choice of Z") {
    Rng rng(55);
    for (const auto name : kNamedGraphs) {
        const int n = 5;
        const Problem problem = test::random_problem(10, n, 3, 7, rng);
        const auto op = build_operator(build_named(name, n));
        auto rotated = op;
        const Matrix o = test::random_orthogonal(n - 1, rng);
        rotated.z = op.z * o;
        const Matrix v0 = gaussian_matrix(10, n - 1, rng);
        const Matrix v_star = explicit_limits(problem, op, v0).v_star;
        auto a = IterationState::initial(v0, n);
        auto b = IterationState::initial(v0 * o, n);
        for (int k = 0; k < 20; ++k) {
            graph_dr_sweep(problem, op, 0.8, a);
            graph_dr_sweep(problem, rotated, 0.8, b);
            CHECK((a.x - b.x).norm() <= 1e-12);
            CHECK(std::abs((a.v - v_star).norm() - (b.v - v_star * o).norm()) <= 1e-12);
        }
    }
}

TEST_CASE("distance to the governing limit never increases") {
    Rng rng(303);
    for (const auto name : kNamedGraphs) {
        for (const double theta : {0.2, 1.0, 1.8}) {
            const Problem problem = test::random_problem(10, 4, 2, 8, rng);
            const auto op = build_operator(build_named(name, 4));
            const Matrix v0 = gaussian_matrix(10, 3, rng);
            const auto limits = explicit_limits(problem, op, v0);
            const auto result = run(problem, op, RunConfig(theta, 1e-9, 20000, true), v0, limits.v_star);
            CAPTURE(to_string(name));
            CAPTURE(theta);
            REQUIRE(result.converged);
            REQUIRE(result.residuals.size() == static_cast<std::size_t>(result.iterations) + 1);
            for (std::size_t k = 1; k < result.residuals.size(); ++k) {
                CHECK(result.residuals[k] <= result.residuals[k - 1] + 1e-12);
            }
        }
    }
}

TEST_CASE("run bookkeeping") {
    Rng rng(4);
    const Problem problem = test::random_problem(8, 3, 2, 6, rng);
    const auto op = build_operator(build_named(GraphName::complete, 3));
    const Matrix v0 = gaussian_matrix(8, 2, rng);
    const auto limits = explicit_limits(problem, op, v0);

    const auto at_limit = run(problem, op, RunConfig(1.0), limits.v_star, limits.v_star);
    CHECK(at_limit.iterations == 0);
    CHECK(at_limit.converged);

    const auto capped = run(problem, op, RunConfig(1.0, 1e-12, 3), v0, limits.v_star);
    CHECK_FALSE(capped.converged);
    CHECK(capped.iterations == 3);

    const auto a = run(problem, op, RunConfig(1.0), v0, limits.v_star);
    const auto b = run(problem, op, RunConfig(1.0), v0, limits.v_star);
    CHECK(a.converged);
    CHECK(a.final_residual < 1e-6);
    CHECK(a.iterations == b.iterations);
    CHECK(a.final_residual == b.final_residual);
    CHECK(a.v_final == b.v_final);
    CHECK(a.shadows == b.shadows);
    CHECK(a.x_final == a.shadows.col(0));

    // Shadows are feasible for their own set and close to each other.
    for (Eigen::Index i = 0; i < 3; ++i) {
        const Vector xi = a.shadows.col(i);
        CHECK((xi - project(problem[static_cast<std::size_t>(i)], xi)).norm() <= 1e-5);
        CHECK((xi - a.x_final).norm() <= 1e-3);
    }
}

TEST_CASE("two lines at angle pi/3 contract by one half per iteration") {
    const double phi = std::numbers::pi / 3;
    const Problem problem({span_of({{1, 0}}), span_of({{std::cos(phi), std::sin(phi)}})});
    const auto op = build_operator(build_named(GraphName::sequential, 2));
    const Matrix v0 = column(vec({0.3, 1.0}));
    const Matrix v_star = Matrix::Zero(2, 1);
    const auto result = run(problem, op, RunConfig(1.0, 1e-6), v0, v_star);
    const double predicted = std::log(1e-6 / v0.norm()) / std::log(0.5);
    CHECK(result.converged);
    CHECK(std::abs(static_cast<double>(result.iterations) - predicted) <= 1.0);
}

TEST_CASE("stationary fallback stops on small steps") {
    Rng rng(6);
    const Problem problem = test::random_problem(8, 3, 2, 6, rng);
    const auto op = build_operator(build_named(GraphName::sequential, 3));
    const Matrix v0 = gaussian_matrix(8, 2, rng);
    const auto result = run_until_stationary(problem, op, RunConfig(1.0, 1e-9), v0);
    CHECK(result.converged);
    CHECK(result.final_residual < 1e-9);
    const auto limits = explicit_limits(problem, op, v0);
    CHECK((result.v_final - limits.v_star).norm() < 1e-6);
}

TEST_CASE("spiral demo trace") {
    const auto demo = demo_spiral();
    REQUIRE(demo.result.converged);
    REQUIRE(demo.points.size() == static_cast<std::size_t>(demo.result.iterations) + 1);
    CHECK((demo.points.front().v - Eigen::Vector2d(0.3, 1.0)).norm() == 0.0);
    for (std::size_t k = 1; k < demo.points.size(); ++k) {
        CHECK(demo.points[k].k == static_cast<long>(k));
        CHECK(demo.points[k].dist_v < demo.points[k - 1].dist_v);
    }
    CHECK(demo.points.back().dist_v < 1e-6);

    bool rises = false;
    const auto narrow = demo_spiral(std::numbers::pi / 12);
    for (std::size_t k = 1; k < narrow.points.size(); ++k) {
        rises = rises || narrow.points[k].dist_x > narrow.points[k - 1].dist_x;
    }
    CHECK(rises);

    CHECK_THROWS_AS(demo_spiral(0.0), InvalidInput);
    CHECK_THROWS_AS(demo_spiral(std::numbers::pi / 2), InvalidInput);
}
