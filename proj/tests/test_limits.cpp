#include "gdr/engine.hpp"
#include "gdr/errors.hpp"
#include "gdr/graph.hpp"
#include "gdr/limits.hpp"
#include "support.hpp"

#include <doctest.h>

#include <Eigen/Dense>

using namespace gdr;
using gdr::test::span_of;
using gdr::test::vec;

namespace {

/// Subspaces of R^p that all contain a shared random core of dimension r.
Problem cored_problem(Eigen::Index p, int n, Eigen::Index r, Eigen::Index extra, Rng& rng) {
    const Matrix core = gaussian_matrix(p, r, rng);
    std::vector<Subspace> list;
    for (int i = 0; i < n; ++i) {
        Matrix span(p, r + extra);
        span << core, gaussian_matrix(p, extra, rng);
        list.push_back(orthonormalize(span));
    }
    return Problem(std::move(list));
}

Vector flat(const Matrix& m) { return m.reshaped(); }

/// The pn x p(n-1) constraint matrix with blocks Z_ij B_i B_i^T, assembled directly.
Matrix constraint_matrix(const Problem& problem, const SplittingOperator& op) {
    const Eigen::Index p = problem.ambient_dim();
    const int n = op.size();
    Matrix c = Matrix::Zero(p * n, p * (n - 1));
    for (int i = 0; i < n; ++i) {
        const Matrix& b = problem[static_cast<std::size_t>(i)].basis();
        const Matrix proj = b * b.transpose();
        for (int j = 0; j < n - 1; ++j) {
            c.block(i * p, j * p, p, p) = op.z(i, j) * proj;
        }
    }
    return c;
}

/// Shadow and governing limits from a long iteration.
std::pair<Vector, Matrix> reference_limits(const Problem& problem, const SplittingOperator& op, const Matrix& v0,
                                           int sweeps) {
    auto state = IterationState::initial(v0, op.size());
    for (int k = 0; k < sweeps; ++k) {
        graph_dr_sweep(problem, op, 1.0, state);
    }
    return {state.x.col(0), state.v};
}

}  // namespace

TEST_CASE("E for whole-space sets is trivial") {
    const Problem problem({Subspace::full(4), Subspace::full(4)});
    const auto op = build_operator(build_named(GraphName::sequential, 2));
    CHECK(build_e(problem, op).is_trivial());
}

TEST_CASE("E for two lines is the intersection of their complements") {
    const Subspace u1 = span_of({{1, 0, 0}});
    const Subspace u2 = span_of({{1, 1, 0}});
    const Problem problem({u1, u2});
    const auto op = build_operator(build_named(GraphName::sequential, 2));
    const Subspace e = build_e(problem, op);
    const Subspace perps[] = {complement(u1), complement(u2)};
    CHECK(test::same_span(e, intersect_many(perps)));
    CHECK(e.dim() == 1);
}

TEST_CASE("E has the dimension given by rank-nullity and satisfies its constraint") {
    Rng rng(19);
    for (const auto name : kNamedGraphs) {
        for (const int n : {3, 5}) {
            const Problem problem = test::random_problem(8, n, 2, 6, rng);
            const auto op = build_operator(build_named(name, n));
            const Subspace e = build_e(problem, op);
            const Matrix c = constraint_matrix(problem, op);
            Eigen::JacobiSVD<Matrix> svd(c);
            const Eigen::Index rank = (svd.singularValues().array() > 1e-10 * svd.singularValues()(0)).count();
            CAPTURE(to_string(name));
            CAPTURE(n);
            CHECK(e.dim() == c.cols() - rank);
            for (Eigen::Index col = 0; col < e.dim(); ++col) {
                const Matrix blocks = e.basis().col(col).reshaped(8, n - 1);
                double worst = 0.0;
                for (int i = 0; i < n; ++i) {
                    const Vector combo = blocks * op.z.row(i).transpose();
                    worst = std::max(worst, project(problem[static_cast<std::size_t>(i)], combo).norm());
                }
                CHECK(worst <= 1e-9);
            }
        }
    }
}

TEST_CASE("two-node limits match the two-set formula") {
    Rng rng(23);
    const auto op = build_operator(build_named(GraphName::sequential, 2));
    for (int trial = 0; trial < 10; ++trial) {
        const Problem problem = cored_problem(7, 2, trial % 3, 2, rng);
        const Vector v0 = gaussian_matrix(7, 1, rng).col(0);
        const auto limits = explicit_limits(problem, op, v0.reshaped(7, 1));
        CHECK((limits.v_star.col(0) - dr_limit_two(problem[0], problem[1], v0)).norm() <= 1e-10);
        // The shadow limit of classical DR is the projection of v0 onto the intersection.
        const Subspace cap = intersect_many(problem.subspaces());
        CHECK((limits.x_star - project(cap, v0)).norm() <= 1e-10);
    }
}

TEST_CASE("two transverse lines give zero limits") {
    const Problem problem({span_of({{1, 0}}), span_of({{1, 1}})});
    const auto op = build_operator(build_named(GraphName::sequential, 2));
    const auto limits = explicit_limits(problem, op, vec({0.4, -1.2}).reshaped(2, 1));
    CHECK(limits.x_star.norm() < 1e-14);
    CHECK(limits.v_star.norm() < 1e-14);
}

TEST_CASE("zero start gives zero limits") {
    Rng rng(29);
    const Problem problem = cored_problem(9, 4, 2, 3, rng);
    for (const auto name : kNamedGraphs) {
        const auto limits = explicit_limits(problem, build_operator(build_named(name, 4)), Matrix::Zero(9, 3));
        CHECK(limits.x_star.norm() == 0.0);
        CHECK(limits.v_star.norm() == 0.0);
    }
}

TEST_CASE("limit data invariants") {
    Rng rng(31);
    for (const auto name : kNamedGraphs) {
        const int n = 4;
        const Problem problem = cored_problem(10, n, 2, 3, rng);
        const auto op = build_operator(build_named(name, n));
        const Matrix v0 = gaussian_matrix(10, n - 1, rng);
        const LimitOracle oracle(problem, op);
        const auto limits = oracle.limits(v0);
        CHECK(limits.x_star.norm() > 1e-3);
        for (const auto& u : problem.subspaces()) {
            CHECK((limits.x_star - project(u, limits.x_star)).norm() <= 1e-8);
        }
        CHECK((limits.alpha - op.alpha).norm() == 0.0);
        CHECK(oracle.intersection().dim() == 2);
        // v* minus its diagonal part lies in E.
        const Vector shift = flat(limits.v_star - limits.x_star * (-op.alpha).transpose());
        CHECK((shift - project(*limits.e_space, shift)).norm() <= 1e-8);
    }
}

TEST_CASE("closed-form limits agree with long iteration") {
    Rng rng(37);
    for (const auto name : kNamedGraphs) {
        for (const int n : {3, 5}) {
            for (const Eigen::Index p : {10, 20}) {
                for (const Eigen::Index core : {0, 2}) {
                    const Problem problem = core == 0 ? test::random_problem(p, n, p / 4, 3 * p / 4, rng)
                                                      : cored_problem(p, n, core, p / 3, rng);
                    const auto op = build_operator(build_named(name, n));
                    const Matrix v0 = gaussian_matrix(p, n - 1, rng);
                    const auto limits = explicit_limits(problem, op, v0);
                    const auto result = run(problem, op, RunConfig(1.0, 1e-10, 200000), v0, limits.v_star);
                    CAPTURE(to_string(name));
                    CAPTURE(n);
                    CAPTURE(p);
                    CAPTURE(core);
                    REQUIRE(result.converged);
                    CHECK((result.v_final - limits.v_star).norm() <= 1e-8);
                    for (Eigen::Index i = 0; i < n; ++i) {
                        CHECK((result.shadows.col(i) - limits.x_star).norm() <= 1e-6);
                    }
                }
            }
        }
    }
}

TEST_CASE("shadow limit sign is confirmed by a reference iteration") {
    Rng rng(41);
    const Problem problem = cored_problem(6, 3, 1, 2, rng);
    for (const auto name : kNamedGraphs) {
        const auto op = build_operator(build_named(name, 3));
        const Matrix v0 = gaussian_matrix(6, 2, rng);
        const auto [x_ref, v_ref] = reference_limits(problem, op, v0, 20000);
        const auto limits = explicit_limits(problem, op, v0);
        CHECK(x_ref.norm() > 1e-3);
        CHECK((x_ref - limits.x_star).norm() <= 1e-8);
        CHECK((v_ref - limits.v_star).norm() <= 1e-8);
    }
}

TEST_CASE("zero alpha is reported") {
    const Problem problem({Subspace::full(2), Subspace::full(2)});
    auto op = build_operator(build_named(GraphName::sequential, 2));
    op.alpha.setZero();
    CHECK_THROWS_AS(LimitOracle(problem, op), DegenerateAlpha);
}

TEST_CASE("two-set limit on hand cases") {
    const Subspace x_axis = span_of({{1, 0}});
    const Subspace diagonal = span_of({{1, 1}});
    CHECK(dr_limit_two(x_axis, diagonal, vec({1, 0})).norm() < 1e-15);
    const Vector v0 = vec({0.7, -2.0});
    CHECK((dr_limit_two(diagonal, diagonal, v0) - v0).norm() < 1e-14);
    CHECK_THROWS_AS(dr_limit_two(x_axis, span_of({{1, 0, 0}}), v0), InvalidInput);
}

TEST_CASE("two-set limit matches a long classical run") {
    Rng rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        const Subspace u1 = random_subspace(10, 1 + trial, rng);
        const Subspace u2 = random_subspace(10, 9 - trial, rng);
        Vector v = gaussian_matrix(10, 1, rng).col(0);
        const Vector limit = dr_limit_two(u1, u2, v);
        for (int k = 0; k < 20000; ++k) {
            v = classical_dr_step(u1, u2, 1.0, v).v_next;
        }
        CHECK((v - limit).norm() <= 1e-8);
    }
}
