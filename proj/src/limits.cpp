#include "gdr/limits.hpp"

#include "gdr/errors.hpp"

#include <array>

namespace gdr {

Subspace build_e(const Problem& problem, const SplittingOperator& op) {
    const Eigen::Index p = problem.ambient_dim();
    const Eigen::Index n = static_cast<Eigen::Index>(problem.size());
    if (op.size() != n) {
        throw InvalidInput("build_e: graph size does not match the problem");
    }
    // Row space of the constraint map, assembled directly as its transpose.
    Matrix constraint_t(p * (n - 1), p * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Matrix proj = problem[static_cast<std::size_t>(i)].projector();
        for (Eigen::Index j = 0; j < n - 1; ++j) {
            constraint_t.block(j * p, i * p, p, p) = op.z(i, j) * proj;
        }
    }
    return complement(orthonormalize(p * (n - 1), constraint_t, kRankTol));
}

LimitOracle::LimitOracle(const Problem& problem, const SplittingOperator& op)
    : p_(problem.ambient_dim()),
      blocks_(static_cast<Eigen::Index>(problem.size()) - 1),
      alpha_(op.alpha),
      intersection_(intersect_many(problem.subspaces())),
      e_space_(std::make_shared<const Subspace>(build_e(problem, op))) {
    if (alpha_.size() != blocks_) {
        throw InvalidInput("limit oracle: alpha length does not match the problem");
    }
    if (alpha_.squaredNorm() == 0.0) {
        throw DegenerateAlpha("limit oracle: alpha is zero, shadow limit formula is undefined");
    }
}

LimitData LimitOracle::limits(const Matrix& v0) const {
    if (v0.rows() != p_ || v0.cols() != blocks_) {
        throw InvalidInput("limit oracle: starting blocks must be p x (n-1)");
    }
    const Vector a = -alpha_;
    const Vector weighted = v0 * a / a.squaredNorm();

    LimitData data;
    data.alpha = alpha_;
    data.e_space = e_space_;
    data.x_star = project(intersection_, weighted);

    const Eigen::Map<const Vector> stacked(v0.data(), v0.size());
    Vector pe = project(*e_space_, stacked);
    data.v_star = Eigen::Map<Matrix>(pe.data(), p_, blocks_);
    data.v_star += data.x_star * a.transpose();
    return data;
}

LimitData explicit_limits(const Problem& problem, const SplittingOperator& op, const Matrix& v0) {
    return LimitOracle(problem, op).limits(v0);
}

Vector dr_limit_two(const Subspace& u1, const Subspace& u2, const Vector& v0) {
    if (u1.ambient_dim() != u2.ambient_dim() || v0.size() != u1.ambient_dim()) {
        throw InvalidInput("dr_limit_two: dimension mismatch");
    }
    const std::array<Subspace, 2> both{u1, u2};
    const std::array<Subspace, 2> perps{complement(u1), complement(u2)};
    return project(intersect_many(both), v0) + project(intersect_many(perps), v0);
}

}  // namespace gdr
