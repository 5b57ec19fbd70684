#pragma once

#include "gdr/graph.hpp"
#include "gdr/subspace.hpp"

#include <memory>

namespace gdr {

/// Closed-form limits of one run. v_star is p x (n-1), column j is v_j*.
struct LimitData {
    Vector x_star;
    Matrix v_star;
    Vector alpha;
    std::shared_ptr<const Subspace> e_space;  ///< E, a subspace of R^{p(n-1)}
};

/**
 * The subspace E of governing tuples (e_1..e_{n-1}) with
 * sum_j Z_ij e_j in U_i^perp for every i.
 *
 * Tuples are stacked block by block, i.e. the column-major flattening of a
 * p x (n-1) matrix. Computed as the null space of the pn x p(n-1) map with
 * blocks Z_ij P_{U_i}.
 */
Subspace build_e(const Problem& problem, const SplittingOperator& op);

/**
 * Precomputes E and the intersection of the U_i for one (problem, graph)
 * pair so limits for many starting points cost two projections each.
 *
 * With a = -alpha (the sign that makes the limit a fixed point of the
 * recurrence as written, where the v-update subtracts theta Z^T x):
 *   x* = P_{cap U_i}( sum_j a_j v_j^0 / ||a||^2 )
 *   v* = (a_1 x*, ..., a_{n-1} x*) + P_E(v^0)
 * The governing limit coincides with (alpha_j x~) + P_E(v^0) for
 * x~ = P_cap(sum_j alpha_j v_j^0 / ||alpha||^2) = -x*.
 */
class LimitOracle {
public:
    LimitOracle(const Problem& problem, const SplittingOperator& op);

    LimitData limits(const Matrix& v0) const;

    const Subspace& e_space() const noexcept { return *e_space_; }
    const Subspace& intersection() const noexcept { return intersection_; }
    const Vector& alpha() const noexcept { return alpha_; }

private:
    Eigen::Index p_;
    Eigen::Index blocks_;
    Vector alpha_;
    Subspace intersection_;
    std::shared_ptr<const Subspace> e_space_;
};

/// One-shot convenience around LimitOracle. Throws DegenerateAlpha when
/// alpha = 0.
LimitData explicit_limits(const Problem& problem, const SplittingOperator& op, const Matrix& v0);

/// Two-set limit: P_{U1 cap U2}(v0) + P_{U1^perp cap U2^perp}(v0).
Vector dr_limit_two(const Subspace& u1, const Subspace& u2, const Vector& v0);

}  // namespace gdr
