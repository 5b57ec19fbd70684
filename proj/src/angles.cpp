#include "gdr/angles.hpp"

#include "gdr/errors.hpp"
#include "svd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace gdr {
namespace {

Subspace deflate(const Subspace& s, const Subspace& common_perp) {
    return orthonormalize(s.ambient_dim(), project_columns(common_perp, s.basis()), kRankTol);
}

}  // namespace

AngleReport friedrichs(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim()) {
        throw InvalidInput("friedrichs: mismatched ambient dimensions");
    }
    const std::array<Subspace, 2> pair{s1, s2};
    const Subspace common_perp = complement(intersect_many(pair));
    const Subspace r1 = deflate(s1, common_perp);
    const Subspace r2 = deflate(s2, common_perp);

    AngleReport report;
    report.deflated_dims = {r1.dim(), r2.dim()};
    if (r1.is_trivial() || r2.is_trivial()) {
        report.cos_f = 0.0;
        report.angle_rad = std::numbers::pi / 2;
        return report;
    }
    const Matrix cross = r1.basis().transpose() * r2.basis();
    const double c = std::clamp(detail::singular_values(cross)(0), 0.0, 1.0);
    if (c >= 1.0 - 1e-12) {
        throw Degeneracy("friedrichs: deflated subspaces share a direction numerically");
    }
    report.cos_f = c;
    report.angle_rad = std::acos(c);
    return report;
}

ProductPair pierra_product(const Problem& problem) {
    const Eigen::Index p = problem.ambient_dim();
    const auto n = static_cast<Eigen::Index>(problem.size());
    Eigen::Index total = 0;
    for (const auto& s : problem.subspaces()) {
        total += s.dim();
    }
    Matrix product = Matrix::Zero(p * n, total);
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& b = problem[static_cast<std::size_t>(i)].basis();
        product.block(i * p, col, p, b.cols()) = b;
        col += b.cols();
    }
    Matrix diagonal(p * n, p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        diagonal.block(i * p, 0, p, p) = scale * Matrix::Identity(p, p);
    }
    return {Subspace::from_orthonormal(std::move(product)),
            Subspace::from_orthonormal(std::move(diagonal))};
}

AngleReport pierra_angle(const Problem& problem) {
    const ProductPair pair = pierra_product(problem);
    return friedrichs(pair.product, pair.diagonal);
}

}  // namespace gdr
