#include "gdr/subspace.hpp"

#include "gdr/errors.hpp"
#include "svd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gdr {

Subspace::Subspace(Eigen::Index ambient_dim) : Subspace(ambient_dim, Matrix(ambient_dim, 0)) {}

Subspace::Subspace(Eigen::Index ambient_dim, Matrix basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_dim_ < 1) {
        throw InvalidInput("subspace: ambient dimension must be positive");
    }
}

Subspace Subspace::from_orthonormal(Matrix basis) {
    const Eigen::Index d = basis.cols();
    if (d > basis.rows()) {
        throw InvalidInput("subspace: more basis columns than ambient dimension");
    }
    if (d > 0) {
        const double err = (basis.transpose() * basis - Matrix::Identity(d, d)).norm();
        if (!(err <= 1e-12)) {
            throw InvalidInput("subspace: basis is not orthonormal (error " + std::to_string(err) + ")");
        }
    }
    const Eigen::Index p = basis.rows();
    return Subspace(p, std::move(basis));
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
    return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim));
}

Matrix Subspace::projector() const { return basis_ * basis_.transpose(); }

Problem::Problem(std::vector<Subspace> subspaces) : subspaces_(std::move(subspaces)) {
    if (subspaces_.size() < 2) {
        throw InvalidInput("problem: at least two subspaces are required");
    }
    const auto p = subspaces_.front().ambient_dim();
    for (const auto& s : subspaces_) {
        if (s.ambient_dim() != p) {
            throw InvalidInput("problem: subspaces live in different ambient spaces");
        }
    }
}

Subspace orthonormalize(const Matrix& vectors, double tol) {
    return orthonormalize(vectors.rows(), vectors, tol);
}

Subspace orthonormalize(Eigen::Index ambient_dim, const Matrix& vectors, double tol) {
    if (!(tol > 0)) {
        throw InvalidInput("orthonormalize: tolerance must be positive");
    }
    if (vectors.rows() != ambient_dim) {
        throw InvalidInput("orthonormalize: row count does not match ambient dimension");
    }
    if (!vectors.allFinite()) {
        throw InvalidInput("orthonormalize: non-finite input");
    }
    if (vectors.cols() == 0 || vectors.rows() == 0) {
        return Subspace(ambient_dim);
    }
    const detail::ThinSvd svd = detail::thin_svd(vectors);
    const Vector& sv = svd.sigma;
    const double cutoff = tol * sv(0);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) {
        ++rank;
    }
    if (sv(0) == 0.0) {
        rank = 0;
    }
    Matrix basis = svd.u.leftCols(rank);
    // QR pass keeps the 1e-12 orthonormality invariant at large p.
    if (rank > 0) {
        Eigen::HouseholderQR<Matrix> qr(basis);
        Matrix q = qr.householderQ() * Matrix::Identity(basis.rows(), rank);
        basis = std::move(q);
    }
    return Subspace::from_orthonormal(std::move(basis));
}

Vector project(const Subspace& s, const Eigen::Ref<const Vector>& x) {
    if (x.size() != s.ambient_dim()) {
        throw InvalidInput("project: vector length " + std::to_string(x.size()) +
                           " does not match ambient dimension " + std::to_string(s.ambient_dim()));
    }
    if (s.is_trivial()) {
        return Vector::Zero(x.size());
    }
    return s.basis() * (s.basis().transpose() * x);
}

Matrix project_columns(const Subspace& s, const Eigen::Ref<const Matrix>& x) {
    if (x.rows() != s.ambient_dim()) {
        throw InvalidInput("project: row count does not match ambient dimension");
    }
    if (s.is_trivial()) {
        return Matrix::Zero(x.rows(), x.cols());
    }
    return s.basis() * (s.basis().transpose() * x);
}

Subspace complement(const Subspace& s) {
    const Eigen::Index p = s.ambient_dim();
    const Eigen::Index d = s.dim();
    if (d == 0) {
        return Subspace::full(p);
    }
    if (d == p) {
        return Subspace(p);
    }
    Eigen::HouseholderQR<Matrix> qr(s.basis());
    Matrix q = qr.householderQ();
    return Subspace::from_orthonormal(q.rightCols(p - d));
}

Subspace intersect_many(std::span<const Subspace> list, double tol) {
    if (list.empty()) {
        throw InvalidInput("intersect_many: empty list");
    }
    const Eigen::Index p = list.front().ambient_dim();
    Eigen::Index total = 0;
    for (const auto& s : list) {
        if (s.ambient_dim() != p) {
            throw InvalidInput("intersect_many: mismatched ambient dimensions");
        }
        total += p - s.dim();
    }
    Matrix stacked(p, total);
    Eigen::Index col = 0;
    for (const auto& s : list) {
        const Subspace c = complement(s);
        stacked.middleCols(col, c.dim()) = c.basis();
        col += c.dim();
    }
    return complement(orthonormalize(p, stacked, tol));
}

std::vector<double> principal_angles(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim()) {
        throw InvalidInput("principal_angles: mismatched ambient dimensions");
    }
    if (s1.is_trivial() || s2.is_trivial()) {
        throw InvalidInput("principal_angles: undefined for the trivial subspace");
    }
    // acos loses half the digits near 0, so small angles come from the sines
    // of the residual of the smaller basis after projecting onto the larger.
    const Matrix& big = s1.dim() >= s2.dim() ? s1.basis() : s2.basis();
    const Matrix& small = s1.dim() >= s2.dim() ? s2.basis() : s1.basis();
    const Matrix cross = big.transpose() * small;
    const Vector cosines = detail::singular_values(cross);  // descending
    const Vector sines = detail::singular_values(small - big * cross);  // descending
    const Eigen::Index k = cosines.size();
    std::vector<double> angles(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) {
        const double c = std::clamp(cosines(i), 0.0, 1.0);
        const double s = std::clamp(sines(k - 1 - i), 0.0, 1.0);
        angles[static_cast<std::size_t>(i)] = c * c >= 0.5 ? std::asin(s) : std::acos(c);
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            m(i, j) = normal(rng);
        }
    }
    return m;
}

Subspace random_subspace(Eigen::Index p, Eigen::Index d, Rng& rng) {
    if (d < 1 || d > p - 1) {
        throw InvalidInput("random_subspace: need 1 <= d <= p-1, got d=" + std::to_string(d) +
                           ", p=" + std::to_string(p));
    }
    return orthonormalize(gaussian_matrix(p, d, rng));
}

bool contained_in(const Subspace& inner, const Subspace& outer, double tol) {
    if (inner.ambient_dim() != outer.ambient_dim()) {
        return false;
    }
    if (inner.is_trivial()) {
        return true;
    }
    const Matrix residual = inner.basis() - project_columns(outer, inner.basis());
    return residual.colwise().norm().maxCoeff() <= tol;
}

}  // namespace gdr
