#pragma once

#include "gdr/subspace.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace gdr::test {

inline Rng rng_for(std::uint64_t seed) { return Rng(seed); }

/// Projector onto the column space of a full-column-rank A via the normal
/// equations, independent of the SVD path used by the library.
inline Matrix normal_equation_projector(const Matrix& a) {
    const Matrix gram = a.transpose() * a;
    return a * gram.ldlt().solve(a.transpose());
}

/// Haar-ish random orthogonal k x k matrix (QR of a Gaussian, sign fixed).
inline Matrix random_orthogonal(Eigen::Index k, Rng& rng) {
    const Matrix g = gaussian_matrix(k, k, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(k, k);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < k; ++i) {
        if (r(i, i) < 0) {
            q.col(i) *= -1.0;
        }
    }
    return q;
}

inline Problem random_problem(Eigen::Index p, int n, Eigen::Index d_min, Eigen::Index d_max, Rng& rng) {
    std::vector<Subspace> list;
    std::uniform_int_distribution<Eigen::Index> dim(d_min, d_max);
    for (int i = 0; i < n; ++i) {
        list.push_back(random_subspace(p, dim(rng), rng));
    }
    return Problem(std::move(list));
}

/// Span of the columns of a matrix as a plain Subspace, for hand-built cases.
inline Subspace span_of(std::initializer_list<std::initializer_list<double>> columns) {
    const auto cols = static_cast<Eigen::Index>(columns.size());
    const auto rows = static_cast<Eigen::Index>(columns.begin()->size());
    Matrix m(rows, cols);
    Eigen::Index c = 0;
    for (const auto& col : columns) {
        Eigen::Index r = 0;
        for (const double v : col) {
            m(r++, c) = v;
        }
        ++c;
    }
    return orthonormalize(m);
}

inline Vector vec(std::initializer_list<double> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const double x : values) {
        v(i++) = x;
    }
    return v;
}

/// Mutual containment.
inline bool same_span(const Subspace& a, const Subspace& b, double tol = 1e-8) {
    return a.dim() == b.dim() && contained_in(a, b, tol) && contained_in(b, a, tol);
}

}  // namespace gdr::test
