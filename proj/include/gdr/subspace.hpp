#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gdr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Relative singular-value cutoff used for every numerical rank decision.
inline constexpr double kRankTol = 1e-10;

/**
 * A linear subspace of R^p held as an orthonormal basis (p x d).
 *
 * d == 0 is the trivial subspace {0}. Instances are immutable once built.
 */
class Subspace {
public:
    /// Trivial subspace {0} of R^p.
    explicit Subspace(Eigen::Index ambient_dim);

    /// Wraps a basis that is already orthonormal; checked to 1e-12 (Frobenius).
    static Subspace from_orthonormal(Matrix basis);

    /// The whole of R^p.
    static Subspace full(Eigen::Index ambient_dim);

    Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
    Eigen::Index dim() const noexcept { return basis_.cols(); }
    bool is_trivial() const noexcept { return basis_.cols() == 0; }
    const Matrix& basis() const noexcept { return basis_; }

    /// Orthogonal projector B B^T (p x p).
    Matrix projector() const;

private:
    Subspace(Eigen::Index ambient_dim, Matrix basis);

    Eigen::Index ambient_dim_;
    Matrix basis_;
};

/// An ordered list of n >= 2 subspaces sharing one ambient dimension.
class Problem {
public:
    explicit Problem(std::vector<Subspace> subspaces);

    Eigen::Index ambient_dim() const noexcept { return subspaces_.front().ambient_dim(); }
    std::size_t size() const noexcept { return subspaces_.size(); }
    const Subspace& operator[](std::size_t i) const { return subspaces_[i]; }
    const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }

private:
    std::vector<Subspace> subspaces_;
};

/// Orthonormal basis of the column space of `vectors`. Rank counts singular
/// values above tol * (largest singular value).
Subspace orthonormalize(const Matrix& vectors, double tol = kRankTol);

/// Same as above with an explicit ambient dimension, so a p x 0 input is allowed.
Subspace orthonormalize(Eigen::Index ambient_dim, const Matrix& vectors, double tol = kRankTol);

Vector project(const Subspace& s, const Eigen::Ref<const Vector>& x);

/// Projects every column of `x`.
Matrix project_columns(const Subspace& s, const Eigen::Ref<const Matrix>& x);

Subspace complement(const Subspace& s);

/// Intersection of all subspaces, computed as the complement of the span of
/// their complements.
Subspace intersect_many(std::span<const Subspace> list, double tol = kRankTol);

/// Principal angles in [0, pi/2], ascending; length min(dim S1, dim S2).
std::vector<double> principal_angles(const Subspace& s1, const Subspace& s2);

/// Standard Gaussian p x n sample drawn column by column from `rng`.
Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Uniformly distributed d-dimensional subspace of R^p, 1 <= d <= p-1.
Subspace random_subspace(Eigen::Index p, Eigen::Index d, Rng& rng);

/// True when every basis column of `inner` lies in `outer` within tol.
bool contained_in(const Subspace& inner, const Subspace& outer, double tol = 1e-8);

}  // namespace gdr
