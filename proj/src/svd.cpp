#include "svd.hpp"

#include "gdr/errors.hpp"

#include <lapacke.h>

#include <algorithm>
#include <string>
#include <vector>

namespace gdr::detail {
namespace {

lapack_int as_lapack(Eigen::Index v) { return static_cast<lapack_int>(v); }

// dgesvd (QR iteration) rather than dgesdd: the OpenBLAS dgesdd shipped with
// some distributions returns wrong factors above ~25 columns.
lapack_int gesvd(char jobu, Matrix& work, Vector& sigma, double* u, lapack_int ldu) {
    const Eigen::Index m = work.rows();
    const Eigen::Index n = work.cols();
    const Eigen::Index k = std::min(m, n);
    std::vector<double> superb(static_cast<std::size_t>(std::max<Eigen::Index>(k, 1)));
    double vt = 0.0;
    return LAPACKE_dgesvd(LAPACK_COL_MAJOR, jobu, 'N', as_lapack(m), as_lapack(n), work.data(),
                          as_lapack(m), sigma.data(), u, ldu, &vt, 1, superb.data());
}

}  // namespace

ThinSvd thin_svd(const Matrix& a) {
    const Eigen::Index k = std::min(a.rows(), a.cols());
    ThinSvd out{Matrix(a.rows(), k), Vector(k)};
    if (k == 0) {
        return out;
    }
    Matrix work = a;
    const lapack_int info = gesvd('S', work, out.sigma, out.u.data(), as_lapack(a.rows()));
    if (info != 0) {
        throw Error("SVD failed (LAPACK info " + std::to_string(info) + ")");
    }
    return out;
}

Vector singular_values(const Matrix& a) {
    const Eigen::Index k = std::min(a.rows(), a.cols());
    Vector sigma(k);
    if (k == 0) {
        return sigma;
    }
    Matrix work = a;
    double u = 0.0;
    const lapack_int info = gesvd('N', work, sigma, &u, 1);
    if (info != 0) {
        throw Error("SVD failed (LAPACK info " + std::to_string(info) + ")");
    }
    return sigma;
}

}  // namespace gdr::detail
