#pragma once

#include "gdr/subspace.hpp"

namespace gdr::detail {

struct ThinSvd {
    Matrix u;      ///< rows x min(rows, cols)
    Vector sigma;  ///< descending
};

/// Thin SVD through LAPACK (divide and conquer, with a QR-iteration fallback).
ThinSvd thin_svd(const Matrix& a);

Vector singular_values(const Matrix& a);

}  // namespace gdr::detail
