#pragma once

#include "gdr/subspace.hpp"

#include <utility>

namespace gdr {

struct AngleReport {
    double cos_f = 0.0;
    double angle_rad = 0.0;
    std::pair<Eigen::Index, Eigen::Index> deflated_dims{0, 0};
};

/**
 * Friedrichs angle between two subspaces: the smallest principal angle once
 * the common part S1 cap S2 is removed from both.
 *
 * If either deflated subspace is trivial the cosine is 0 (angle pi/2).
 * Throws Degeneracy when the deflated cosine reaches 1 - 1e-12.
 */
AngleReport friedrichs(const Subspace& s1, const Subspace& s2);

/// Product set U_1 x ... x U_n and the diagonal of (R^p)^n, both in R^{pn}.
struct ProductPair {
    Subspace product;
    Subspace diagonal;
};

ProductPair pierra_product(const Problem& problem);

/// Friedrichs angle between the product set and the diagonal.
AngleReport pierra_angle(const Problem& problem);

}  // namespace gdr
