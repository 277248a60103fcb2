#pragma once

#include <Eigen/Dense>
#include <optional>

#include "dynlab/types.hpp"

namespace dynlab::detail {

using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Lawson-Hanson active set: argmin ||A x - b|| subject to x >= 0.
RVector nnls(const RMatrix& a, const RVector& b);

// argmin ||w|| subject to G w >= h, or nullopt when infeasible.
std::optional<RVector> least_distance(const RMatrix& g, const RVector& h);

}  // namespace dynlab::detail
