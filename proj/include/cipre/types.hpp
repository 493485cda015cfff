// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "cipre/errors.hpp"

namespace cipre {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// K x M downlink channel; row j is user j's channel h_j.
using ChannelMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline constexpr const char* kVersionString = "ciprecode 0.1.0";

/// Wraps an angle to the representative in (-pi, pi].
inline double wrap_angle(double a) {
    double r = std::fmod(a + kPi, 2.0 * kPi);
    if (r <= 0.0) r += 2.0 * kPi;
    return r - kPi;
}

/// Absolute angular distance after wrapping, in [0, pi].
inline double angle_distance(double a, double b) {
    return std::abs(wrap_angle(a - b));
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) {
    if (lin <= 0.0) throw parameter_error("linear_to_db: value must be positive");
    return 10.0 * std::log10(lin);
}

/// Row-times-column product h*x where h holds the entries of a channel row
/// (no conjugation, matching y = h x).
inline Complex row_times(const CVector& h, const CVector& x) {
    return (h.array() * x.array()).sum();
}

} // namespace cipre
