// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "cipre/errors.hpp"

namespace cipre {

namespace detail {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1]; the embedded 7-point
// Gauss rule sits on the odd-indexed nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkEstimate {
    double integral;
    double error;
};

template <typename F>
GkEstimate gk15(const F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kron = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = half * kKronrodNodes[i];
        double v;
        if (i == 7) {
            v = f(mid);
            kron += kKronrodWeights[i] * v;
            gauss += kGaussWeights[3] * v;
        } else {
            v = f(mid - x) + f(mid + x);
            kron += kKronrodWeights[i] * v;
            if (i % 2 == 1) gauss += kGaussWeights[i / 2] * v;
        }
    }
    kron *= half;
    gauss *= half;
    return {kron, std::abs(kron - gauss)};
}

template <typename F>
double integrate_rec(const F& f, double a, double b, double tol, int depth) {
    const GkEstimate e = gk15(f, a, b);
    if (e.error <= tol || depth >= 48) {
        if (depth >= 48 && e.error > 1e3 * tol)
            throw numerical_error("integrate: adaptive subdivision failed to converge");
        return e.integral;
    }
    const double mid = 0.5 * (a + b);
    return integrate_rec(f, a, mid, 0.5 * tol, depth + 1) +
           integrate_rec(f, mid, b, 0.5 * tol, depth + 1);
}

} // namespace detail

/// Adaptive Gauss-Kronrod quadrature of f over [a, b] to absolute tolerance.
template <typename F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-10) {
    if (!(abs_tol > 0.0)) throw parameter_error("integrate: tolerance must be positive");
    if (a == b) return 0.0;
    const double sign = a < b ? 1.0 : -1.0;
    if (sign < 0) std::swap(a, b);
    return sign * detail::integrate_rec(f, a, b, abs_tol, 0);
}

} // namespace cipre
