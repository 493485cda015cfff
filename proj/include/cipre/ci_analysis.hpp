// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "cipre/errors.hpp"
#include "cipre/types.hpp"

namespace cipre {

/// Unit-power cross coupling rho_jk = h_j w_k / (||h_j|| ||w_k||).
/// |rho| <= 1 by Cauchy-Schwarz.
inline Complex coupling(const CVector& h_j, const CVector& w_k) {
    const double nh = h_j.norm();
    const double nw = w_k.norm();
    if (nh == 0.0 || nw == 0.0)
        throw parameter_error("coupling: zero vector has no direction");
    return row_times(h_j, w_k) / (nh * nw);
}

enum class InterferenceClass { constructive, non_constructive, zero_coupling };

/// Classifies the interference created on user j's symbol d_j by the stream
/// carrying d_k through coupling rho_jk. Constructive requires both:
///   - rho_jk * d_k falls strictly inside d_j's sector of half-width pi/M
///     (sector membership tested on the complex number, atan2 semantics);
///   - sign agreement R{d_k} R{rho_jk d_j} > 0 and I{d_k} I{rho_jk d_j} > 0.
/// Strictness uses tolerance 1e-12; boundary cases are non-constructive.
inline InterferenceClass classify_interference(Complex d_j, Complex d_k, Complex rho_jk, int mpsk) {
    constexpr double tol = 1e-12;
    if (mpsk < 2) throw parameter_error("classify_interference: order must be >= 2");
    if (std::abs(rho_jk) <= tol) return InterferenceClass::zero_coupling;

    const double sector = kPi / mpsk;
    const Complex interferent = rho_jk * d_k;
    const bool in_sector = angle_distance(std::arg(interferent), std::arg(d_j)) < sector - tol;

    const Complex cross = rho_jk * d_j;
    const bool signs_ok = d_k.real() * cross.real() > tol && d_k.imag() * cross.imag() > tol;

    return (in_sector && signs_ok) ? InterferenceClass::constructive
                                   : InterferenceClass::non_constructive;
}

inline bool is_constructive(Complex d_j, Complex d_k, Complex rho_jk, int mpsk) {
    return classify_interference(d_j, d_k, rho_jk, mpsk) == InterferenceClass::constructive;
}

/// Constructive interference is mutual: checks that the j<-k and k<-j
/// classifications agree.
inline bool mutuality_check(Complex d_j, Complex d_k, Complex rho_jk, Complex rho_kj, int mpsk) {
    return is_constructive(d_j, d_k, rho_jk, mpsk) == is_constructive(d_k, d_j, rho_kj, mpsk);
}

} // namespace cipre
