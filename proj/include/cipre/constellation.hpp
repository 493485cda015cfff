// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cipre/errors.hpp"
#include "cipre/types.hpp"

namespace cipre {

/// M-PSK constellation with points e^{i(2*pi*m/M + theta0)}, stored sorted by
/// angle in (-pi, pi]. The strict detection sector half-width is pi/M.
class Constellation {
public:
    Constellation(int order, double theta0) : order_(order), theta0_(theta0) {
        if (order < 2) throw parameter_error("Constellation: order must be >= 2");
        angles_.resize(order);
        for (int m = 0; m < order; ++m)
            angles_[m] = wrap_angle(theta0 + 2.0 * kPi * m / order);
        std::sort(angles_.begin(), angles_.end());
        points_.resize(order);
        for (int m = 0; m < order; ++m)
            points_[m] = std::polar(1.0, angles_[m]);
    }

    /// QPSK carries the pi/4 offset (points (+-1 +- i)/sqrt(2)); other orders
    /// default to a point on the positive real axis.
    static Constellation mpsk(int order) {
        return Constellation(order, order == 4 ? kPi / 4.0 : 0.0);
    }

    int order() const { return order_; }
    double offset() const { return theta0_; }
    double sector_half_width() const { return kPi / order_; }
    const std::vector<Complex>& points() const { return points_; }
    Complex point(int m) const { return points_.at(m); }
    double angle(int m) const { return angles_.at(m); }

    /// Index of the constellation point nearest in angle (equivalently the
    /// sector containing angle(y)). Ties resolve to the lower index.
    int detect(Complex y) const {
        if (y == Complex(0.0, 0.0))
            throw parameter_error("detect: zero sample is ambiguous (no sector)");
        const double a = std::arg(y);
        int best = 0;
        double best_dist = angle_distance(a, angles_[0]);
        for (int m = 1; m < order_; ++m) {
            const double dist = angle_distance(a, angles_[m]);
            if (dist < best_dist) {
                best = m;
                best_dist = dist;
            }
        }
        return best;
    }

private:
    int order_;
    double theta0_;
    std::vector<double> angles_;
    std::vector<Complex> points_;
};

inline int detect(Complex y, const Constellation& c) { return c.detect(y); }

/// Angular sector [center - half_width, center + half_width], wrap-aware.
struct DetectionRegion {
    double center_angle = 0.0;
    double half_width = 0.0;

    DetectionRegion(double center, double half) : center_angle(center), half_width(half) {
        if (half < 0.0 || half > kPi)
            throw parameter_error("DetectionRegion: half width must lie in [0, pi]");
    }

    bool contains(double angle, double tol = 0.0) const {
        return angle_distance(angle, center_angle) <= half_width + tol;
    }
    bool contains(Complex y, double tol = 0.0) const { return contains(std::arg(y), tol); }
};

/// Relaxed region [angle(d) - phi1, angle(d) + phi2]. Margins may not exceed
/// pi/M or the region would leave the correct strict sector. phi1 = phi2 = 0
/// degenerates to the single ray at angle(d).
inline DetectionRegion sector_of(Complex d, double phi1, double phi2, const Constellation& c) {
    const double limit = c.sector_half_width() + 1e-12;
    if (phi1 < 0.0 || phi2 < 0.0 || phi1 > limit || phi2 > limit)
        throw parameter_error("sector_of: margins must lie in [0, pi/M]");
    const double center = wrap_angle(std::arg(d) + 0.5 * (phi2 - phi1));
    return DetectionRegion(center, 0.5 * (phi1 + phi2));
}

/// Strict detection sector of constellation point m.
inline DetectionRegion strict_sector(const Constellation& c, int m) {
    return DetectionRegion(c.angle(m), c.sector_half_width());
}

/// K data symbols drawn from one constellation, kept as indices plus the
/// constellation itself so detection results can be scored.
class SymbolFrame {
public:
    SymbolFrame(std::vector<int> indices, Constellation constellation)
        : indices_(std::move(indices)), constellation_(std::move(constellation)) {
        for (int idx : indices_)
            if (idx < 0 || idx >= constellation_.order())
                throw parameter_error("SymbolFrame: symbol index out of range");
    }

    static SymbolFrame random(int users, const Constellation& c, std::mt19937_64& engine) {
        std::uniform_int_distribution<int> pick(0, c.order() - 1);
        std::vector<int> idx(users);
        for (auto& v : idx) v = pick(engine);
        return SymbolFrame(std::move(idx), c);
    }

    int size() const { return static_cast<int>(indices_.size()); }
    int index(int j) const { return indices_.at(j); }
    Complex symbol(int j) const { return constellation_.point(indices_.at(j)); }
    double angle(int j) const { return constellation_.angle(indices_.at(j)); }
    const Constellation& constellation() const { return constellation_; }

    CVector symbols() const {
        CVector d(size());
        for (int j = 0; j < size(); ++j) d(j) = symbol(j);
        return d;
    }

private:
    std::vector<int> indices_;
    Constellation constellation_;
};

} // namespace cipre
