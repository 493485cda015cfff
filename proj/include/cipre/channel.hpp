// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "cipre/errors.hpp"
#include "cipre/types.hpp"

namespace cipre {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace detail

/// Reproducible randomness handle: identical (seed, stream) always produces
/// identical draws, and substream(i) derives independent child streams so
/// per-trial work is deterministic regardless of execution order.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    std::mt19937_64 engine() const {
        std::seed_seq seq{seed, stream};
        return std::mt19937_64(seq);
    }

    RngStream substream(std::uint64_t index) const {
        return RngStream{seed, detail::splitmix64(stream * 0x9e3779b97f4a7c15ULL + index + 1)};
    }
};

/// One circularly-symmetric complex Gaussian draw with E|z|^2 = variance.
inline Complex draw_cn(std::mt19937_64& engine, double variance) {
    if (variance == 0.0) return Complex(0.0, 0.0);
    std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
    const double re = n(engine);
    const double im = n(engine);
    return Complex(re, im);
}

/// K x M Rayleigh channel, i.i.d. entries CN(0, channel_power).
inline ChannelMatrix draw_channel(int users, int antennas, double channel_power, const RngStream& rng) {
    if (users < 1 || antennas < 1)
        throw parameter_error("draw_channel: dimensions must be positive");
    if (channel_power <= 0.0)
        throw parameter_error("draw_channel: channel power must be positive");
    auto engine = rng.engine();
    std::normal_distribution<double> n(0.0, std::sqrt(channel_power / 2.0));
    ChannelMatrix h(users, antennas);
    for (int j = 0; j < users; ++j)
        for (int m = 0; m < antennas; ++m) {
            const double re = n(engine);
            const double im = n(engine);
            h(j, m) = Complex(re, im);
        }
    return h;
}

/// Adds independent CN(0, noise_power) to each component; noise_power = 0 is
/// the exact identity.
inline CVector add_noise(const CVector& y, double noise_power, const RngStream& rng) {
    if (noise_power < 0.0)
        throw parameter_error("add_noise: noise power must be nonnegative");
    if (noise_power == 0.0) return y;
    auto engine = rng.engine();
    CVector out(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i)
        out(i) = y(i) + draw_cn(engine, noise_power);
    return out;
}

} // namespace cipre
