#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "zeta.hpp"

// Shared generators for randomized tests.  Everything is seeded by the caller
// so failures replay deterministically.
namespace test {

inline hms::Complex random_complex(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    return {u(rng), u(rng)};
}

inline hms::Complex random_tau(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-0.4, 0.4);
    std::uniform_real_distribution<double> im(0.5, 2.0);
    return {re(rng), im(rng)};
}

// Complex with |q| in [lo, hi].
inline hms::Complex random_annulus(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> mag(lo, hi);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * hms::pi);
    const double m = mag(rng);
    const double a = arg(rng);
    return {m * std::cos(a), m * std::sin(a)};
}

// Kaehler class whose z0 = cbar/3 and p_i = c_i/3 stay away from the 1/3
// lattice and from each other, so no commutative or degenerate flags arise.
// Coordinates are dyadic so that 3*(z)/3 round-trips are exact.
inline hms::KaehlerClass random_class(std::mt19937_64& rng, int k,
                                      double im_lo = 0.8, double im_hi = 1.5) {
    std::uniform_real_distribution<double> re(-0.4, 0.4);
    std::uniform_real_distribution<double> im(im_lo, im_hi);
    const hms::Complex tau{re(rng), im(rng)};

    std::uniform_int_distribution<int> grid(0, 511);
    auto coord_ok = [](double v) {
        // keep away from multiples of 1/3 (and hence of 1) by at least 0.04
        const double t = v * 3.0;
        return std::abs(t - std::round(t)) > 0.12;
    };
    auto draw_point = [&]() {
        while (true) {
            const double u = grid(rng) / 512.0;
            const double v = grid(rng) / 512.0;
            if (coord_ok(u) && coord_ok(v)) return hms::Complex(u, 0) + hms::Complex(v, 0) * tau;
        }
    };

    hms::KaehlerClass kc;
    kc.k = k;
    kc.tau = tau;
    kc.cbar = 3.0 * draw_point();
    std::vector<std::array<double, 2>> used;
    while (static_cast<int>(kc.c.size()) < k) {
        const hms::Complex p = draw_point();
        const auto xy = hms::lattice_coordinates(p, tau);
        bool clash = false;
        for (const auto& q : used) {
            const double dx = std::abs(xy[0] - q[0]) ;
            const double dy = std::abs(xy[1] - q[1]);
            // pairwise separation in lattice coordinates, torus metric
            if (std::min(dx, 1.0 - dx) < 0.05 && std::min(dy, 1.0 - dy) < 0.05) clash = true;
        }
        if (clash) continue;
        used.push_back(xy);
        kc.c.push_back(3.0 * p);
    }
    return kc;
}

}  // namespace test
