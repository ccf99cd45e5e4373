#pragma once

#include <utility>

#include "fukaya.hpp"
#include "quiver.hpp"

namespace hms {

// The explicit dictionary from a Kaehler class to the curve-side data: the
// modulus tau, the translation point z0, the blown-up parameters p_i, and
// their images under the projective embedding.
struct MirrorData {
    Complex tau{0, 1};
    Complex z0{0, 0};                     // fundamental-domain representative
    std::vector<Complex> p;               // reduced likewise
    Complex l1_divisor{0, 0};             // L1 = O(3 * (-z0))
    Complex l2_divisor{0, 0};             // L2 = O(3 * (0))
    std::vector<ProjPoint> blown_points;  // j(z0 + p_i)

    bool commutative = false;
    std::vector<std::pair<int, int>> degenerate_pairs;
    std::vector<std::pair<int, int>> marginal_pairs;
};

// Representative of z modulo Z + tau*Z with (1, tau)-coordinates in [0, 1);
// returns z itself when already reduced.
Complex reduce_mod_lattice(Complex z, Complex tau);

MirrorData mirror_map(const KaehlerClass& kc, double tol = 1e-8,
                      const SeriesLimits& limits = {});

struct BothSides {
    CompositionTable table;  // alpha entries plus k beta triples
    QuiverAlgebra quiver;
    MirrorData mirror;
};

// Fukaya table and quiver algebra of one class; throws errc::degenerate when
// a pair of blown-up classes is degenerate (the offending pair is in the
// message).
BothSides build_both_sides(const KaehlerClass& kc, double tol, const SeriesLimits& limits = {});

struct CertCheck {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    bool skipped = false;
};

struct Certificate {
    KaehlerClass input;
    bool commutative = false;
    bool degenerate = false;
    bool marginal = false;
    std::vector<std::pair<int, int>> degenerate_pairs;
    std::vector<std::pair<int, int>> marginal_pairs;
    std::vector<CertCheck> checks;
    bool pass = false;  // all non-skipped checks pass
};

// Full comparison of the two sides: gauge-path agreement, every ratio
// identity, beta against the quotient forms, cubic membership, the sigma
// translation property, the point round trip, and the modular spot checks
// (cbar + 3*tau and the simultaneous 1/3-lattice translations).  Failures are
// recorded, never thrown.
Certificate certify(const KaehlerClass& kc, double tol, const SeriesLimits& limits = {});

}  // namespace hms
