#pragma once

#include <array>
#include <optional>

#include "topology.hpp"

namespace hms {

// Values of the three alternating series at a given (qX, qF), summed over one
// shared symmetric window.
struct ZetaTriple {
    Complex plus{0.0, 0.0};   // sum (-1)^n qX^n qF^{n(3n+1)/2}
    Complex minus{0.0, 0.0};  // sum (-1)^n qX^n qF^{n(3n-1)/2}
    Complex zero{0.0, 0.0};   // sum (-1)^n qX^n qF^{3n(n-1)/2}
    long terms_used = 0;
    double tail_bound = 0.0;
};

// One routine serves both the base series (qX = qC) and the per-point series
// (qX = q_i); requires |qF| < 1 and qX != 0.
ZetaTriple zeta_triple(Complex qX, Complex qF, double tol, const SeriesLimits& limits = {});

// Relative residuals of the two transformation families:
//   [0] zeta_+(qC qF^3, qF) = -qC^{-1} qF^{-2} zeta_+(qC, qF)
//   [1] zeta_-(qC qF^3, qF) = -qC^{-1} qF^{-1} zeta_-(qC, qF)
//   [2] zeta_0(qC qF^3, qF) = -qC^{-1}         zeta_0(qC, qF)
//   [3] zeta_+(qC qF,   qF) = -qC^{-1}         zeta_0(qC, qF)
//   [4] zeta_0(qC qF,   qF) =                  zeta_-(qC, qF)
//   [5] zeta_-(qC qF,   qF) =                  zeta_+(qC, qF)
std::array<double, 6> zeta_transforms(Complex qC, Complex qF, double tol,
                                      const SeriesLimits& limits = {});

// sum (-1)^n q'^n qF^{n(n-1)/2}; vanishes exactly when q' is an integer power
// of qF.  scale (if requested) receives the gross sum of term magnitudes so
// callers can normalize vanishing tests.
SeriesResult degeneration_factor(Complex qprime, Complex qF, double tol,
                                 const SeriesLimits& limits = {}, double* scale = nullptr);

// Lattice test for a simple degeneration: (c_j - c_i)/3 within tol of Z + tau*Z
// in (1, tau)-coordinates.  Distances in (tol, 10*tol] are flagged marginal.
struct DegeneracyResult {
    bool degenerate = false;
    bool marginal = false;
    long long witness_m = 0;  // nearest lattice point witness_m + witness_n * tau
    long long witness_n = 0;
    double distance = 0.0;    // max-norm distance in lattice coordinates
};

DegeneracyResult is_degenerate(const KaehlerClass& kc, int i, int j, double tol);

// Coordinates of w in the basis (1, tau); requires Im(tau) > 0.
std::array<double, 2> lattice_coordinates(Complex w, Complex tau);

}  // namespace hms
