#pragma once

#include <map>
#include <string>
#include <vector>

#include "zeta.hpp"

namespace hms {

// Structure constants of the directed category in the fixed gauge s = s_i = 1.
// alpha holds the nine pair compositions among the first three objects, keyed
// "x0*y1" etc.; beta[i] holds the triple (xbar, ybar, zbar) against point i.
struct CompositionTable {
    std::map<std::string, Complex> alpha;
    struct BetaTriple {
        Complex xbar, ybar, zbar;
    };
    std::vector<BetaTriple> beta;
    double gauge_s = 1.0;

    Complex alpha_at(const std::string& key) const;
    // The three gauge values (a, b, c) = (alpha_xy, alpha_xx, alpha_yx).
    std::array<Complex, 3> abc() const;
};

// Morphism-space dimensions and generator labels of the directed category on
// k + 3 objects.
struct HomTable {
    int k = 0;
    int dim(int i, int j) const;
    std::vector<std::string> labels(int i, int j) const;
};

HomTable hom_table(int k);  // requires 0 <= k <= 8

// Nine alpha values through the zeta route of the fixed gauge.
CompositionTable alpha_table(const KaehlerClass& kc, double tol, const SeriesLimits& limits = {});

// Same table through the theta route: the embedding triple at z0 = cbar/3
// scaled by e^{i pi/2} qF^{-1/24} qC^{1/6}, fractional powers taken as
// exponentials of the scaled pairings.
CompositionTable alpha_table_theta(const KaehlerClass& kc, double tol,
                                   const SeriesLimits& limits = {});

// k beta triples; requires kc.k >= 1.
CompositionTable beta_table(const KaehlerClass& kc, double tol, const SeriesLimits& limits = {});

// Same, but driven by precomputed q-data (lets callers study forced limits).
void alpha_from_qdata(const QData& q, CompositionTable& out, double tol, const SeriesLimits& limits);
void beta_from_qdata(const QData& q, CompositionTable& out, double tol, const SeriesLimits& limits);

// One named relative residual per displayed ratio identity.
struct RatioEntry {
    std::string name;
    double residual = 0.0;
    bool skipped = false;  // denominator too close to zero to be meaningful
};

std::vector<RatioEntry> ratio_report(const KaehlerClass& kc, double tol,
                                     const SeriesLimits& limits = {});

// The m2p2 ratio computed on the zeta side, -qC (zeta_+/zeta_-)^3.  With qF
// forced to 0 both series collapse to 1 and the value is exactly -qC.
Complex m2p2_ratio(Complex qC, Complex qF, double tol, const SeriesLimits& limits = {});

}  // namespace hms
