#include "fukaya.hpp"

#include <cmath>

namespace hms {

namespace {

const char* kAlphaKeys[9] = {"x0*y1", "y0*z1", "z0*x1",   // -> a
                             "x0*x1", "y0*y1", "z0*z1",   // -> b
                             "y0*x1", "z0*y1", "x0*z1"};  // -> c

void fill_alpha(CompositionTable& t, Complex a, Complex b, Complex c) {
    for (int i = 0; i < 3; ++i) t.alpha[kAlphaKeys[i]] = a;
    for (int i = 3; i < 6; ++i) t.alpha[kAlphaKeys[i]] = b;
    for (int i = 6; i < 9; ++i) t.alpha[kAlphaKeys[i]] = c;
}

}  // namespace

Complex CompositionTable::alpha_at(const std::string& key) const {
    auto it = alpha.find(key);
    if (it == alpha.end()) fail(errc::invalid_argument, "CompositionTable: unknown key " + key);
    return it->second;
}

std::array<Complex, 3> CompositionTable::abc() const {
    return {alpha_at("x0*y1"), alpha_at("x0*x1"), alpha_at("y0*x1")};
}

int HomTable::dim(int i, int j) const {
    if (i < 0 || j < 0 || i > k + 2 || j > k + 2)
        fail(errc::invalid_argument, "HomTable: object index out of range");
    if (i == j) return 1;  // identity only
    if (i > j) return 0;   // directedness
    if (j <= 2) return 3;
    if (i >= 3) return 0;  // blown-up objects are mutually orthogonal
    return i == 1 ? 2 : 1;
}

std::vector<std::string> HomTable::labels(int i, int j) const {
    const int d = dim(i, j);
    if (i == j) return {"id"};
    if (d == 0) return {};
    if (i == 0 && j == 1) return {"x0", "y0", "z0"};
    if (i == 1 && j == 2) return {"x1", "y1", "z1"};
    if (i == 0 && j == 2) return {"xbar", "ybar", "zbar"};
    const std::string s = std::to_string(j - 3);
    if (i == 0) return {"a" + s};
    if (i == 1) return {"b" + s, "b'" + s};
    return {"c" + s};
}

HomTable hom_table(int k) {
    if (k < 0 || k > 8) fail(errc::invalid_argument, "hom_table: k outside [0, 8]");
    return HomTable{k};
}

void alpha_from_qdata(const QData& q, CompositionTable& out, double tol,
                      const SeriesLimits& limits) {
    const ZetaTriple z = zeta_triple(q.qC, q.qF, tol, limits);
    const Complex a = q.qC13 * z.plus;
    const Complex b = q.qF13 / q.qC13 * z.zero;
    const Complex c = -z.minus;
    fill_alpha(out, a, b, c);
}

void beta_from_qdata(const QData& q, CompositionTable& out, double tol,
                     const SeriesLimits& limits) {
    out.beta.clear();
    out.beta.reserve(q.qi.size());
    for (size_t i = 0; i < q.qi.size(); ++i) {
        const ZetaTriple z = zeta_triple(q.qi[i], q.qF, tol, limits);
        CompositionTable::BetaTriple t;
        t.xbar = q.qi13[i] * z.plus;
        t.ybar = q.qF13 / q.qi13[i] * z.zero;
        t.zbar = -z.minus;
        out.beta.push_back(t);
    }
}

CompositionTable alpha_table(const KaehlerClass& kc, double tol, const SeriesLimits& limits) {
    CompositionTable t;
    alpha_from_qdata(qdata(kc), t, tol, limits);
    return t;
}

CompositionTable alpha_table_theta(const KaehlerClass& kc, double tol,
                                   const SeriesLimits& limits) {
    kc.validate();
    const Complex z0 = kc.cbar / 3.0;
    const ThetaTriple tt = vtheta_triple(z0, kc.tau, tol, limits);
    // e^{i pi/2} qF^{-1/24} qC^{1/6} with the roots taken on the pairings.
    const Complex stilde =
        Complex(0.0, 1.0) * exp2pii(-kc.tau / 24.0) * exp2pii(kc.cbar / 6.0);
    CompositionTable t;
    fill_alpha(t, stilde * tt.plus.value, stilde * tt.zero.value, stilde * tt.minus.value);
    return t;
}

CompositionTable beta_table(const KaehlerClass& kc, double tol, const SeriesLimits& limits) {
    kc.validate();
    if (kc.k < 1) fail(errc::invalid_argument, "beta_table: needs at least one blown-up point");
    CompositionTable t;
    beta_from_qdata(qdata(kc), t, tol, limits);
    return t;
}

Complex m2p2_ratio(Complex qC, Complex qF, double tol, const SeriesLimits& limits) {
    const ZetaTriple z = zeta_triple(qC, qF, tol, limits);
    const Complex r = z.plus / z.minus;
    return -qC * r * r * r;
}

std::vector<RatioEntry> ratio_report(const KaehlerClass& kc, double tol,
                                     const SeriesLimits& limits) {
    kc.validate();
    const QData q = qdata(kc);
    CompositionTable table;
    alpha_from_qdata(q, table, tol, limits);
    beta_from_qdata(q, table, tol, limits);

    const ZetaTriple z = zeta_triple(q.qC, q.qF, tol, limits);
    std::vector<ZetaTriple> zi;
    zi.reserve(q.qi.size());
    for (const Complex& qx : q.qi) zi.push_back(zeta_triple(qx, q.qF, tol, limits));

    std::vector<RatioEntry> report;
    // Denominators below this scale make a ratio numerically meaningless; the
    // identity is then reported as skipped rather than as a residual.
    const double denom_floor = 1e-12;
    auto push = [&](const std::string& name, Complex lhs_num, Complex lhs_den, Complex rhs) {
        RatioEntry e;
        e.name = name;
        if (std::abs(lhs_den) < denom_floor * std::max(1.0, std::abs(lhs_num))) {
            e.skipped = true;
            report.push_back(e);
            return;
        }
        const Complex lhs = lhs_num / lhs_den;
        e.residual = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        report.push_back(e);
    };
    auto cube = [](Complex v) { return v * v * v; };
    auto sq = [](Complex v) { return v * v; };

    const Complex axy = table.alpha_at("x0*y1"), ayz = table.alpha_at("y0*z1"),
                  azx = table.alpha_at("z0*x1"), axx = table.alpha_at("x0*x1"),
                  ayy = table.alpha_at("y0*y1"), azz = table.alpha_at("z0*z1"),
                  ayx = table.alpha_at("y0*x1"), azy = table.alpha_at("z0*y1"),
                  axz = table.alpha_at("x0*z1");

    push("m2p2", axy * ayz * azx, ayx * azy * axz, -q.qC * cube(z.plus / z.minus));
    push("m2p2f", axx * ayy * azz, ayx * azy * axz, -q.qF / q.qC * cube(z.zero / z.minus));

    for (size_t i = 0; i < table.beta.size(); ++i) {
        const auto& b = table.beta[i];
        const auto& w = zi[i];
        const std::string si = "[" + std::to_string(i) + "]";
        push("m2beta_zbar" + si, sq(b.zbar) * axy * azz, b.xbar * b.ybar * azy * axz,
             sq(w.minus / z.minus) * (z.plus * z.zero) / (w.plus * w.zero));
        push("m2beta_xbar" + si, sq(b.xbar) * ayz * axx, b.ybar * b.zbar * axz * ayx,
             -q.qi[i] * sq(w.plus / z.minus) * (z.plus * z.zero) / (w.zero * w.minus));
        push("m2beta_ybar" + si, sq(b.ybar) * azx * ayy, b.zbar * b.xbar * ayx * azy,
             -q.qF / q.qi[i] * sq(w.zero / z.minus) * (z.plus * z.zero) / (w.minus * w.plus));
        push("corollary_zx" + si, cube(b.zbar) * axy * ayx * azz,
             cube(b.xbar) * ayz * azy * axx, -cube(w.minus / w.plus) / q.qi[i]);
        push("corollary_xy" + si, cube(b.xbar) * ayz * azy * axx,
             cube(b.ybar) * azx * axz * ayy, q.qi[i] * q.qi[i] / q.qF * cube(w.plus / w.zero));
        push("corollary_yz" + si, cube(b.ybar) * azx * axz * ayy,
             cube(b.zbar) * axy * ayx * azz, -q.qF / q.qi[i] * cube(w.zero / w.minus));
    }

    for (size_t i = 0; i < table.beta.size(); ++i) {
        for (size_t j = i + 1; j < table.beta.size(); ++j) {
            const auto& bi = table.beta[i];
            const auto& bj = table.beta[j];
            const auto& wi = zi[i];
            const auto& wj = zi[j];
            const Complex qt = q.qtilde[i][j];
            const std::string sij = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            push("m2delta_yz" + sij, bi.ybar * bj.zbar, bj.ybar * bi.zbar,
                 qt * (wi.zero * wj.minus) / (wj.zero * wi.minus));
            push("m2delta_zx" + sij, bi.zbar * bj.xbar, bj.zbar * bi.xbar,
                 qt * (wi.minus * wj.plus) / (wj.minus * wi.plus));
            push("m2delta_xy" + sij, bi.xbar * bj.ybar, bj.xbar * bi.ybar,
                 (wi.plus * wj.zero) / (wj.plus * wi.zero) / (qt * qt));
        }
    }
    return report;
}

}  // namespace hms
