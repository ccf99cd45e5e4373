#include "zeta.hpp"

#include <cmath>

namespace hms {

namespace {

// Bilateral series sum_n (-1)^n qX^n qF^{e(n)} for a convex integer exponent
// law e(n) >= 0.  The ratio |t(n+1)/t(n)| = |qX| * |qF|^{e(n+1)-e(n)} decays
// once the exponent increments outgrow log|qX|/log|qF|, giving a geometric
// tail bound on both edges.
template <typename ExpFn>
SeriesResult sum_bilateral(Complex qX, Complex qF, ExpFn exponent, double tol,
                           const SeriesLimits& limits, double* scale_out) {
    const double aqx = std::abs(qX);
    const double aqf = std::abs(qF);
    const bool qf_zero = aqf == 0.0;
    const Complex log_qx = std::log(qX);
    const Complex log_qf = qf_zero ? Complex(0.0, 0.0) : std::log(qF);

    auto term = [&](long n) -> Complex {
        const long long e = exponent(n);
        Complex t;
        if (qf_zero) {
            if (e != 0) return {0.0, 0.0};
            t = ipow(qX, n);
        } else if (std::abs(n * log_qx.real()) < 600.0 && std::abs(e * log_qf.real()) < 600.0) {
            t = ipow(qX, n) * ipow(qF, e);
        } else {
            // Either factor alone would under- or overflow; only the combined
            // exponent is representable.  Integer powers have no branch
            // ambiguity, so the principal logs are safe here.
            t = std::exp(static_cast<double>(n) * log_qx + static_cast<double>(e) * log_qf);
        }
        return (n & 1) ? -t : t;
    };
    auto term_mag = [&](long n) -> double {
        const long long e = exponent(n);
        if (qf_zero) return e == 0 ? std::pow(aqx, static_cast<double>(n)) : 0.0;
        return std::exp(static_cast<double>(n) * std::log(aqx) +
                        static_cast<double>(e) * std::log(aqf));
    };

    for (long n_max = limits.min_window;; n_max *= 2) {
        if (n_max > limits.max_terms)
            fail(errc::tolerance_unreachable, "series: term cap exceeded before tail bound met");

        Complex sum = term(0);
        double gross = std::abs(term(0));
        for (long n = 1; n <= n_max; ++n) {
            const Complex tp = term(n), tm = term(-n);
            sum += tp + tm;
            gross += std::abs(tp) + std::abs(tm);
        }

        const double ratio_pos =
            aqx * std::pow(aqf, static_cast<double>(exponent(n_max + 1) - exponent(n_max)));
        const double ratio_neg =
            std::pow(aqf, static_cast<double>(exponent(-n_max - 1) - exponent(-n_max))) /
            (aqx > 0 ? aqx : 1.0);
        if (ratio_pos < 1 && ratio_neg < 1) {
            const double tail = term_mag(n_max) * ratio_pos / (1 - ratio_pos) +
                                term_mag(-n_max) * ratio_neg / (1 - ratio_neg);
            if (tail <= tol * std::max(1.0, std::abs(sum))) {
                if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
                    fail(errc::internal, "series: non-finite value escaped summation");
                if (scale_out) *scale_out = gross;
                return {sum, 2 * n_max + 1, tail, gross};
            }
        }
    }
}

void check_zeta_domain(Complex qX, Complex qF, double tol) {
    if (!(std::abs(qF) < 1)) fail(errc::nonconvergent_domain, "zeta: |qF| must be < 1");
    if (qX == Complex(0.0, 0.0)) fail(errc::invalid_argument, "zeta: qX must be nonzero");
    if (!(tol > 0)) fail(errc::invalid_argument, "zeta: tol must be positive");
}

long long exp_plus(long n) { return static_cast<long long>(n) * (3LL * n + 1) / 2; }
long long exp_minus(long n) { return static_cast<long long>(n) * (3LL * n - 1) / 2; }
long long exp_zero(long n) { return 3LL * n * (static_cast<long long>(n) - 1) / 2; }

}  // namespace

ZetaTriple zeta_triple(Complex qX, Complex qF, double tol, const SeriesLimits& limits) {
    check_zeta_domain(qX, qF, tol);
    const SeriesResult p = sum_bilateral(qX, qF, exp_plus, tol, limits, nullptr);
    const SeriesResult m = sum_bilateral(qX, qF, exp_minus, tol, limits, nullptr);
    const SeriesResult z = sum_bilateral(qX, qF, exp_zero, tol, limits, nullptr);
    ZetaTriple out;
    out.plus = p.value;
    out.minus = m.value;
    out.zero = z.value;
    out.terms_used = std::max(p.terms_used, std::max(m.terms_used, z.terms_used));
    out.tail_bound = std::max(p.tail_bound, std::max(m.tail_bound, z.tail_bound));
    return out;
}

std::array<double, 6> zeta_transforms(Complex qC, Complex qF, double tol,
                                      const SeriesLimits& limits) {
    const ZetaTriple base = zeta_triple(qC, qF, tol, limits);
    const ZetaTriple sh3 = zeta_triple(qC * qF * qF * qF, qF, tol, limits);
    const ZetaTriple sh1 = zeta_triple(qC * qF, qF, tol, limits);
    const Complex inv_c = 1.0 / qC;
    const Complex inv_f = 1.0 / qF;

    auto rel = [](Complex lhs, Complex rhs) {
        return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    };
    return {
        rel(sh3.plus, -inv_c * inv_f * inv_f * base.plus),
        rel(sh3.minus, -inv_c * inv_f * base.minus),
        rel(sh3.zero, -inv_c * base.zero),
        rel(sh1.plus, -inv_c * base.zero),
        rel(sh1.zero, base.minus),
        rel(sh1.minus, base.plus),
    };
}

SeriesResult degeneration_factor(Complex qprime, Complex qF, double tol,
                                 const SeriesLimits& limits, double* scale) {
    if (!(std::abs(qF) < 1))
        fail(errc::nonconvergent_domain, "degeneration_factor: |qF| must be < 1");
    if (qprime == Complex(0.0, 0.0))
        fail(errc::invalid_argument, "degeneration_factor: q' must be nonzero");
    auto e = [](long n) { return static_cast<long long>(n) * (static_cast<long long>(n) - 1) / 2; };
    return sum_bilateral(qprime, qF, e, tol, limits, scale);
}

std::array<double, 2> lattice_coordinates(Complex w, Complex tau) {
    if (!(tau.imag() > 0))
        fail(errc::invalid_argument, "lattice_coordinates: Im(tau) must be positive");
    const double y = w.imag() / tau.imag();
    const double x = w.real() - y * tau.real();
    return {x, y};
}

DegeneracyResult is_degenerate(const KaehlerClass& kc, int i, int j, double tol) {
    kc.validate();
    if (i < 0 || j < 0 || i >= kc.k || j >= kc.k || i == j)
        fail(errc::invalid_argument, "is_degenerate: need 0 <= i < j < k, i != j");
    if (!(tol > 0)) fail(errc::invalid_argument, "is_degenerate: tol must be positive");

    const Complex w = (kc.c[static_cast<size_t>(j)] - kc.c[static_cast<size_t>(i)]) / 3.0;
    const auto [x, y] = lattice_coordinates(w, kc.tau);

    DegeneracyResult r;
    r.witness_m = std::llround(x);
    r.witness_n = std::llround(y);
    r.distance = std::max(std::abs(x - static_cast<double>(r.witness_m)),
                          std::abs(y - static_cast<double>(r.witness_n)));
    r.degenerate = r.distance <= tol;
    r.marginal = !r.degenerate && r.distance <= 10 * tol;
    return r;
}

}  // namespace hms
