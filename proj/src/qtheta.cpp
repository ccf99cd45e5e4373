#include "qtheta.hpp"

#include <cmath>

namespace hms {

namespace {

// Exact phase constants; never produced through fractional powers.
const Complex kOmega{-0.5, 0.86602540378443864676372317075293618};   // e^{+2 pi i / 3}
const Complex kOmegaBar{-0.5, -0.86602540378443864676372317075293618};  // e^{-2 pi i / 3}

template <typename T>
std::complex<T> cexp(const std::complex<T>& e) {
    return std::exp(e);
}

// Shared bilateral summation: theta series in the variable n with real
// characteristic shifts (a, b).  All magnitudes below are exact formulas for
// |term(n)| = exp(-pi*(n+a)^2*Im(tau) - 2*pi*(n+a)*Im(z)), b real.
template <typename T>
SeriesResult theta_impl(double a, double b, Complex z_in, Complex tau_in, double tol,
                        const SeriesLimits& limits) {
    using C = std::complex<T>;
    const C z(static_cast<T>(z_in.real()), static_cast<T>(z_in.imag()));
    const C tau(static_cast<T>(tau_in.real()), static_cast<T>(tau_in.imag()));
    const C ipi(0, static_cast<T>(pi));
    const T im_tau = tau.imag();
    const T im_z = z.imag();

    auto term = [&](long n) -> C {
        const T na = static_cast<T>(n) + static_cast<T>(a);
        return cexp(ipi * na * na * tau + T(2) * ipi * na * (z + static_cast<T>(b)));
    };
    auto term_mag = [&](long n) -> T {
        const T na = static_cast<T>(n) + static_cast<T>(a);
        return std::exp(-static_cast<T>(pi) * na * na * im_tau -
                        T(2) * static_cast<T>(pi) * na * im_z);
    };

    for (long n_max = limits.min_window;; n_max *= 2) {
        if (n_max > limits.max_terms)
            fail(errc::tolerance_unreachable, "theta: term cap exceeded before tail bound met");

        C sum = term(0);
        T gross = std::abs(sum);
        for (long n = 1; n <= n_max; ++n) {
            const C tp = term(n), tm = term(-n);
            sum += tp + tm;
            gross += std::abs(tp) + std::abs(tm);
        }

        // Ratios |t(n+1)/t(n)| decrease in n on the right edge (and mirrored on
        // the left), so a geometric bound applies as soon as both are < 1.
        const T ratio_pos =
            std::exp(-static_cast<T>(pi) * (2 * (static_cast<T>(n_max) + static_cast<T>(a)) + 1) * im_tau -
                     T(2) * static_cast<T>(pi) * im_z);
        const T ratio_neg =
            std::exp(-static_cast<T>(pi) * (2 * (static_cast<T>(n_max) - static_cast<T>(a)) + 1) * im_tau +
                     T(2) * static_cast<T>(pi) * im_z);
        if (ratio_pos < 1 && ratio_neg < 1) {
            const T tail = term_mag(n_max) * ratio_pos / (1 - ratio_pos) +
                           term_mag(-n_max) * ratio_neg / (1 - ratio_neg);
            const T scale = std::max(T(1), std::abs(sum));
            if (tail <= static_cast<T>(tol) * scale) {
                SeriesResult out;
                out.value = Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
                out.terms_used = 2 * n_max + 1;
                out.tail_bound = static_cast<double>(tail);
                out.scale = static_cast<double>(gross);
                if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
                    fail(errc::internal, "theta: non-finite value escaped summation");
                return out;
            }
        }
    }
}

}  // namespace

SeriesResult theta(const ThetaCharacteristic& ch, Complex z, Complex tau, double tol,
                   const SeriesLimits& limits) {
    if (!(tau.imag() > 0)) fail(errc::nonconvergent_domain, "theta: Im(tau) must be positive");
    if (!(tol > 0)) fail(errc::invalid_argument, "theta: tol must be positive");
    if (limits.extended) return theta_impl<long double>(ch.a.value(), ch.b.value(), z, tau, tol, limits);
    return theta_impl<double>(ch.a.value(), ch.b.value(), z, tau, tol, limits);
}

double quasi_period_check(Complex z, Complex tau, int u, int v, double tol,
                          const SeriesLimits& limits) {
    const ThetaCharacteristic flat{Fraction(0, 1), Fraction(0, 1)};
    const Complex lhs = theta(flat, z + static_cast<double>(u) * tau + static_cast<double>(v), tau,
                              tol, limits)
                            .value;
    const Complex base = theta(flat, z, tau, tol, limits).value;
    const Complex factor =
        std::exp(Complex(0, -pi) * static_cast<double>(u) * static_cast<double>(u) * tau +
                 Complex(0, -2 * pi) * static_cast<double>(u) * z);
    const Complex rhs = factor * base;
    // Normalized by the larger of the compared values: the translation factor
    // reaches e^{pi u^2 Im tau}, far beyond what an absolute comparison
    // against |theta(z)| could resolve in binary64.
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

ThetaTriple vtheta_triple(Complex z, Complex tau, double tol, const SeriesLimits& limits) {
    const Complex z3 = 3.0 * z;
    const Complex tau3 = 3.0 * tau;
    ThetaTriple t;
    t.plus = theta({Fraction(1, 6), Fraction(1, 2)}, z3, tau3, tol, limits);
    t.plus.value *= kOmegaBar;
    t.zero = theta({Fraction(1, 2), Fraction(1, 2)}, z3, tau3, tol, limits);
    t.minus = theta({Fraction(5, 6), Fraction(1, 2)}, z3, tau3, tol, limits);
    t.minus.value *= kOmega;
    return t;
}

Complex cubic_form(const std::array<Complex, 3>& coeffs, const std::array<Complex, 3>& point) {
    const Complex a = coeffs[0], b = coeffs[1], c = coeffs[2];
    const Complex x = point[0], y = point[1], zz = point[2];
    return (a * a * a + b * b * b + c * c * c) * x * y * zz -
           a * b * c * (x * x * x + y * y * y + zz * zz * zz);
}

Complex ipow(Complex q, long long e) {
    if (e < 0) {
        if (q == Complex(0.0, 0.0)) fail(errc::invalid_argument, "ipow: 0 to a negative power");
        return 1.0 / ipow(q, -e);
    }
    Complex acc{1.0, 0.0};
    Complex base = q;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace hms
