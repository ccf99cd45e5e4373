#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numeric>

#include "errors.hpp"

namespace hms {

using Complex = std::complex<double>;

// Reduced fraction with positive denominator; used for theta characteristics.
struct Fraction {
    long long num = 0;
    long long den = 1;

    constexpr Fraction() = default;
    Fraction(long long n, long long d) : num(n), den(d) {
        if (den == 0) fail(errc::invalid_argument, "Fraction: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ThetaCharacteristic {
    Fraction a;
    Fraction b;
};

// Value of a truncated bilateral series together with its truncation record.
// tail_bound is an absolute bound on the discarded tail, valid whenever the
// evaluation returned normally.  scale is the gross sum of term magnitudes,
// the natural yardstick for vanishing tests.
struct SeriesResult {
    Complex value{0.0, 0.0};
    long terms_used = 0;
    double tail_bound = 0.0;
    double scale = 0.0;
};

// Evaluation knobs shared by every series in the toolkit.  min_window exists
// so stability reruns can force wider summation windows without an API change;
// extended switches the accumulation to long double.
struct SeriesLimits {
    long max_terms = 100000;
    long min_window = 8;
    bool extended = false;
};

inline constexpr double pi = 3.14159265358979323846264338327950288;

// theta_{a,b}(z, tau) = sum_n exp(pi*i*(n+a)^2*tau + 2*pi*i*(n+a)*(z+b)),
// summed symmetrically over n in [-N, N] with N grown geometrically until the
// ratio-test tail bound is below tol * max(1, |value|).
// Throws errc::nonconvergent_domain when Im(tau) <= 0 and
// errc::tolerance_unreachable when the window would exceed limits.max_terms.
SeriesResult theta(const ThetaCharacteristic& ch, Complex z, Complex tau, double tol,
                   const SeriesLimits& limits = {});

// Relative residual of theta_{0,0}(z + u*tau + v) against its quasi-period law
// exp(-pi*i*u^2*tau - 2*pi*i*u*z) * theta_{0,0}(z).
double quasi_period_check(Complex z, Complex tau, int u, int v, double tol = 1e-12,
                          const SeriesLimits& limits = {});

struct ThetaTriple {
    SeriesResult plus;   // e^{-2*pi*i/3} theta_{1/6,1/2}(3z, 3tau)
    SeriesResult zero;   // theta_{1/2,1/2}(3z, 3tau)
    SeriesResult minus;  // e^{+2*pi*i/3} theta_{5/6,1/2}(3z, 3tau)
};

// The projective embedding triple z -> (plus : zero : minus).
ThetaTriple vtheta_triple(Complex z, Complex tau, double tol, const SeriesLimits& limits = {});

// (A^3+B^3+C^3)*XYZ - ABC*(X^3+Y^3+Z^3) for coeffs (A,B,C), point (X,Y,Z).
Complex cubic_form(const std::array<Complex, 3>& coeffs, const std::array<Complex, 3>& point);

// q^e for integer e; q must be nonzero when e < 0.
Complex ipow(Complex q, long long e);

}  // namespace hms
