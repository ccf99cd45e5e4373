#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "zeta.hpp"

using namespace hms;

namespace {

// Fixed-window brute force, independent of the adaptive path.
ZetaTriple zeta_bruteforce(Complex qX, Complex qF, int n_window) {
    ZetaTriple t;
    for (int n = -n_window; n <= n_window; ++n) {
        const double sign = (n & 1) ? -1.0 : 1.0;
        const Complex qxn = ipow(qX, n);
        t.plus += sign * qxn * ipow(qF, static_cast<long long>(n) * (3LL * n + 1) / 2);
        t.minus += sign * qxn * ipow(qF, static_cast<long long>(n) * (3LL * n - 1) / 2);
        t.zero += sign * qxn * ipow(qF, 3LL * n * (static_cast<long long>(n) - 1) / 2);
    }
    return t;
}

}  // namespace

TEST_CASE("zeta at qF = 0 collapses to the exponent-0 terms") {
    const Complex qx{0.4, 0.25};
    const ZetaTriple t = zeta_triple(qx, {0.0, 0.0}, 1e-12);
    CHECK(t.plus == Complex(1.0, 0.0));
    CHECK(t.minus == Complex(1.0, 0.0));
    CHECK(t.zero == Complex(1.0, 0.0) - qx);
}

TEST_CASE("zeta domain checks") {
    CHECK_THROWS_AS(zeta_triple({0.5, 0.0}, {1.2, 0.0}, 1e-10), error);
    CHECK_THROWS_AS(zeta_triple({0.0, 0.0}, {0.1, 0.0}, 1e-10), error);
}

TEST_CASE("zeta_0 vanishes at qX = 1") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex qf = test::random_annulus(rng, 0.01, 0.5);
        const ZetaTriple t = zeta_triple({1.0, 0.0}, qf, 1e-12);
        CHECK(std::abs(t.zero) < 1e-10);
    }
}

TEST_CASE("zeta matches brute force") {
    const ZetaTriple got = zeta_triple({0.5, 0.2}, {0.1, 0.0}, 1e-12);
    const ZetaTriple expect = zeta_bruteforce({0.5, 0.2}, {0.1, 0.0}, 40);
    CHECK(std::abs(got.plus - expect.plus) < 1e-12);
    CHECK(std::abs(got.minus - expect.minus) < 1e-12);
    CHECK(std::abs(got.zero - expect.zero) < 1e-12);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const Complex qx = test::random_annulus(rng, 0.1, 2.0);
        const Complex qf = test::random_annulus(rng, 0.01, 0.5);
        const ZetaTriple a = zeta_triple(qx, qf, 1e-12);
        const ZetaTriple b = zeta_bruteforce(qx, qf, 40);
        CHECK(std::abs(a.plus - b.plus) / std::max(1.0, std::abs(b.plus)) < 1e-11);
        CHECK(std::abs(a.minus - b.minus) / std::max(1.0, std::abs(b.minus)) < 1e-11);
        CHECK(std::abs(a.zero - b.zero) / std::max(1.0, std::abs(b.zero)) < 1e-11);
    }
}

TEST_CASE("both transformation families hold") {
    CHECK_THROWS_AS(zeta_transforms({0.7, 0.1}, {0.0, 0.0}, 1e-10), error);  // qX = 0 in family two

    const auto res0 = zeta_transforms({0.7, 0.1}, {0.2, 0.0}, 1e-12);
    for (double r : res0) CHECK(r < 1e-9);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex qc = test::random_annulus(rng, 0.1, 2.0);
        const Complex qf = test::random_annulus(rng, 0.01, 0.5);
        const auto res = zeta_transforms(qc, qf, 1e-12);
        for (double r : res) CHECK(r < 1e-9);
    }
}

TEST_CASE("family two at qC = 1 reproduces the zeta_0 cancellation") {
    const Complex qf{0.22, -0.08};
    const ZetaTriple shifted = zeta_triple(qf, qf, 1e-12);  // qX = qC*qF with qC = 1
    const ZetaTriple base = zeta_triple({1.0, 0.0}, qf, 1e-12);
    CHECK(std::abs(base.zero) < 1e-10);
    CHECK(std::abs(shifted.plus + base.zero) < 1e-10);  // zeta_+(qF,qF) = -zeta_0(1,qF) = 0
}

TEST_CASE("degeneration factor vanishing locus") {
    const Complex qf{0.15, 0.0};
    CHECK(std::abs(degeneration_factor({1.0, 0.0}, qf, 1e-12).value) < 1e-10);
    CHECK(std::abs(degeneration_factor(qf * qf, qf, 1e-12).value) < 1e-8);
    CHECK(std::abs(degeneration_factor({0.3, 0.3}, qf, 1e-12).value) > 0.1);

    std::mt19937_64 rng(47);
    for (int k = -2; k <= 2; ++k) {
        const Complex qfr = test::random_annulus(rng, 0.05, 0.4);
        CHECK(std::abs(degeneration_factor(ipow(qfr, k), qfr, 1e-12).value) < 1e-8);
    }
    // generic q' stays well away from zero after normalization by gross scale
    for (int trial = 0; trial < 50; ++trial) {
        const Complex qfr = test::random_annulus(rng, 0.05, 0.4);
        Complex qp = test::random_annulus(rng, 0.2, 1.5);
        bool near_lattice = false;
        for (int k = -3; k <= 3; ++k)
            if (std::abs(qp - ipow(qfr, k)) < 0.05) near_lattice = true;
        if (near_lattice) continue;
        double scale = 0.0;
        const SeriesResult f = degeneration_factor(qp, qfr, 1e-12, {}, &scale);
        CHECK(std::abs(f.value) / scale > 1e-3);
    }
}

TEST_CASE("lattice degeneracy test") {
    KaehlerClass kc;
    kc.k = 2;
    kc.tau = {0.0, 1.0};
    kc.cbar = {0.2, 0.1};

    SUBCASE("exact lattice point") {
        kc.c = {Complex(0.0, 0.0), 3.0 * (Complex(2.0, 0.0) + Complex(1.0, 0.0) * kc.tau)};
        const DegeneracyResult r = is_degenerate(kc, 0, 1, 1e-9);
        CHECK(r.degenerate);
        CHECK(r.witness_m == 2);
        CHECK(r.witness_n == 1);
    }
    SUBCASE("generic offset") {
        kc.c = {Complex(0.0, 0.0), 3.0 * Complex(0.37, 0.11)};
        const DegeneracyResult r = is_degenerate(kc, 0, 1, 1e-9);
        CHECK_FALSE(r.degenerate);
        CHECK_FALSE(r.marginal);
    }
    SUBCASE("marginal band") {
        kc.c = {Complex(0.0, 0.0), 3.0 * Complex(1.0 + 5e-9, 0.0)};
        const DegeneracyResult r = is_degenerate(kc, 0, 1, 1e-9);
        CHECK_FALSE(r.degenerate);
        CHECK(r.marginal);
    }
    SUBCASE("index errors") {
        kc.c = {Complex(0.0, 0.0), Complex(0.5, 0.0)};
        CHECK_THROWS_AS(is_degenerate(kc, 1, 1, 1e-9), error);
        CHECK_THROWS_AS(is_degenerate(kc, 0, 2, 1e-9), error);
    }
}

TEST_CASE("window doubling stays within the reported tail bound") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const Complex qx = test::random_annulus(rng, 0.1, 2.0);
        const Complex qf = test::random_annulus(rng, 0.01, 0.5);
        SeriesLimits base;
        const ZetaTriple t1 = zeta_triple(qx, qf, 1e-9, base);
        SeriesLimits wide = base;
        wide.min_window = t1.terms_used;
        const ZetaTriple t2 = zeta_triple(qx, qf, 1e-9, wide);
        CHECK(std::abs(t2.plus - t1.plus) <= t1.tail_bound + 1e-15);
        CHECK(std::abs(t2.minus - t1.minus) <= t1.tail_bound + 1e-15);
        CHECK(std::abs(t2.zero - t1.zero) <= t1.tail_bound + 1e-15);
    }
}
