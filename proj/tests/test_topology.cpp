#include <doctest.h>

#include <random>

#include "support.hpp"
#include "topology.hpp"

using namespace hms;

TEST_CASE("vanishing cycle classes") {
    const auto c0 = vanishing_cycle_classes(0);
    REQUIRE(c0.size() == 3);
    CHECK(c0[0] == H1Class{-2, -1});
    CHECK(c0[1] == H1Class{-1, 1});
    CHECK(c0[2] == H1Class{1, 2});

    const auto c1 = vanishing_cycle_classes(1);
    REQUIRE(c1.size() == 4);
    CHECK(c1[3] == H1Class{1, 1});

    CHECK(vanishing_cycle_classes(9).size() == 12);
    CHECK_THROWS_AS(vanishing_cycle_classes(-1), error);
    CHECK_THROWS_AS(vanishing_cycle_classes(10), error);
}

TEST_CASE("intersection numbers") {
    CHECK(intersection_number({-2, -1}, {-1, 1}) == -3);
    CHECK(intersection_number({-1, 1}, {1, 1}) == -2);
    CHECK(intersection_number({3, 5}, {3, 5}) == 0);
}

TEST_CASE("intersection table of the full collection") {
    const int k = 4;
    const auto cls = vanishing_cycle_classes(k);
    for (size_t i = 0; i < cls.size(); ++i) {
        for (size_t j = i + 1; j < cls.size(); ++j) {
            const long long n = std::abs(intersection_number(cls[i], cls[j]));
            long long expect;
            if (j <= 2) expect = 3;                    // among L0, L1, L2
            else if (i == 1) expect = 2;               // L1 against any L_{3+i}
            else if (i <= 2) expect = 1;               // L0, L2 against L_{3+i}
            else expect = 0;                           // blown-up cycles mutually
            CHECK(n == expect);
        }
    }
}

TEST_CASE("dehn twist matrices reproduce the printed monodromies") {
    const SL2ZMatrix t0 = dehn_twist_matrix({-2, -1});
    CHECK(t0.m[0][0] == -1);
    CHECK(t0.m[0][1] == 4);
    CHECK(t0.m[1][0] == -1);
    CHECK(t0.m[1][1] == 3);

    const SL2ZMatrix t1 = dehn_twist_matrix({-1, 1});
    CHECK(t1.m[0][0] == 2);
    CHECK(t1.m[0][1] == 1);
    CHECK(t1.m[1][0] == -1);
    CHECK(t1.m[1][1] == 0);

    const SL2ZMatrix t2 = dehn_twist_matrix({1, 2});
    CHECK(t2.m[0][0] == -1);
    CHECK(t2.m[0][1] == 1);
    CHECK(t2.m[1][0] == -4);
    CHECK(t2.m[1][1] == 3);

    const SL2ZMatrix t9 = dehn_twist_matrix({1, 1}).pow(9);
    CHECK(t9.m[0][0] == -8);
    CHECK(t9.m[0][1] == 9);
    CHECK(t9.m[1][0] == -9);
    CHECK(t9.m[1][1] == 10);

    CHECK_THROWS_AS(dehn_twist_matrix({0, 0}), error);
}

TEST_CASE("twist fixes its own class and has determinant one") {
    for (long long a = -5; a <= 5; ++a) {
        for (long long b = -5; b <= 5; ++b) {
            if (a == 0 && b == 0) continue;
            const H1Class c{a, b};
            const SL2ZMatrix t = dehn_twist_matrix(c);
            CHECK(t.det() == 1);
            CHECK(t.apply(c) == c);
        }
    }
}

TEST_CASE("monodromy relation is the identity") {
    CHECK(monodromy_relation() == SL2ZMatrix::identity());
    // ker(tau^9 - 1) contains (1,1)
    const SL2ZMatrix t9 = dehn_twist_matrix({1, 1}).pow(9);
    CHECK(t9.apply({1, 1}) == H1Class{1, 1});
}

TEST_CASE("qdata direct values") {
    KaehlerClass kc;
    kc.k = 0;
    kc.tau = {0.0, 1.0};
    kc.cbar = {0.0, 0.0};
    const QData q = qdata(kc);
    CHECK(std::abs(q.qF - std::exp(-2.0 * pi)) < 1e-15);
    CHECK(std::abs(q.qC - 1.0) < 1e-15);

    kc.tau = {0.3, -0.2};
    CHECK_THROWS_AS(qdata(kc), error);
}

TEST_CASE("qdata cube-root companions and qtilde") {
    KaehlerClass kc;
    kc.k = 2;
    kc.tau = {0.0, 1.0};
    kc.cbar = {0.0, 0.0};
    kc.c = {Complex(0.1, 0.0), Complex(0.1, 0.0) + 3.0 * Complex(0.2, 0.3)};
    const QData q = qdata(kc);
    CHECK(std::abs(q.qtilde[0][1] - exp2pii({0.2, 0.3})) < 1e-14);
    const Complex qt = q.qtilde[0][1];
    CHECK(std::abs(q.qi[1] - q.qi[0] * qt * qt * qt) < 1e-14);
}

TEST_CASE("qdata consistency over random classes") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const KaehlerClass kc = test::random_class(rng, 3);
        const QData q = qdata(kc);
        auto cubes_to = [](Complex root, Complex target) {
            return std::abs(root * root * root - target) <= 1e-12 * std::max(1.0, std::abs(target));
        };
        CHECK(cubes_to(q.qF13, q.qF));
        CHECK(cubes_to(q.qC13, q.qC));
        for (int i = 0; i < kc.k; ++i) {
            CHECK(cubes_to(q.qi13[static_cast<size_t>(i)], q.qi[static_cast<size_t>(i)]));
            for (int j = 0; j < kc.k; ++j) {
                const Complex qt = q.qtilde[static_cast<size_t>(i)][static_cast<size_t>(j)];
                CHECK(std::abs(q.qi[static_cast<size_t>(j)] -
                               q.qi[static_cast<size_t>(i)] * qt * qt * qt) <=
                      1e-12 * std::max(1.0, std::abs(q.qi[static_cast<size_t>(j)])));
            }
        }
        CHECK(std::abs(q.qF) < 1.0);
    }
}
