// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Criteria 3-8 run twice: once at the working tolerance and once with a
// tighter tolerance and doubled series windows (criterion 10); a verdict that
// flips between the two runs fails the stability criterion.

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "mirror.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hms;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// Tolerances of one evaluation round.
struct Round {
    double tol_theta = 1e-9;   // criterion 2 quasi-periodicity
    double tol_zeros = 1e-8;   // criterion 2 zero sets (scale-relative)
    double tol_zeta = 1e-9;    // criterion 3 transformation families
    double tol_zeta0 = 1e-10;  // criterion 3 vanishing of zeta_0(1, .)
    double tol_ratio = 1e-9;   // criterion 4
    double tol_cubic = 1e-9;   // criterion 6 cubic membership
    double tol_sigma = 1e-8;   // criterion 6 translation property
    double tol_cert = 1e-8;    // criteria 7-8
    SeriesLimits limits{};
};

Outcome criterion_monodromy() {
    Outcome o;
    o.require(monodromy_relation() == SL2ZMatrix::identity(), "relation is not the identity");
    const SL2ZMatrix t9 = dehn_twist_matrix({1, 1}).pow(9);
    const SL2ZMatrix expect{{{-8, 9}, {-9, 10}}};
    o.require(t9 == expect, "ninth twist power mismatch");
    return o;
}

Outcome criterion_theta(const Round& r) {
    Outcome o;
    std::mt19937_64 rng(2001);
    std::uniform_int_distribution<int> uv(-3, 3);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Complex z = test::random_complex(rng, 0.7);
        const Complex tau = test::random_tau(rng);
        worst = std::max(worst, quasi_period_check(z, tau, uv(rng), uv(rng), 1e-12, r.limits));
    }
    o.require(worst < r.tol_theta, "quasi-periodicity residual " + std::to_string(worst));

    auto vanishes = [&](const SeriesResult& sr) {
        return std::abs(sr.value) / std::max(1.0, sr.scale) < r.tol_zeros;
    };
    const Complex tau{0.13, 1.21};
    bool zeros_ok = true;
    for (int n = -1; n <= 1; ++n) {
        for (int m = -1; m <= 1; ++m) {
            const Complex zn{n / 3.0, 0.0};
            zeros_ok &= vanishes(theta({Fraction(1, 2), Fraction(1, 2)},
                                       3.0 * (zn + static_cast<double>(m) * tau), 3.0 * tau,
                                       1e-12, r.limits));
            zeros_ok &= vanishes(theta({Fraction(1, 6), Fraction(1, 2)},
                                       3.0 * (zn + (m + 1.0 / 3.0) * tau), 3.0 * tau, 1e-12,
                                       r.limits));
            zeros_ok &= vanishes(theta({Fraction(5, 6), Fraction(1, 2)},
                                       3.0 * (zn + (m - 1.0 / 3.0) * tau), 3.0 * tau, 1e-12,
                                       r.limits));
        }
    }
    o.require(zeros_ok, "zero-set membership failed");
    return o;
}

Outcome criterion_zeta(const Round& r) {
    Outcome o;
    std::mt19937_64 rng(2003);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Complex qc = test::random_annulus(rng, 0.1, 2.0);
        const Complex qf = test::random_annulus(rng, 0.01, 0.5);
        for (double res : zeta_transforms(qc, qf, 1e-12, r.limits))
            worst = std::max(worst, res);
    }
    o.require(worst < r.tol_zeta, "transformation residual " + std::to_string(worst));

    double worst0 = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const Complex qf = test::random_annulus(rng, 0.01, 0.5);
        worst0 = std::max(worst0,
                          std::abs(zeta_triple({1.0, 0.0}, qf, 1e-12, r.limits).zero));
    }
    o.require(worst0 < r.tol_zeta0, "zeta_0(1, qF) residual " + std::to_string(worst0));
    return o;
}

Outcome criterion_ratios(const Round& r) {
    Outcome o;
    std::mt19937_64 rng(2005);
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const KaehlerClass kc = test::random_class(rng, k);
        for (const RatioEntry& e : ratio_report(kc, 1e-12, r.limits)) {
            if (e.skipped) continue;
            worst = std::max(worst, e.residual);
        }
    }
    o.require(worst < r.tol_ratio, "ratio residual " + std::to_string(worst));

    // commutative point: the six-fold ratio collapses to -1
    KaehlerClass kc = test::random_class(rng, 1);
    kc.cbar = {0.0, 0.0};
    const CompositionTable t = alpha_table(kc, 1e-12, r.limits);
    const Complex ratio = t.alpha_at("x0*y1") * t.alpha_at("y0*z1") * t.alpha_at("z0*x1") /
                          (t.alpha_at("y0*x1") * t.alpha_at("z0*y1") * t.alpha_at("x0*z1"));
    o.require(std::abs(ratio + 1.0) < r.tol_ratio, "ratio at qC = 1 is not -1");

    // toric limit: with qF forced to zero the ratio is exactly -qC
    const Complex qc{0.37, 0.58};
    o.require(m2p2_ratio(qc, {0.0, 0.0}, 1e-12, r.limits) == -qc, "toric limit not exact");
    return o;
}

Outcome criterion_oracle(const Round& r) {
    Outcome o;
    for (unsigned long seed = 1; seed <= 10; ++seed) {
        const oracle::TorusModel model = oracle::build_model(3, seed);
        const oracle::OracleReport rep = oracle::verify_chain_relations(model, 8);
        for (const auto& c : rep.checks)
            o.require(c.ok, "seed " + std::to_string(seed) + ": " + c.name);
    }
    (void)r;
    return o;
}

Outcome criterion_cubic_sigma(const Round& r) {
    Outcome o;
    std::mt19937_64 rng(2011);
    const Complex tau{0.21, 1.07};
    const Complex z0{0.23, 0.11};
    const ThetaTriple t0 = vtheta_triple(z0, tau, 1e-12, r.limits);
    const Complex a = t0.plus.value, b = t0.zero.value, c = t0.minus.value;
    const TensorMu mu = mu_from_abc(a, b, c);

    ProjPoint base;
    base.x = {Complex(1, 0), Complex(0, 0), Complex(-1, 0)};
    o.require(projective_distance(sigma_map(a, b, c, base), ProjPoint::normalized({a, b, c})) <
                  1e-12,
              "sigma(1:0:-1) != (a:b:c)");

    double worst_det = 0.0, worst_sigma = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Complex z = test::random_complex(rng, 0.45);
        const ThetaTriple tz = vtheta_triple(z, tau, 1e-12, r.limits);
        const ProjPoint jz =
            ProjPoint::normalized({tz.plus.value, tz.zero.value, tz.minus.value});
        worst_det = std::max(worst_det,
                             std::abs(det_cubic(mu, jz)) / det_cubic_scale(mu, jz));
        const ThetaTriple ts = vtheta_triple(z + z0, tau, 1e-12, r.limits);
        const ProjPoint jzs =
            ProjPoint::normalized({ts.plus.value, ts.zero.value, ts.minus.value});
        worst_sigma = std::max(worst_sigma, projective_distance(sigma_map(a, b, c, jz), jzs));
    }
    o.require(worst_det < r.tol_cubic, "det residual " + std::to_string(worst_det));
    o.require(worst_sigma < r.tol_sigma, "translation residual " + std::to_string(worst_sigma));
    return o;
}

Outcome criterion_certificates(const Round& r) {
    Outcome o;
    std::mt19937_64 rng(2017);
    for (int trial = 0; trial < 25; ++trial) {
        const int k = static_cast<int>(rng() % 5);
        const KaehlerClass kc = test::random_class(rng, k);
        const Certificate cert = certify(kc, r.tol_cert, r.limits);
        o.require(!cert.degenerate, "unexpected degenerate draw");
        for (const CertCheck& c : cert.checks)
            o.require(c.skipped || c.pass,
                      "trial " + std::to_string(trial) + " check " + c.name + " residual " +
                          std::to_string(c.residual));
    }
    return o;
}

Outcome criterion_modular(const Round& r) {
    Outcome o;
    std::mt19937_64 rng(2027);
    for (int trial = 0; trial < 3; ++trial) {
        const KaehlerClass kc = test::random_class(rng, 2);
        const Certificate base = certify(kc, r.tol_cert, r.limits);
        for (const Complex shift : {Complex(3.0, 0.0), 3.0 * kc.tau}) {
            KaehlerClass moved = kc;
            moved.cbar = kc.cbar + shift;
            const Certificate cert = certify(moved, r.tol_cert, r.limits);
            o.require(cert.checks.size() == base.checks.size(), "check lists differ");
            for (size_t i = 0; i < cert.checks.size(); ++i) {
                const CertCheck& x = base.checks[i];
                const CertCheck& y = cert.checks[i];
                o.require(x.name == y.name && x.skipped == y.skipped && x.pass == y.pass,
                          "verdict flip under shift at " + x.name);
                if (!x.skipped && !y.skipped)
                    o.require(std::abs(x.residual - y.residual) < r.tol_cert,
                              "residual drift under shift at " + x.name);
            }
        }

        // cbar -> cbar + tau: the documented 3-cycle of the alpha gauge triple
        KaehlerClass cycled = kc;
        cycled.cbar = kc.cbar + kc.tau;
        const auto abc = alpha_table(kc, 1e-12, r.limits).abc();
        const auto abc_s = alpha_table(cycled, 1e-12, r.limits).abc();
        const Complex lam = abc_s[0] / abc[1];  // common scalar of the permuted triple
        bool cycle_ok = true;
        const std::array<Complex, 3> permuted{abc[1], abc[2], abc[0]};
        for (int i = 0; i < 3; ++i) {
            const Complex want = lam * permuted[static_cast<size_t>(i)];
            if (std::abs(abc_s[static_cast<size_t>(i)] - want) >
                r.tol_cert * std::max(1.0, std::abs(want)))
                cycle_ok = false;
        }
        o.require(cycle_ok, "alpha table does not 3-cycle under cbar + tau");
    }
    return o;
}

Outcome criterion_degeneration(const Round& r) {
    Outcome o;
    std::mt19937_64 rng(2029);
    for (int k = -2; k <= 2; ++k) {
        const Complex qf = test::random_annulus(rng, 0.05, 0.4);
        double scale = 0.0;
        const SeriesResult f =
            degeneration_factor(ipow(qf, k), qf, 1e-12, r.limits, &scale);
        o.require(std::abs(f.value) < 1e-8,
                  "factor at lattice power " + std::to_string(k) + " not vanishing");
    }
    for (int trial = 0; trial < 50; ++trial) {
        const Complex qf = test::random_annulus(rng, 0.05, 0.4);
        const Complex qp = test::random_annulus(rng, 0.2, 1.5);
        bool near = false;
        for (int k = -3; k <= 3; ++k)
            if (std::abs(qp - ipow(qf, k)) < 0.05) near = true;
        if (near) continue;
        double scale = 0.0;
        const SeriesResult f = degeneration_factor(qp, qf, 1e-12, r.limits, &scale);
        o.require(std::abs(f.value) / scale > 1e-3, "generic factor too small");
    }

    // lattice test against the factor test, 50 trials mixing both classes
    int agreements = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Complex tau = test::random_tau(rng);
        std::uniform_int_distribution<int> mn(-1, 1);
        Complex w;
        if (trial % 2 == 0) {
            w = Complex(mn(rng), 0.0) + Complex(mn(rng), 0.0) * tau;  // on the lattice
        } else {
            do {
                w = test::random_complex(rng, 0.45);
            } while (std::abs(w) < 0.1);
        }
        KaehlerClass kc;
        kc.k = 2;
        kc.tau = tau;
        kc.cbar = {0.3, 0.2};
        kc.c = {Complex(0.0, 0.0), 3.0 * w};
        const bool lattice_says = is_degenerate(kc, 0, 1, 1e-8).degenerate;
        double scale = 0.0;
        const SeriesResult f =
            degeneration_factor(exp2pii(w), exp2pii(tau), 1e-12, r.limits, &scale);
        const bool factor_says = std::abs(f.value) / scale < 1e-6;
        if (lattice_says == factor_says) ++agreements;
    }
    o.require(agreements == 50, "lattice and factor tests disagree");
    return o;
}

struct Criterion {
    int number;
    std::string title;
    Outcome first;      // working tolerances
    bool has_stability; // participates in criterion 10
    Outcome second;     // tightened rerun
};

}  // namespace

int main() {
    Round work;

    Round tight;  // criterion 10: tolerance 1e-9 on the 1e-8 criteria, doubled windows
    tight.limits.min_window = 16;
    tight.tol_zeros = 1e-9;
    tight.tol_cubic = 1e-9;
    tight.tol_sigma = 1e-9;
    tight.tol_cert = 1e-9;

    std::vector<Criterion> table;
    table.push_back({1, "monodromy relation and tau^9, exact", criterion_monodromy(), false, {}});
    table.push_back({2, "theta quasi-periodicity and zero sets", criterion_theta(work), true,
                     criterion_theta(tight)});
    table.push_back({3, "zeta transformation families and zeta_0(1, .)", criterion_zeta(work),
                     true, criterion_zeta(tight)});
    table.push_back({4, "ratio propositions, commutative point, toric limit",
                     criterion_ratios(work), true, criterion_ratios(tight)});
    table.push_back({5, "exact torus-model laws and chain identities", criterion_oracle(work),
                     true, criterion_oracle(tight)});
    table.push_back({6, "cubic membership and sigma translation", criterion_cubic_sigma(work),
                     true, criterion_cubic_sigma(tight)});
    table.push_back({7, "mirror certificates on random classes", criterion_certificates(work),
                     true, criterion_certificates(tight)});
    table.push_back({8, "modular invariance and the alpha 3-cycle", criterion_modular(work),
                     true, criterion_modular(tight)});
    table.push_back({9, "degeneration factor and lattice detection",
                     criterion_degeneration(work), false, {}});

    bool all_pass = true;
    bool stable = true;
    for (const Criterion& c : table) {
        const bool ok = c.first.pass;
        all_pass = all_pass && ok;
        std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), c.first.detail.empty() ? "" : " -- ",
                    c.first.detail.c_str());
        if (c.has_stability && c.first.pass != c.second.pass) {
            stable = false;
            std::printf("       criterion %d verdict flipped under the tightened rerun\n",
                        c.number);
        }
    }
    all_pass = all_pass && stable;
    std::printf("[%s] criterion 10: stability under tolerance/window tightening\n",
                stable ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
