#include "mirror.hpp"

#include <cmath>

namespace hms {

namespace {

ProjPoint embed(Complex z, Complex tau, double tol, const SeriesLimits& limits) {
    const ThetaTriple t = vtheta_triple(z, tau, tol, limits);
    return ProjPoint::normalized({t.plus.value, t.zero.value, t.minus.value});
}

double max_norm_to_lattice(Complex w, Complex tau) {
    const auto [x, y] = lattice_coordinates(w, tau);
    return std::max(std::abs(x - std::round(x)), std::abs(y - std::round(y)));
}

}  // namespace

Complex reduce_mod_lattice(Complex z, Complex tau) {
    const auto [x, y] = lattice_coordinates(z, tau);
    const double mx = std::floor(x);
    const double my = std::floor(y);
    if (mx == 0.0 && my == 0.0) return z;  // keep already-reduced values bit-exact
    return z - mx - my * tau;
}

MirrorData mirror_map(const KaehlerClass& kc, double tol, const SeriesLimits& limits) {
    kc.validate();
    MirrorData m;
    m.tau = kc.tau;
    m.z0 = reduce_mod_lattice(kc.cbar / 3.0, kc.tau);
    m.l1_divisor = -m.z0;
    m.l2_divisor = {0.0, 0.0};
    m.commutative = max_norm_to_lattice(kc.cbar, kc.tau) <= tol;
    for (int i = 0; i < kc.k; ++i) {
        const Complex pi_red = reduce_mod_lattice(kc.c[static_cast<size_t>(i)] / 3.0, kc.tau);
        m.p.push_back(pi_red);
        m.blown_points.push_back(embed(m.z0 + pi_red, kc.tau, tol * 1e-2, limits));
    }
    for (int i = 0; i < kc.k; ++i) {
        for (int j = i + 1; j < kc.k; ++j) {
            const DegeneracyResult d = is_degenerate(kc, i, j, tol);
            if (d.degenerate) m.degenerate_pairs.emplace_back(i, j);
            if (d.marginal) m.marginal_pairs.emplace_back(i, j);
        }
    }
    return m;
}

BothSides build_both_sides(const KaehlerClass& kc, double tol, const SeriesLimits& limits) {
    BothSides out;
    out.mirror = mirror_map(kc, tol, limits);
    if (!out.mirror.degenerate_pairs.empty()) {
        const auto [i, j] = out.mirror.degenerate_pairs.front();
        fail(errc::degenerate, "build_both_sides: degenerate pair (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
    }
    const double series_tol = std::min(1e-10, tol * 1e-2);
    const QData q = qdata(kc);
    alpha_from_qdata(q, out.table, series_tol, limits);
    beta_from_qdata(q, out.table, series_tol, limits);

    const ThetaTriple t0 = vtheta_triple(out.mirror.z0, kc.tau, series_tol, limits);
    const TensorMu mu = mu_from_abc(t0.plus.value, t0.zero.value, t0.minus.value);
    out.quiver = build_quiver(mu, out.mirror.blown_points, tol);
    return out;
}

namespace {

struct CheckList {
    std::vector<CertCheck> checks;
    double tol;

    void add(const std::string& name, double residual) {
        checks.push_back({name, residual, tol, residual <= tol, false});
    }
    void add_skipped(const std::string& name) { checks.push_back({name, 0.0, tol, true, true}); }
};

double triple_distance(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
    return projective_distance(ProjPoint::normalized(a), ProjPoint::normalized(b));
}

// Checks (a)-(f): everything that compares the two sides of one class.
void base_checks(const KaehlerClass& kc, double tol, const SeriesLimits& limits, CheckList& out,
                 const std::string& prefix) {
    const double series_tol = std::min(1e-10, tol * 1e-2);

    // (a) gauge-path agreement of the two alpha routes
    {
        const CompositionTable za = alpha_table(kc, series_tol, limits);
        const CompositionTable th = alpha_table_theta(kc, series_tol, limits);
        double worst = 0.0;
        for (const auto& [key, value] : za.alpha) {
            const double rel =
                std::abs(value - th.alpha_at(key)) / std::max(1.0, std::abs(value));
            worst = std::max(worst, rel);
        }
        out.add(prefix + "alpha_gauge_path", worst);
    }

    // (b) every ratio identity
    for (const RatioEntry& e : ratio_report(kc, series_tol, limits)) {
        if (e.skipped)
            out.add_skipped(prefix + "ratio." + e.name);
        else
            out.add(prefix + "ratio." + e.name, e.residual);
    }

    // (c)-(f) need the quiver side
    BothSides sides;
    bool have_sides = false;
    try {
        sides = build_both_sides(kc, tol, limits);
        have_sides = true;
    } catch (const error&) {
        // degenerate class: the quiver-side comparisons have no meaning
    }
    if (!have_sides) {
        out.add_skipped(prefix + "beta_vs_quotient_form");
        out.add_skipped(prefix + "blown_point_on_cubic");
        out.add_skipped(prefix + "sigma_translation");
        out.add_skipped(prefix + "recover_points_roundtrip");
        return;
    }

    const MirrorData& md = sides.mirror;
    const auto abc = sides.quiver.mu;  // tensor built from j(z0)
    const ThetaTriple t0 = vtheta_triple(md.z0, kc.tau, series_tol, limits);
    const Complex a = t0.plus.value, b = t0.zero.value, c = t0.minus.value;

    for (int i = 0; i < kc.k; ++i) {
        const std::string si = "[" + std::to_string(i) + "]";
        const ProjPoint& vi = md.blown_points[static_cast<size_t>(i)];

        // (d) v_i sits on the determinant cubic
        out.add(prefix + "blown_point_on_cubic" + si,
                std::abs(det_cubic(abc, vi)) / std::max(det_cubic_scale(abc, vi), 1e-300));

        // (c) beta triple matches the quotient form at v_i projectively
        try {
            const auto form = quotient_form(abc, vi, tol);
            const auto& bt = sides.table.beta[static_cast<size_t>(i)];
            out.add(prefix + "beta_vs_quotient_form" + si,
                    triple_distance({bt.xbar, bt.ybar, bt.zbar}, form));
        } catch (const error&) {
            out.add_skipped(prefix + "beta_vs_quotient_form" + si);
        }

        // (e) sigma composed with the embedding is translation by z0
        try {
            const ProjPoint jp = embed(md.p[static_cast<size_t>(i)], kc.tau, series_tol, limits);
            const ProjPoint s = sigma_map(a, b, c, jp);
            out.add(prefix + "sigma_translation" + si, projective_distance(s, vi));
        } catch (const error&) {
            out.add_skipped(prefix + "sigma_translation" + si);
        }
    }

    // (f) point recovery round trip
    try {
        const auto rec = recover_points(sides.quiver, tol);
        double worst = 0.0;
        for (size_t i = 0; i < rec.size(); ++i)
            worst = std::max(worst, projective_distance(rec[i], md.blown_points[i]));
        out.add(prefix + "recover_points_roundtrip", worst);
    } catch (const error&) {
        out.add_skipped(prefix + "recover_points_roundtrip");
    }
}

// Largest residual among the non-skipped checks of a list.
double worst_residual(const CheckList& list) {
    double worst = 0.0;
    for (const CertCheck& c : list.checks)
        if (!c.skipped) worst = std::max(worst, c.residual);
    return worst;
}

bool verdicts_match(const CheckList& a, const CheckList& b) {
    if (a.checks.size() != b.checks.size()) return false;
    for (size_t i = 0; i < a.checks.size(); ++i)
        if (a.checks[i].pass != b.checks[i].pass || a.checks[i].skipped != b.checks[i].skipped)
            return false;
    return true;
}

}  // namespace

Certificate certify(const KaehlerClass& kc, double tol, const SeriesLimits& limits) {
    kc.validate();
    if (!(tol > 0)) fail(errc::invalid_argument, "certify: tol must be positive");
    const double series_tol = std::min(1e-10, tol * 1e-2);

    Certificate cert;
    cert.input = kc;
    const MirrorData md = mirror_map(kc, tol, limits);
    cert.commutative = md.commutative;
    cert.degenerate = !md.degenerate_pairs.empty();
    cert.marginal = !md.marginal_pairs.empty();
    cert.degenerate_pairs = md.degenerate_pairs;
    cert.marginal_pairs = md.marginal_pairs;

    CheckList base{{}, tol};
    base_checks(kc, tol, limits, base, "");
    cert.checks = base.checks;

    // (g) modular-invariance spot check: cbar shifted by 3*tau.  The alpha
    // triple changes by one common scalar, the beta triples and the blown
    // points not at all (projectively); every check verdict must agree.
    {
        KaehlerClass shifted = kc;
        shifted.cbar = kc.cbar + 3.0 * kc.tau;
        CheckList sh{{}, tol};
        base_checks(shifted, tol, limits, sh, "");
        cert.checks.push_back({"shift_3tau_checks_agree",
                               verdicts_match(base, sh) ? worst_residual(sh) : 1.0, tol,
                               verdicts_match(base, sh) && worst_residual(sh) <= tol, false});

        const auto abc0 = alpha_table(kc, series_tol, limits).abc();
        const auto abc1 = alpha_table(shifted, series_tol, limits).abc();
        cert.checks.push_back({"shift_3tau_alpha_projective", triple_distance(abc0, abc1), tol,
                               triple_distance(abc0, abc1) <= tol, false});
        if (kc.k >= 1) {
            const CompositionTable b0 = beta_table(kc, series_tol, limits);
            const CompositionTable b1 = beta_table(shifted, series_tol, limits);
            double worst = 0.0;
            for (int i = 0; i < kc.k; ++i) {
                const auto &x = b0.beta[static_cast<size_t>(i)], &y = b1.beta[static_cast<size_t>(i)];
                for (auto [u, v] : {std::pair(x.xbar, y.xbar), std::pair(x.ybar, y.ybar),
                                    std::pair(x.zbar, y.zbar)})
                    worst = std::max(worst, std::abs(u - v) / std::max(1.0, std::abs(u)));
            }
            cert.checks.push_back(
                {"shift_3tau_beta_exact", worst, tol, worst <= tol, false});
        }
    }

    // Simultaneous 1/3-lattice translation of all blown-up points (an
    // automorphism of the curve data): all checks keep their verdicts.
    if (kc.k >= 1) {
        for (const auto& [label, shift] :
             {std::pair<std::string, Complex>{"unit", {1.0, 0.0}},
              std::pair<std::string, Complex>{"tau", kc.tau}}) {
            KaehlerClass moved = kc;
            for (Complex& ci : moved.c) ci += shift;  // p_i moves by shift/3
            CheckList sh{{}, tol};
            base_checks(moved, tol, limits, sh, "");
            const bool ok = verdicts_match(base, sh) && worst_residual(sh) <= tol;
            cert.checks.push_back({"third_lattice_shift_" + label,
                                   ok ? worst_residual(sh) : 1.0, tol, ok, false});
        }
    }

    cert.pass = true;
    for (const CertCheck& c : cert.checks)
        if (!c.skipped && !c.pass) cert.pass = false;
    return cert;
}

}  // namespace hms
