#include "topology.hpp"

#include <cmath>

namespace hms {

Complex exp2pii(Complex w) { return std::exp(Complex(0.0, 2.0 * pi) * w); }

void KaehlerClass::validate() const {
    if (k < 0 || k > 9) fail(errc::invalid_argument, "KaehlerClass: k must lie in [0, 9]");
    if (static_cast<int>(c.size()) != k)
        fail(errc::invalid_argument, "KaehlerClass: c must hold exactly k pairings");
    if (!(tau.imag() > 0))
        fail(errc::invalid_argument, "KaehlerClass: Im(tau) must be positive");
    auto finite = [](Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); };
    if (!finite(tau) || !finite(cbar))
        fail(errc::invalid_argument, "KaehlerClass: non-finite pairing");
    for (const Complex& ci : c)
        if (!finite(ci)) fail(errc::invalid_argument, "KaehlerClass: non-finite pairing");
}

std::vector<H1Class> vanishing_cycle_classes(int k) {
    if (k < 0 || k > 9) fail(errc::invalid_argument, "vanishing_cycle_classes: k outside [0, 9]");
    std::vector<H1Class> classes = {{-2, -1}, {-1, 1}, {1, 2}};
    classes.insert(classes.end(), static_cast<size_t>(k), H1Class{1, 1});
    return classes;
}

long long intersection_number(const H1Class& c1, const H1Class& c2) {
    return c1.a * c2.b - c1.b * c2.a;
}

SL2ZMatrix dehn_twist_matrix(const H1Class& c) {
    if (c.a == 0 && c.b == 0) fail(errc::invalid_argument, "dehn_twist_matrix: zero class");
    // x -> x - <x,c>*c, columns are the images of the basis vectors.
    SL2ZMatrix t;
    t.m[0][0] = 1 - c.a * c.b;
    t.m[0][1] = c.a * c.a;
    t.m[1][0] = -c.b * c.b;
    t.m[1][1] = 1 + c.a * c.b;
    return t;
}

SL2ZMatrix monodromy_relation() {
    const auto classes = vanishing_cycle_classes(1);
    const SL2ZMatrix t0 = dehn_twist_matrix(classes[0]);
    const SL2ZMatrix t1 = dehn_twist_matrix(classes[1]);
    const SL2ZMatrix t2 = dehn_twist_matrix(classes[2]);
    const SL2ZMatrix t9 = dehn_twist_matrix(classes[3]).pow(9);
    return t0 * t1 * t2 * t9;
}

QData qdata(const KaehlerClass& kc) {
    kc.validate();
    QData q;
    q.qF = exp2pii(kc.tau);
    q.qC = exp2pii(kc.cbar);
    q.qF13 = exp2pii(kc.tau / 3.0);
    q.qC13 = exp2pii(kc.cbar / 3.0);
    q.qi.reserve(kc.c.size());
    q.qi13.reserve(kc.c.size());
    for (const Complex& ci : kc.c) {
        q.qi.push_back(exp2pii(ci));
        q.qi13.push_back(exp2pii(ci / 3.0));
    }
    q.qtilde.assign(kc.c.size(), std::vector<Complex>(kc.c.size(), Complex(1.0, 0.0)));
    for (size_t i = 0; i < kc.c.size(); ++i)
        for (size_t j = 0; j < kc.c.size(); ++j)
            q.qtilde[i][j] = exp2pii((kc.c[j] - kc.c[i]) / 3.0);
    return q;
}

}  // namespace hms
