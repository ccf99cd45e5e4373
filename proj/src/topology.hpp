#pragma once

#include <array>
#include <vector>

#include "qtheta.hpp"

namespace hms {

// Class in H_1 of the reference fiber, coordinates in the fixed basis {a, b}.
struct H1Class {
    long long a = 0;
    long long b = 0;
    friend bool operator==(const H1Class&, const H1Class&) = default;
};

// Row-major 2x2 integer matrix with determinant 1.
struct SL2ZMatrix {
    long long m[2][2] = {{1, 0}, {0, 1}};

    friend bool operator==(const SL2ZMatrix&, const SL2ZMatrix&) = default;
    long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    SL2ZMatrix operator*(const SL2ZMatrix& o) const {
        SL2ZMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }
    H1Class apply(const H1Class& c) const {
        return {m[0][0] * c.a + m[0][1] * c.b, m[1][0] * c.a + m[1][1] * c.b};
    }
    static SL2ZMatrix identity() { return SL2ZMatrix{}; }
    SL2ZMatrix pow(int e) const {
        SL2ZMatrix r = identity();
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }
};

// Pairings of the complexified symplectic class with the homology basis:
// tau pairs with the fiber class, cbar with the exchange class, c[i] with the
// k per-point classes.  The universal input of the toolkit.
struct KaehlerClass {
    int k = 0;
    Complex tau{0.0, 1.0};
    Complex cbar{0.0, 0.0};
    std::vector<Complex> c;

    void validate() const;
};

// Exponentiated pairings plus their cube-root companions.  The companions are
// always computed from the pairings themselves, never by extracting complex
// roots, so each one cubes to its partner to machine precision.
struct QData {
    Complex qF, qC;
    Complex qF13, qC13;
    std::vector<Complex> qi;
    std::vector<Complex> qi13;
    std::vector<std::vector<Complex>> qtilde;  // qtilde[i][j] = exp(2 pi i (c_j - c_i)/3)
};

// Vanishing-cycle classes: (-2,-1), (-1,1), (1,2), then k copies of (1,1).
std::vector<H1Class> vanishing_cycle_classes(int k);

// Algebraic intersection number c1.a*c2.b - c1.b*c2.a.
long long intersection_number(const H1Class& c1, const H1Class& c2);

// Positive Dehn twist along the class c, acting on H_1 as x -> x - <x,c>*c.
// The sign of the pairing term is the single convention constant of this
// module; it is fixed by back-solving against the three printed monodromies.
SL2ZMatrix dehn_twist_matrix(const H1Class& c);

// Product of the three finite twists and the ninth power of the fiber twist;
// equal to the identity for every k.
SL2ZMatrix monodromy_relation();

QData qdata(const KaehlerClass& kc);

// exp(2 pi i w)
Complex exp2pii(Complex w);

}  // namespace hms
