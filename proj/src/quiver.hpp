#pragma once

#include <array>
#include <vector>

#include "qtheta.hpp"

namespace hms {

// Point of a projective plane, stored normalized: largest-magnitude
// coordinate equal to 1.
struct ProjPoint {
    std::array<Complex, 3> x{Complex(1, 0), Complex(0, 0), Complex(0, 0)};

    static ProjPoint normalized(const std::array<Complex, 3>& v);
};

// Scale-free distance: norm of the normalized cross product.
double projective_distance(const ProjPoint& p, const ProjPoint& q);

// Composition tensor mu: V (x) U -> W in the bases (x1,y1,z1), (x0,y0,z0),
// (xbar,ybar,zbar); t[w][v][u].  Built from a gauge triple (a,b,c) only nine
// components are nonzero.
struct TensorMu {
    Complex t[3][3][3] = {};

    // Matrix of mu_v = mu(v, .) : U -> W, rows indexed by W.
    std::array<std::array<Complex, 3>, 3> contract_v(const ProjPoint& v) const;
    // Matrix of mu_u = mu(., u) : V -> W.
    std::array<std::array<Complex, 3>, 3> contract_u(const std::array<Complex, 3>& u) const;
    double scale() const;  // largest component magnitude
};

// Tensor whose contraction at v = (X,Y,Z) is ((bX aZ cY), (cZ bY aX), (aY cX bZ)).
TensorMu mu_from_abc(Complex a, Complex b, Complex c);

// det(mu_v); for the (a,b,c) tensor this is
// (a^3+b^3+c^3) XYZ - abc (X^3+Y^3+Z^3).
Complex det_cubic(const TensorMu& mu, const ProjPoint& v);

// Monomial-magnitude scale for normalizing det_cubic residuals.
double det_cubic_scale(const TensorMu& mu, const ProjPoint& v);

// sigma(X:Y:Z) = (a^2 XZ - bc Y^2 : c^2 YZ - ab X^2 : b^2 XY - ac Z^2).
ProjPoint sigma_map(Complex a, Complex b, Complex c, const ProjPoint& v);

// Kernel direction of mu_v at a rank-2 point, from row cross-products; the
// two largest candidates must agree projectively to tol.
std::array<Complex, 3> kernel_vector(const TensorMu& mu, const ProjPoint& v, double tol);

// Normalized linear form annihilating Im(mu_v), from column cross-products.
std::array<Complex, 3> quotient_form(const TensorMu& mu, const ProjPoint& v, double tol = 1e-8);

// Sampled nondegeneracy: mu_u and mu_v of rank >= 2 at quasi-uniform sample
// points, and every sampled linear form on W pairs to a bilinear form of
// rank >= 2.
bool is_nondegenerate(const TensorMu& mu, int samples = 200, double rank_tol = 1e-8);

// All four coefficients of det(mu_v) numerically zero: the commutative case.
bool is_commutative_tensor(const TensorMu& mu, double tol = 1e-8);

// The blown-up quiver algebra: three plane objects plus k mutually orthogonal
// point objects.  Point object j carries the quotient data of mu at v_j.
struct QuiverAlgebra {
    TensorMu mu;
    std::vector<ProjPoint> points;  // v_j on the determinant cubic

    struct PointData {
        // V -> V/<v_j> as a 2x3 matrix (rows annihilate v_j).
        std::array<std::array<Complex, 3>, 2> v_quotient{};
        // W -> W/Im(mu_{v_j}) as a single linear form.
        std::array<Complex, 3> w_quotient{};
        // Induced composition (V/<v_j>) (x) U -> W/Im(mu_{v_j}) as a 2x3 matrix.
        std::array<std::array<Complex, 3>, 2> induced{};
    };
    std::vector<PointData> point_data;

    int k() const { return static_cast<int>(points.size()); }
    int hom_dim(int i, int j) const;  // objects 0,1,2 then the k point objects
    long total_dimension() const;     // identities included
};

QuiverAlgebra build_quiver(const TensorMu& mu, const std::vector<ProjPoint>& points,
                           double tol = 1e-8);

// Kernel of the composition V -> Hom(F1, O_j) per point; round-trips the
// build_quiver inputs.  Rank != 2 of a quotient map raises errc::ambiguous.
std::vector<ProjPoint> recover_points(const QuiverAlgebra& q, double tol = 1e-8);

}  // namespace hms
