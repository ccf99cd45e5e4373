#include "quiver.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace hms {

namespace {

using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;

Mat3 to_eigen(const std::array<std::array<Complex, 3>, 3>& m) {
    Mat3 e;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return e;
}

std::array<Complex, 3> cross(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm3(const std::array<Complex, 3>& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

// Numerical rank with the singular-value gap rule sigma_{r+1}/sigma_1 < tol.
int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) / s(0) >= tol) ++r;
    return r;
}

// Deterministic quasi-uniform directions in C^3, unit norm: golden-angle
// lattice over the three phases and two magnitude splits.
std::array<Complex, 3> sample_direction(int i, int n) {
    const double g1 = 0.7548776662466927;  // plastic-number lattice increments
    const double g2 = 0.5698402909980532;
    const double t = (i + 0.5) / n;
    const double u = std::fmod(g1 * i, 1.0);
    const double v = std::fmod(g2 * i, 1.0);
    const double r1 = std::sqrt(t);
    const double r2 = std::sqrt(1.0 - t) * std::cos(pi * u);
    const double r3 = std::sqrt(1.0 - t) * std::sin(pi * u);
    const double ph1 = 2.0 * pi * v;
    const double ph2 = 2.0 * pi * std::fmod(u + v, 1.0);
    return {Complex(r1 * std::cos(ph1), r1 * std::sin(ph1)),
            Complex(r2 * std::cos(ph2), r2 * std::sin(ph2)), Complex(r3, 0.0)};
}

}  // namespace

ProjPoint ProjPoint::normalized(const std::array<Complex, 3>& v) {
    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(v[static_cast<size_t>(i)]) > std::abs(v[static_cast<size_t>(best)])) best = i;
    if (std::abs(v[static_cast<size_t>(best)]) == 0.0)
        fail(errc::invalid_argument, "ProjPoint: zero vector");
    ProjPoint p;
    for (int i = 0; i < 3; ++i)
        p.x[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] / v[static_cast<size_t>(best)];
    return p;
}

double projective_distance(const ProjPoint& p, const ProjPoint& q) {
    const auto c = cross(p.x, q.x);
    return norm3(c) / (norm3(p.x) * norm3(q.x));
}

std::array<std::array<Complex, 3>, 3> TensorMu::contract_v(const ProjPoint& v) const {
    std::array<std::array<Complex, 3>, 3> m{};
    for (int w = 0; w < 3; ++w)
        for (int u = 0; u < 3; ++u) {
            Complex s{0, 0};
            for (int i = 0; i < 3; ++i)
                s += t[w][i][u] * v.x[static_cast<size_t>(i)];
            m[static_cast<size_t>(w)][static_cast<size_t>(u)] = s;
        }
    return m;
}

std::array<std::array<Complex, 3>, 3> TensorMu::contract_u(const std::array<Complex, 3>& u) const {
    std::array<std::array<Complex, 3>, 3> m{};
    for (int w = 0; w < 3; ++w)
        for (int i = 0; i < 3; ++i) {
            Complex s{0, 0};
            for (int j = 0; j < 3; ++j)
                s += t[w][i][j] * u[static_cast<size_t>(j)];
            m[static_cast<size_t>(w)][static_cast<size_t>(i)] = s;
        }
    return m;
}

double TensorMu::scale() const {
    double s = 0.0;
    for (int w = 0; w < 3; ++w)
        for (int v = 0; v < 3; ++v)
            for (int u = 0; u < 3; ++u) s = std::max(s, std::abs(t[w][v][u]));
    return s;
}

TensorMu mu_from_abc(Complex a, Complex b, Complex c) {
    if (a == Complex(0, 0) && b == Complex(0, 0) && c == Complex(0, 0))
        fail(errc::invalid_argument, "mu_from_abc: zero tensor");
    TensorMu mu;
    // Row xbar of mu_v: (bX, aZ, cY); row ybar: (cZ, bY, aX); row zbar: (aY, cX, bZ).
    mu.t[0][0][0] = b;  // X acting on x0 -> xbar
    mu.t[0][2][1] = a;  // Z on y0 -> xbar
    mu.t[0][1][2] = c;  // Y on z0 -> xbar
    mu.t[1][2][0] = c;
    mu.t[1][1][1] = b;
    mu.t[1][0][2] = a;
    mu.t[2][1][0] = a;
    mu.t[2][0][1] = c;
    mu.t[2][2][2] = b;
    return mu;
}

Complex det_cubic(const TensorMu& mu, const ProjPoint& v) {
    const auto m = mu.contract_v(v);
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double det_cubic_scale(const TensorMu& mu, const ProjPoint& v) {
    double vmax = 0.0;
    for (const Complex& c : v.x) vmax = std::max(vmax, std::abs(c));
    const double s = mu.scale();
    return s * s * s * vmax * vmax * vmax;
}

ProjPoint sigma_map(Complex a, Complex b, Complex c, const ProjPoint& v) {
    const Complex x = v.x[0], y = v.x[1], z = v.x[2];
    const std::array<Complex, 3> img{a * a * x * z - b * c * y * y,
                                     c * c * y * z - a * b * x * x,
                                     b * b * x * y - a * c * z * z};
    double vmax = 0.0;
    for (const Complex& t : v.x) vmax = std::max(vmax, std::abs(t));
    double smax = std::max({std::abs(a), std::abs(b), std::abs(c)});
    const double scale = smax * smax * vmax * vmax;
    if (norm3(img) < 1e-12 * std::max(scale, 1e-300))
        fail(errc::degenerate, "sigma_map: indeterminate point");
    return ProjPoint::normalized(img);
}

namespace {

// Shared cross-product extraction: rows give the kernel of mu_v, columns give
// the annihilator of its image.  The two largest candidates must agree.
std::array<Complex, 3> rank2_direction(const std::array<std::array<Complex, 3>, 3>& m,
                                       bool use_rows, double tol) {
    std::array<std::array<Complex, 3>, 3> vecs;
    for (int i = 0; i < 3; ++i) {
        const int a = (i + 1) % 3, b = (i + 2) % 3;
        std::array<Complex, 3> va, vb;
        for (int j = 0; j < 3; ++j) {
            va[static_cast<size_t>(j)] = use_rows ? m[static_cast<size_t>(a)][static_cast<size_t>(j)]
                                                  : m[static_cast<size_t>(j)][static_cast<size_t>(a)];
            vb[static_cast<size_t>(j)] = use_rows ? m[static_cast<size_t>(b)][static_cast<size_t>(j)]
                                                  : m[static_cast<size_t>(j)][static_cast<size_t>(b)];
        }
        vecs[static_cast<size_t>(i)] = cross(va, vb);
    }
    // order by magnitude
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return norm3(vecs[static_cast<size_t>(a)]) > norm3(vecs[static_cast<size_t>(b)]);
    });
    double mscale = 0.0;
    for (const auto& row : m)
        for (const Complex& c : row) mscale = std::max(mscale, std::abs(c));
    const auto& v0 = vecs[static_cast<size_t>(idx[0])];
    if (norm3(v0) < tol * mscale * mscale)
        fail(errc::degenerate, "rank of the contracted matrix is <= 1");
    const auto& v1 = vecs[static_cast<size_t>(idx[1])];
    if (norm3(v1) > tol * mscale * mscale) {
        const ProjPoint p0 = ProjPoint::normalized(v0);
        const ProjPoint p1 = ProjPoint::normalized(v1);
        if (projective_distance(p0, p1) > std::sqrt(tol))
            fail(errc::ambiguous, "independent cross-products disagree");
    }
    std::array<Complex, 3> out = v0;
    const double n = norm3(out);
    for (Complex& c : out) c /= n;
    return out;
}

}  // namespace

std::array<Complex, 3> kernel_vector(const TensorMu& mu, const ProjPoint& v, double tol) {
    if (std::abs(det_cubic(mu, v)) > tol * std::max(det_cubic_scale(mu, v), 1e-300))
        fail(errc::invalid_argument, "kernel_vector: point is not on the determinant cubic");
    return rank2_direction(mu.contract_v(v), /*use_rows=*/true, tol);
}

std::array<Complex, 3> quotient_form(const TensorMu& mu, const ProjPoint& v, double tol) {
    if (std::abs(det_cubic(mu, v)) > tol * std::max(det_cubic_scale(mu, v), 1e-300))
        fail(errc::invalid_argument, "quotient_form: point is not on the determinant cubic");
    return rank2_direction(mu.contract_v(v), /*use_rows=*/false, tol);
}

bool is_nondegenerate(const TensorMu& mu, int samples, double rank_tol) {
    // Coordinate axes and pair sums first: rank drops of structured tensors
    // concentrate there and quasi-uniform samples never land on them.
    std::vector<std::array<Complex, 3>> probes;
    const Complex one{1, 0}, nil{0, 0};
    probes.push_back({one, nil, nil});
    probes.push_back({nil, one, nil});
    probes.push_back({nil, nil, one});
    probes.push_back({one, one, nil});
    probes.push_back({one, nil, one});
    probes.push_back({nil, one, one});
    for (int i = 0; i < samples; ++i) probes.push_back(sample_direction(i, samples));
    for (const auto& d : probes) {
        ProjPoint p;
        p.x = d;
        if (numerical_rank(to_eigen(mu.contract_v(p)), rank_tol) < 2) return false;
        if (numerical_rank(to_eigen(mu.contract_u(d)), rank_tol) < 2) return false;
        // bilinear form phi(mu(v, u)) for the sampled form phi on W
        Eigen::MatrixXcd bf(3, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Complex s{0, 0};
                for (int w = 0; w < 3; ++w) s += d[static_cast<size_t>(w)] * mu.t[w][a][b];
                bf(a, b) = s;
            }
        if (numerical_rank(bf, rank_tol) < 2) return false;
    }
    return true;
}

bool is_commutative_tensor(const TensorMu& mu, double tol) {
    // Coefficients of XYZ and of X^3, Y^3, Z^3 in det(mu_v), probed on a
    // fixed basis of points.
    auto at = [&](Complex x, Complex y, Complex z) {
        ProjPoint p;
        p.x = {x, y, z};
        return det_cubic(mu, p);
    };
    const Complex e100 = at({1, 0}, {0, 0}, {0, 0});
    const Complex e010 = at({0, 0}, {1, 0}, {0, 0});
    const Complex e001 = at({0, 0}, {0, 0}, {1, 0});
    // det at (1,1,1) = coeff_XYZ + sum of the pure-cube coefficients
    const Complex mixed = at({1, 0}, {1, 0}, {1, 0}) - e100 - e010 - e001;
    const double s = mu.scale();
    const double bound = tol * std::max(s * s * s, 1e-300);
    return std::abs(e100) < bound && std::abs(e010) < bound && std::abs(e001) < bound &&
           std::abs(mixed) < bound;
}

int QuiverAlgebra::hom_dim(int i, int j) const {
    const int n = 3 + k();
    if (i < 0 || j < 0 || i >= n || j >= n)
        fail(errc::invalid_argument, "QuiverAlgebra: object index out of range");
    if (i == j) return 1;
    if (i > j) return 0;
    if (j <= 2) return 3;
    if (i >= 3) return 0;
    return i == 1 ? 2 : 1;
}

long QuiverAlgebra::total_dimension() const {
    long total = 0;
    const int n = 3 + k();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) total += hom_dim(i, j);
    return total;
}

QuiverAlgebra build_quiver(const TensorMu& mu, const std::vector<ProjPoint>& points, double tol) {
    QuiverAlgebra q;
    q.mu = mu;
    q.points = points;
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (projective_distance(points[i], points[j]) < tol)
                fail(errc::degenerate, "build_quiver: coincident blown-up points");
        }
    }
    for (const ProjPoint& v : points) {
        if (std::abs(det_cubic(mu, v)) > tol * std::max(det_cubic_scale(mu, v), 1e-300))
            fail(errc::invalid_argument, "build_quiver: point off the determinant cubic");
        QuiverAlgebra::PointData pd;
        // Two rows spanning the annihilator of v: null space of v^T.
        Eigen::MatrixXcd vt(1, 3);
        vt << v.x[0], v.x[1], v.x[2];
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vt, Eigen::ComputeFullV);
        const Eigen::MatrixXcd V = svd.matrixV();
        // vt * V.col(r+1) = 0, so these rows plain-dot v to zero and are
        // mutually orthonormal.
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 3; ++c)
                pd.v_quotient[static_cast<size_t>(r)][static_cast<size_t>(c)] = V(c, r + 1);
        pd.w_quotient = quotient_form(mu, v, tol);
        // Section of the quotient: rows of v_quotient are orthonormal with
        // Q v = 0, so Q Q^H = I and s(e_r) = Q^H e_r gives Q s = id.
        for (int r = 0; r < 2; ++r) {
            std::array<Complex, 3> section;
            for (int c = 0; c < 3; ++c)
                section[static_cast<size_t>(c)] =
                    std::conj(pd.v_quotient[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            ProjPoint sv;
            sv.x = section;
            const auto m = mu.contract_v(sv);
            for (int u = 0; u < 3; ++u) {
                Complex s{0, 0};
                for (int w = 0; w < 3; ++w)
                    s += pd.w_quotient[static_cast<size_t>(w)] * m[static_cast<size_t>(w)][static_cast<size_t>(u)];
                pd.induced[static_cast<size_t>(r)][static_cast<size_t>(u)] = s;
            }
        }
        q.point_data.push_back(pd);
    }
    return q;
}

std::vector<ProjPoint> recover_points(const QuiverAlgebra& q, double tol) {
    std::vector<ProjPoint> out;
    out.reserve(q.point_data.size());
    for (const auto& pd : q.point_data) {
        Eigen::MatrixXcd m(2, 3);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 3; ++c)
                m(r, c) = pd.v_quotient[static_cast<size_t>(r)][static_cast<size_t>(c)];
        if (numerical_rank(m, tol) != 2)
            fail(errc::ambiguous, "recover_points: quotient map rank is not 2");
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
        const Eigen::Vector3cd kv = svd.matrixV().col(2);
        out.push_back(ProjPoint::normalized({kv(0), kv(1), kv(2)}));
    }
    return out;
}

}  // namespace hms
