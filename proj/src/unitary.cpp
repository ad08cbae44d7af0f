#include "holoiso/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "holoiso/errors.hpp"

namespace holoiso {

namespace {

constexpr double kStructuralZero = 1e-14;
constexpr double kDiagonalMatch = 1e-12;

FrameFlags detect_flags(const Matrix& m) {
    FrameFlags f;
    const Eigen::Index k = m.rows();
    f.lower_block_upper_triangular = true;
    for (Eigen::Index i = 2; i < k; ++i) {
        for (Eigen::Index j = 1; j < i; ++j) {
            if (std::abs(m(i, j)) >= kStructuralZero) f.lower_block_upper_triangular = false;
        }
    }
    if (k >= 2) {
        const Complex d = m(1, 1);
        f.constant_diagonal = true;
        for (Eigen::Index j = 2; j < k; ++j) {
            if (std::abs(m(j, j) - d) >= kDiagonalMatch) f.constant_diagonal = false;
        }
        if (f.constant_diagonal && std::abs(d) > 0.0 && std::abs(d) < 1.0) f.zeta = d;
    }
    return f;
}

// Givens pair with [c s; -conj(s) c] [f; g] = [r; 0].
void givens(Complex f, Complex g, double& c, Complex& s) {
    const double af = std::abs(f);
    const double ag = std::abs(g);
    if (ag == 0.0) {
        c = 1.0;
        s = 0.0;
    } else if (af == 0.0) {
        c = 0.0;
        s = std::conj(g) / ag;
    } else {
        const double norm = std::hypot(af, ag);
        c = af / norm;
        s = (f / af) * std::conj(g) / norm;
    }
}

void rotate(Complex& x, Complex& y, double c, Complex s) {
    const Complex t = c * x + s * y;
    y = c * y - std::conj(s) * x;
    x = t;
}

// Swaps the adjacent diagonal entries k, k+1 of the Schur form T = Q^* A Q.
void swap_schur(Matrix& t, Matrix& q, Eigen::Index k) {
    const Eigen::Index n = t.rows();
    const Complex t11 = t(k, k);
    const Complex t22 = t(k + 1, k + 1);
    double c;
    Complex s;
    givens(t(k, k + 1), t22 - t11, c, s);
    for (Eigen::Index j = k + 2; j < n; ++j) rotate(t(k, j), t(k + 1, j), c, s);
    for (Eigen::Index i = 0; i < k; ++i) rotate(t(i, k), t(i, k + 1), c, std::conj(s));
    t(k, k) = t22;
    t(k + 1, k + 1) = t11;
    for (Eigen::Index i = 0; i < n; ++i) rotate(q(i, k), q(i, k + 1), c, std::conj(s));
}

bool schur_before(Complex a, Complex b) {
    const double da = std::arg(a);
    const double db = std::arg(b);
    if (std::abs(da - db) > 1e-12) return da < db;
    return std::abs(a) + 1e-12 < std::abs(b);
}

Matrix canonical_base() {
    const double h = 1.0 / std::sqrt(2.0);
    Matrix v(2, 2);
    v << h, -h, h, h;
    return v;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

double UnitaryFrame::unitarity_residual() const {
    const Matrix r = entries_ * entries_.adjoint() - Matrix::Identity(dim(), dim());
    return r.cwiseAbs().maxCoeff();
}

UnitaryFrame check_unitary(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw NotUnitary("matrix is not square");
    }
    UnitaryFrame f;
    f.entries_ = m;
    const double res = f.unitarity_residual();
    if (!(res < kUnitaryTolerance)) {
        throw NotUnitary("residual " + std::to_string(res));
    }
    f.flags_ = detect_flags(m);
    return f;
}

std::pair<UnitaryFrame, Matrix> schur_normalize(const UnitaryFrame& u) {
    const int n = u.ball_dim();
    if (n == 0) return {u, Matrix(0, 0)};
    const Matrix lower = u.lower_block();
    Eigen::ComplexSchur<Matrix> schur(lower);
    Matrix t = schur.matrixT();
    Matrix q = schur.matrixU();

    // Bubble the diagonal into the deterministic order.
    for (int pass = 0; pass < n; ++pass) {
        bool swapped = false;
        for (Eigen::Index k = 0; k + 1 < n; ++k) {
            if (schur_before(t(k + 1, k + 1), t(k, k))) {
                swap_schur(t, q, k);
                swapped = true;
            }
        }
        if (!swapped) break;
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < i; ++j) t(i, j) = 0.0;

    const Matrix b = q.adjoint();
    const Matrix& e = u.entries();
    Matrix out(n + 1, n + 1);
    out(0, 0) = e(0, 0);
    out.block(0, 1, 1, n) = e.block(0, 1, 1, n) * q;
    out.block(1, 0, n, 1) = b * e.block(1, 0, n, 1);
    out.bottomRightCorner(n, n) = t;
    return {check_unitary(out), b};
}

Matrix extend_structured(const Matrix& v, Complex a, double row1_phase) {
    const Eigen::Index m = v.rows();
    Matrix out = Matrix::Zero(m + 1, m + 1);
    Vector r = Vector::Zero(m + 1);
    r(0) = v(0, 0);
    for (Eigen::Index j = 1; j < m; ++j) r(j + 1) = v(0, j);
    Vector e2 = Vector::Zero(m + 1);
    e2(1) = 1.0;
    const double b = std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
    const Vector u2 = b * r + a * e2;
    const Vector u1 = std::polar(1.0, row1_phase) * (b * e2 - std::conj(a) * r);
    out.row(0) = u1.transpose();
    out.row(1) = u2.transpose();
    for (Eigen::Index i = 1; i < m; ++i) {
        out(i + 1, 0) = v(i, 0);
        for (Eigen::Index j = 1; j < m; ++j) out(i + 1, j + 1) = v(i, j);
    }
    return out;
}

Matrix insert_unit_slot(const Matrix& v, Complex unit) {
    const Eigen::Index k = v.rows();
    Matrix out = Matrix::Zero(k + 1, k + 1);
    auto src = [](Eigen::Index i) { return i == 0 ? Eigen::Index{0} : i - 1; };
    for (Eigen::Index i = 0; i <= k; ++i) {
        if (i == 1) continue;
        for (Eigen::Index j = 0; j <= k; ++j) {
            if (j == 1) continue;
            out(i, j) = v(src(i), src(j));
        }
    }
    out(1, 1) = unit;
    return out;
}

UnitaryFrame build_hessenberg_unitary(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("build_hessenberg_unitary needs n >= 2");
    Matrix v;
    if (seed == 0) {
        v = canonical_base();
        const double h = 1.0 / std::sqrt(2.0);
        for (int m = 2; m <= n; ++m) v = extend_structured(v, h, 0.0);
    } else {
        std::mt19937_64 rng(seed);
        const double tau = 2.0 * M_PI;
        const Complex a0 = std::polar(uniform(rng, 0.3, 0.9), uniform(rng, 0.0, tau));
        const Complex b0 = std::polar(std::sqrt(1.0 - std::norm(a0)), uniform(rng, 0.0, tau));
        const Complex g = std::polar(1.0, uniform(rng, 0.0, tau));
        v.resize(2, 2);
        v << b0, a0, -g * std::conj(a0), g * std::conj(b0);
        for (int m = 2; m <= n; ++m) {
            const Complex a = std::polar(uniform(rng, 0.3, 0.9), uniform(rng, 0.0, tau));
            v = extend_structured(v, a, uniform(rng, 0.0, tau));
        }
    }
    return check_unitary(v);
}

UnitaryFrame build_family_unitary(Complex zeta, int n) {
    const double r = std::abs(zeta);
    if (!(r > 0.0 && r < 1.0)) throw InvalidZeta("zeta must satisfy 0 < |zeta| < 1");
    if (n < 2) throw std::invalid_argument("build_family_unitary needs n >= 2");
    const Complex zb = std::conj(zeta);
    const double s = std::sqrt(1.0 - r * r);
    Matrix v(3, 3);
    v << -zb * zb, -s, zb * s,
         -s * zb, zeta, 1.0 - r * r,
         s, 0.0, zeta;
    for (int m = 3; m <= n; ++m) v = extend_structured(v, zeta, 0.0);
    const Complex target = std::pow(zb, n);
    const Complex phase = target / v(0, 0);
    v.row(0) *= phase / std::abs(phase);
    return check_unitary(v);
}

}  // namespace holoiso
