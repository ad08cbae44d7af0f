#include "holoiso/germ.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "holoiso/errors.hpp"
#include "holoiso/kernels.hpp"

namespace holoiso {

namespace {

constexpr double kInitialStep = 0.05;
constexpr double kMinStep = 1e-6;
constexpr int kNewtonIterations = 25;
constexpr double kNewtonTol = 1e-13;
constexpr double kCriticalGuard = 1e-6;
constexpr double kNearBranch = 1e-3;

// Coefficients of a polynomial of degree <= deg from its values at the
// (deg+1)-th roots of unity.
Poly interpolate(const std::function<Complex(Complex)>& f, int deg) {
    const int m = deg + 1;
    std::vector<Complex> values(m);
    for (int k = 0; k < m; ++k) values[k] = f(std::polar(1.0, 2.0 * M_PI * k / m));
    std::vector<Complex> c(m);
    for (int j = 0; j < m; ++j) {
        Complex s{};
        for (int k = 0; k < m; ++k) s += values[k] * std::polar(1.0, -2.0 * M_PI * j * k / m);
        c[j] = s / static_cast<double>(m);
    }
    return Poly(std::move(c));
}

Complex det(const Matrix& m) { return m.rows() == 0 ? Complex{1.0} : m.partialPivLu().determinant(); }

Matrix shifted_lower(const UnitaryFrame& u, Complex z) {
    const int n = u.ball_dim();
    return u.lower_block() - z * Matrix::Identity(n, n);
}

Poly denominator_poly(const UnitaryFrame& u) {
    return interpolate([&](Complex z) { return det(shifted_lower(u, z)); }, u.ball_dim());
}

// z det(U - z diag(0, I)).
Poly numerator_poly(const UnitaryFrame& u) {
    const int k = u.dim();
    Matrix d = Matrix::Identity(k, k);
    d(0, 0) = 0.0;
    const Poly inner = interpolate([&](Complex z) { return det(u.entries() - z * d); }, u.ball_dim());
    return Poly{0.0, 1.0} * inner;
}

// det of (U'' - zI) with column j replaced by v = (u_21, ..., u_{n+1,1}).
std::vector<Poly> cramer_numerators(const UnitaryFrame& u) {
    const int n = u.ball_dim();
    const Vector v = u.entries().block(1, 0, n, 1);
    std::vector<Poly> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        out.push_back(interpolate(
            [&](Complex z) {
                Matrix a = shifted_lower(u, z);
                a.col(j) = v;
                return det(a);
            },
            n));
    }
    return out;
}

void require_nondegenerate(const UnitaryFrame& u) {
    if (is_degenerate(u)) throw DegenerateFrame("det U'' vanishes");
}

ContinuationContext build_context(const RationalMap& r) {
    ContinuationContext ctx;
    if (r.degree() < 2) return ctx;
    const Poly w = r.wronskian().trimmed(1e-13);
    if (w.degree() < 1) return ctx;
    for (const RootCluster& c : root_clusters(w)) {
        ctx.critical_points.push_back(c.value);
        const SpherePoint v = r.eval(SpherePoint::finite(c.value));
        if (!v.infinite) ctx.critical_values.push_back(v.value);
    }
    return ctx;
}

double distance_to_segment(Complex p, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

double nearest_critical(const ContinuationContext& ctx, Complex f) {
    double d = std::numeric_limits<double>::infinity();
    for (const Complex& c : ctx.critical_points) d = std::min(d, std::abs(f - c));
    return d;
}

// Newton on R(f) = target from f; false on stall or divergence.
bool newton(const RationalMap& r, Complex target, Complex& f) {
    const double tol = kNewtonTol * (1.0 + std::abs(target));
    for (int it = 0; it < kNewtonIterations; ++it) {
        Complex val, der;
        r.eval_with_derivative(f, val, der);
        const Complex res = val - target;
        if (!std::isfinite(std::abs(res)) || !std::isfinite(std::abs(der))) return false;
        if (std::abs(res) < tol) return true;
        if (der == Complex{}) return false;
        const Complex step = res / der;
        f -= step;
        // Converged to rounding: the correction is below a few ulps of f.
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f))) {
            r.eval_with_derivative(f, val, der);
            return std::abs(val - target) < 1e2 * tol;
        }
    }
    return false;
}

Complex track_radial(const DiskIsometry& iso, Complex w) {
    const RationalMap& r = iso.R;
    const ContinuationContext& ctx = iso.continuation;
    const double length = std::abs(w);
    if (length == 0.0) return 0.0;
    const Complex dir = w / length;

    Complex f = 0.0;
    double s = 0.0;
    double h = kInitialStep;
    while (s < length) {
        h = std::min(h, length - s);
        const Complex from = s * dir;
        const Complex to = (s + h >= length) ? w : (s + h) * dir;
        const double guard = 0.5 * nearest_critical(ctx, f);

        Complex val, der;
        r.eval_with_derivative(f, val, der);
        Complex g = f + (to - from) / der;
        bool ok = std::isfinite(std::abs(g)) && std::abs(g - f) < guard;
        if (ok) ok = newton(r, to, g) && std::abs(g - f) < guard;
        if (!ok) {
            h *= 0.5;
            if (h < kMinStep) {
                throw ContinuationFailure("step underflow at |w| = " + std::to_string(s));
            }
            continue;
        }
        if (nearest_critical(ctx, g) < kCriticalGuard) {
            throw ContinuationFailure("path meets a critical point of R");
        }
        f = g;
        s = (to == w) ? length : s + h;
        h = std::min(2.0 * h, kInitialStep);
    }
    return f;
}

}  // namespace

bool is_degenerate(const UnitaryFrame& u) {
    const Matrix lower = u.lower_block();
    if (lower.rows() == 0) return false;
    return std::abs(det(lower)) <= kDegenerateThreshold * std::max(lower.norm(), 1e-300);
}

RationalMap rational_from_unitary(const UnitaryFrame& u) {
    require_nondegenerate(u);
    return RationalMap(numerator_poly(u), denominator_poly(u)).reduced();
}

double schur_complement_discrepancy(const UnitaryFrame& u) {
    require_nondegenerate(u);
    const int n = u.ball_dim();
    const Complex u11 = u(0, 0);
    const Vector v = u.entries().block(1, 0, n, 1);
    const Eigen::RowVectorXcd row = u.entries().block(0, 1, 1, n);
    const Matrix shifted = u.lower_block() - (v * row) / u11;
    const Poly inner = interpolate([&](Complex z) { return det(shifted - z * Matrix::Identity(n, n)); }, n);
    const Poly alt = Poly{0.0, u11} * inner;
    return coeff_distance(alt, numerator_poly(u));
}

std::vector<RationalMap> component_rationals(const UnitaryFrame& u) {
    require_nondegenerate(u);
    const Poly den = denominator_poly(u);
    const Poly minus_z{0.0, -1.0};
    std::vector<RationalMap> out;
    for (const Poly& num : cramer_numerators(u)) out.push_back(RationalMap(minus_z * num, den).reduced());
    return out;
}

double first_row_identity_residual(const UnitaryFrame& u) {
    require_nondegenerate(u);
    const Poly den = denominator_poly(u);
    Poly lhs = Poly{0.0, u(0, 0)} * den;
    const auto nums = cramer_numerators(u);
    for (int j = 0; j < u.ball_dim(); ++j) lhs = lhs + Poly{0.0, -u(0, j + 1)} * nums[j];
    return coeff_distance(lhs, numerator_poly(u));
}

DiskIsometry degenerate_solve(const UnitaryFrame& u) {
    DiskIsometry iso;
    iso.frame = u;
    iso.degenerate = true;
    // (0, f2)^T = U^* (w, 0, ..., 0)^T.
    for (int j = 1; j < u.dim(); ++j) {
        iso.components.push_back(RationalMap(Poly{0.0, std::conj(u(0, j))}, Poly{1.0}));
    }
    return iso;
}

DiskIsometry solve_germ(const UnitaryFrame& u) {
    if (is_degenerate(u)) return degenerate_solve(u);
    DiskIsometry iso;
    iso.frame = u;
    iso.R = rational_from_unitary(u);
    iso.components = component_rationals(u);
    iso.continuation = build_context(iso.R);
    Complex val, der;
    iso.R.eval_with_derivative(0.0, val, der);
    if (std::abs(val) > 1e-12 || std::abs(der) < 1e-12) {
        throw ContinuationFailure("R does not have a simple zero at the origin");
    }
    return iso;
}

Complex germ_derivative_at_origin(const DiskIsometry& iso) {
    if (iso.degenerate) return 0.0;
    Complex val, der;
    iso.R.eval_with_derivative(0.0, val, der);
    return 1.0 / der;
}

TargetPoint evaluate(const DiskIsometry& iso, Complex w, double radius_cap) {
    if (!(std::abs(w) < radius_cap)) throw OutsideDomain("|w| must be below " + std::to_string(radius_cap));
    TargetPoint p;
    if (iso.degenerate) {
        p.disk = 0.0;
        for (const RationalMap& c : iso.components) p.ball.push_back(c(w));
        return p;
    }
    p.disk = track_radial(iso, w);
    for (const RationalMap& c : iso.components) p.ball.push_back(c.is_zero() ? Complex{} : c(p.disk));
    for (const Complex& v : iso.continuation.critical_values) {
        // The path starts at f1(0) = 0, which is never critical.
        if (std::abs(v) < 1e-12) continue;
        if (distance_to_segment(v, 0.0, w) < kNearBranch) p.near_branch = true;
    }
    return p;
}

double functional_residual(Complex w, const TargetPoint& p) {
    double ball = 0.0;
    for (const Complex& z : p.ball) ball += std::norm(z);
    return std::abs((1.0 - std::norm(p.disk)) * (1.0 - ball) - (1.0 - std::norm(w)));
}

double defining_residual(const UnitaryFrame& u, Complex w, const TargetPoint& p) {
    const int k = u.dim();
    Vector x(k), rhs(k);
    x(0) = p.disk;
    rhs(0) = w;
    for (int j = 1; j < k; ++j) {
        x(j) = p.ball[j - 1];
        rhs(j) = p.disk * p.ball[j - 1];
    }
    return (u.entries() * x - rhs).cwiseAbs().maxCoeff();
}

ResidueReport verify(const DiskIsometry& iso, std::span<const Complex> grid, double radius_cap) {
    return verify_grid(iso, grid, Exec::Parallel, radius_cap);
}

}  // namespace holoiso
