#include "holoiso/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holoiso/errors.hpp"

namespace holoiso {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Leading coefficients below this fraction of the largest are rounding noise.
constexpr double kTrimTolerance = 1e-13;

bool near_zero_value(const Poly& p, Complex z) {
    return std::abs(p(z)) <= 64.0 * kEps * std::max(p.abs_scale(std::abs(z)), 1e-300);
}

}  // namespace

RationalMap::RationalMap() : num_{0.0, 1.0}, den_{1.0} {}

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroPolynomial("rational map with zero denominator");
}

RationalMap RationalMap::zero() { return {Poly{}, Poly{1.0}}; }

int RationalMap::degree() const {
    if (num_.is_zero()) return 0;
    return std::max(num_.degree(), den_.degree());
}

RationalMap RationalMap::normalized() const {
    const Complex lead = den_.leading();
    return {num_.scaled(1.0 / lead), den_.scaled(1.0 / lead)};
}

RationalMap RationalMap::reduced() const {
    Poly den = den_.trimmed(kTrimTolerance);
    if (num_.max_abs_coeff() <= kTrimTolerance * den.max_abs_coeff()) {
        return RationalMap(Poly{}, Poly{1.0});
    }
    Poly num = num_.trimmed(kTrimTolerance);

    bool changed = true;
    while (changed && num.degree() >= 1 && den.degree() >= 1) {
        changed = false;
        const auto nr = root_clusters(num);
        const auto dr = root_clusters(den);
        for (const RootCluster& d : dr) {
            for (const RootCluster& n : nr) {
                const double tol = kCancelTolerance * std::max({1.0, std::abs(d.value), std::abs(n.value)});
                if (std::abs(d.value - n.value) > tol) continue;
                const int k = std::min(d.multiplicity, n.multiplicity);
                const Complex at = 0.5 * (d.value + n.value);
                for (int i = 0; i < k; ++i) {
                    num = num.deflate(at);
                    den = den.deflate(at);
                }
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return {num, den};
}

SpherePoint RationalMap::eval(SpherePoint z) const {
    if (num_.is_zero()) return SpherePoint::finite(0.0);
    if (z.infinite) {
        if (num_.degree() > den_.degree()) return SpherePoint::infinity();
        if (num_.degree() < den_.degree()) return SpherePoint::finite(0.0);
        return SpherePoint::finite(num_.leading() / den_.leading());
    }
    const Complex d = den_(z.value);
    if (d == Complex{} || (near_zero_value(den_, z.value) && !near_zero_value(num_, z.value))) {
        return SpherePoint::infinity();
    }
    return SpherePoint::finite(num_(z.value) / d);
}

void RationalMap::eval_with_derivative(Complex z, Complex& value, Complex& deriv) const {
    Complex p, dp, q, dq;
    num_.eval_with_derivative(z, p, dp);
    den_.eval_with_derivative(z, q, dq);
    value = p / q;
    deriv = (dp * q - p * dq) / (q * q);
}

Poly RationalMap::wronskian() const { return num_.derivative() * den_ - num_ * den_.derivative(); }

RationalMap operator*(const RationalMap& a, const RationalMap& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

double coeff_distance(const RationalMap& a, const RationalMap& b) {
    const RationalMap na = a.normalized();
    const RationalMap nb = b.normalized();
    return std::max(coeff_distance(na.num(), nb.num()), coeff_distance(na.den(), nb.den()));
}

double circle_symmetry_residual(const RationalMap& map, std::span<const Complex> samples) {
    double worst = 0.0;
    for (const Complex& z : samples) {
        if (std::abs(z) == 0.0) throw SampleAtSingularity("sample at the origin");
        const Complex w = 1.0 / std::conj(z);
        for (const Complex& s : {z, w}) {
            if (near_zero_value(map.den(), s) || near_zero_value(map.num(), s)) {
                throw SampleAtSingularity("sample at a zero or pole of the map or its inversion");
            }
        }
        const Complex v = map(z) * std::conj(map(w)) - 1.0;
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

RationalMap BlaschkeForm::to_map() const {
    std::vector<Complex> zeros;
    zeros.reserve(poles.size() + 1);
    zeros.push_back(0.0);
    for (const Complex& a : poles) zeros.push_back(1.0 / std::conj(a));
    return {Poly::from_roots(zeros, alpha0), Poly::from_roots(poles)};
}

std::vector<Complex> safe_circle_samples(const RationalMap& map, int count) {
    std::vector<double> moduli;
    const RationalMap m = map.reduced();
    for (const Poly* p : {&m.num(), &m.den()}) {
        if (p->degree() < 1) continue;
        for (const RootCluster& rc : root_clusters(*p)) {
            const double r = std::abs(rc.value);
            moduli.push_back(r);
            if (r > 0.0) moduli.push_back(1.0 / r);
        }
    }
    double best_radius = 0.7;
    double best_gap = -1.0;
    for (double rho = 0.31; rho < 0.98; rho += 0.04) {
        double gap = std::numeric_limits<double>::infinity();
        for (double r : moduli) gap = std::min(gap, std::abs(rho - r));
        if (gap > best_gap) {
            best_gap = gap;
            best_radius = rho;
        }
    }
    std::vector<Complex> out(count);
    for (int k = 0; k < count; ++k) {
        out[k] = std::polar(best_radius, 2.0 * M_PI * k / count + 0.1);
    }
    return out;
}

BlaschkeForm to_blaschke(const RationalMap& map) {
    const RationalMap m = map.reduced().normalized();
    if (m.is_zero()) throw NotBlaschkeForm("zero map");
    if (m.num().degree() != m.den().degree() + 1) {
        throw NotBlaschkeForm("numerator degree must exceed denominator degree by one");
    }
    const double scale = m.num().max_abs_coeff();
    if (std::abs(m.num()[0]) > 1e-12 * scale) throw NotBlaschkeForm("map does not vanish at 0");
    if (std::abs(m.num()[1]) <= 1e-8 * scale) throw NotBlaschkeForm("zero at 0 is not simple");

    const auto samples = safe_circle_samples(m, 32);
    const double sym = circle_symmetry_residual(m, samples);
    if (sym > 1e-8) throw NotBlaschkeForm("unit-circle symmetry residual " + std::to_string(sym));

    BlaschkeForm form;
    form.alpha0 = m.num().leading();
    if (m.den().degree() >= 1) form.poles = roots(m.den());
    for (const Complex& a : form.poles) {
        if (std::abs(std::abs(a) - 1.0) < 1e-10) throw NotBlaschkeForm("pole on the unit circle");
    }
    const double rebuild = coeff_distance(form.to_map(), m);
    if (rebuild > 1e-8 * std::max(1.0, scale)) {
        throw NotBlaschkeForm("reconstruction residual " + std::to_string(rebuild));
    }
    return form;
}

RationalMap family_closed_form(Complex zeta, int n) {
    Poly num{0.0, 1.0};
    Poly den{1.0};
    const Poly factor_num{-1.0, std::conj(zeta)};
    const Poly factor_den{-zeta, 1.0};
    for (int k = 0; k < n; ++k) {
        num = num * factor_num;
        den = den * factor_den;
    }
    return {num, den};
}

}  // namespace holoiso
