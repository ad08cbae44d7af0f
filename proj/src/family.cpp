#include "holoiso/family.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "holoiso/branch.hpp"
#include "holoiso/errors.hpp"
#include "holoiso/grids.hpp"

namespace holoiso {

namespace {

constexpr double kCriticalSnap = 1e-12;

void require_zeta(Complex zeta) {
    const double r = std::abs(zeta);
    if (!(r > 0.0 && r < 1.0)) throw InvalidZeta("zeta must satisfy 0 < |zeta| < 1");
}

bool near_pole(const RationalMap& m, Complex z) {
    return std::abs(m.den()(z)) <= 1e-12 * std::max(m.den().abs_scale(std::abs(z)), 1e-300);
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::A: return "A";
        case Regime::Critical: return "Critical";
        case Regime::B: return "B";
    }
    return "Unknown";
}

double critical_radius(int n) { return static_cast<double>(n - 1) / (n + 1); }

RamificationProfile closed_form_ramification(Complex zeta, int n) {
    require_zeta(zeta);
    if (n < 2) throw std::invalid_argument("closed_form_ramification needs n >= 2");
    RamificationProfile p;
    p.zeta = zeta;
    p.n = n;
    const double r2 = std::norm(zeta);
    const double np1 = n + 1.0;
    const double nm1 = n - 1.0;
    const double rc = critical_radius(n);
    const double gap = std::abs(zeta) - rc;
    double c = np1 * np1 * r2 * r2 - 2.0 * (n * n + 1.0) * r2 + nm1 * nm1;
    if (std::abs(gap) < kCriticalSnap) {
        p.regime = Regime::Critical;
        c = 0.0;
    } else {
        p.regime = gap > 0.0 ? Regime::A : Regime::B;
    }
    p.discriminant = c;
    const Complex root = c >= 0.0 ? Complex{std::sqrt(c), 0.0} : Complex{0.0, std::sqrt(-c)};
    const Complex centre = np1 * r2 - nm1;
    const Complex denom = 2.0 * std::conj(zeta);
    p.a_plus = (centre + root) / denom;
    p.a_minus = (centre - root) / denom;
    p.theta_plus = std::arg(p.a_plus);
    p.theta_minus = std::arg(p.a_minus);
    const RationalMap rz = family_closed_form(zeta, n);
    p.branch_plus = rz(p.a_plus);
    p.branch_minus = rz(p.a_minus);
    p.branch_values_coincide = std::abs(p.branch_plus - p.branch_minus) < 1e-10;
    return p;
}

DiskIsometry family_map(Complex zeta, int n) { return solve_germ(build_family_unitary(zeta, n)); }

double rotation_equivariance_residual(Complex zeta, double theta, int n, std::span<const Complex> samples) {
    const Complex rot = std::polar(1.0, theta);
    const RationalMap rotated = rational_from_unitary(build_family_unitary(zeta * rot, n));
    const RationalMap base = rational_from_unitary(build_family_unitary(zeta, n));
    const Complex post = std::polar(1.0, -(n - 1) * theta);
    double worst = 0.0;
    for (const Complex& z : samples) {
        const Complex pre = z / rot;
        if (near_pole(rotated, z) || near_pole(base, pre)) throw SampleAtSingularity("sample at a pole");
        worst = std::max(worst, std::abs(rotated(z) - post * base(pre)));
    }
    return worst;
}

ExtensionReport boundary_extension_check(Complex zeta, const ExtensionOptions& options) {
    require_zeta(zeta);
    if (std::abs(zeta) >= 1.0 / 3.0) throw HypothesisViolated("boundary extension needs |zeta| < 1/3");
    ExtensionReport rep;
    rep.zeta = zeta;
    rep.options = options;
    const DiskIsometry iso = family_map(zeta, 2);

    rep.branch_distance = std::numeric_limits<double>::infinity();
    for (const BranchValue& b : branch_data(iso.R).branch) {
        if (b.value.infinite || std::abs(b.value.value) < 1e-8) continue;
        rep.branch_distance = std::min(rep.branch_distance, std::abs(std::abs(b.value.value) - 1.0));
    }
    rep.branch_ok = rep.branch_distance >= options.branch_margin;

    const double outer = 1.0 + options.epsilon;
    const double cap = outer * (1.0 + 1e-12);
    try {
        for (const Complex& w : circle_grid(options.outer_samples, outer)) {
            const Complex f = evaluate(iso, w, cap).disk;
            rep.outer_residual = std::max(rep.outer_residual, std::abs(iso.R(f) - w));
        }
        rep.outer_ok = rep.outer_residual < options.outer_tolerance;
    } catch (const ContinuationFailure& e) {
        rep.outer_ok = false;
        rep.outer_failure = e.what();
    }

    std::vector<Complex> poles;
    for (const RationalMap& c : iso.components) {
        if (c.den().degree() < 1) continue;
        for (const RootCluster& rc : root_clusters(c.den())) poles.push_back(rc.value);
    }
    rep.pole_distance = std::numeric_limits<double>::infinity();
    for (const Complex& b : circle_grid(options.circle_samples, 1.0)) {
        const Complex f = evaluate(iso, b, cap).disk;
        rep.max_boundary_modulus = std::max(rep.max_boundary_modulus, std::abs(f));
        for (const Complex& p : poles) rep.pole_distance = std::min(rep.pole_distance, std::abs(f - p));
    }
    rep.compact_image_ok = rep.max_boundary_modulus < 1.0;
    rep.poles_ok = rep.pole_distance >= options.pole_clearance;
    return rep;
}

double second_component_residual(Complex zeta, std::span<const Complex> samples) {
    const DiskIsometry iso = family_map(zeta, 2);
    const double s = std::sqrt(1.0 - std::norm(zeta));
    double worst = 0.0;
    for (const Complex& w : samples) {
        const TargetPoint p = evaluate(iso, w);
        const Complex expected = s * p.disk / (p.disk - zeta);
        worst = std::max(worst, std::abs(p.ball.back() - expected));
    }
    return worst;
}

std::vector<Complex> sweep_parameters(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.05, 0.95);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::vector<Complex> out(count);
    for (Complex& z : out) {
        const double r = radius(rng);
        z = std::polar(r, angle(rng));
    }
    return out;
}

std::vector<SweepRow> sweep(std::span<const Complex> zetas, int n, std::span<const Complex> grid, Exec exec) {
    return map_indices<SweepRow>(static_cast<int>(zetas.size()), exec, [&](int i) {
        SweepRow row;
        row.zeta = zetas[i];
        row.n = n;
        row.profile = closed_form_ramification(zetas[i], n);
        row.max_residual = verify_grid(family_map(zetas[i], n), grid, Exec::Serial).max_residual();
        return row;
    });
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
    os << "zeta_re,zeta_im,n,regime,a_plus_re,a_plus_im,a_minus_re,a_minus_im,max_residual\n";
    char buf[512];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%s,%.17g,%.17g,%.17g,%.17g,%.6e\n", r.zeta.real(),
                      r.zeta.imag(), r.n, to_string(r.profile.regime).c_str(), r.profile.a_plus.real(),
                      r.profile.a_plus.imag(), r.profile.a_minus.real(), r.profile.a_minus.imag(), r.max_residual);
        os << buf;
    }
}

}  // namespace holoiso
