// One line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <Eigen/SVD>

#include "holoiso/branch.hpp"
#include "holoiso/domains.hpp"
#include "holoiso/errors.hpp"
#include "holoiso/family.hpp"
#include "holoiso/grids.hpp"
#include "holoiso/kernels.hpp"
#include "holoiso/rigidity.hpp"
#include "oracles.hpp"

using namespace holoiso;

namespace tol {
constexpr double kEquations = 1e-9;
constexpr double kSymmetry = 1e-9;
constexpr double kAlpha = 1e-10;
constexpr double kCrossCheck = 1e-10;
constexpr double kVanishing = 1e-10;
constexpr double kClosedForm = 1e-12;
constexpr double kRotation = 1e-10;
constexpr double kRamification = 1e-8;
constexpr double kRegimeGeometry = 1e-10;
constexpr double kBranchMargin = 0.01;
constexpr double kOuter = 1e-9;
constexpr double kPeelIdentity = 1e-12;
constexpr double kPeelFamily = 1e-10;
constexpr double kCompositeI_II = 1e-9;
constexpr double kCompositeIV = 1e-12;
constexpr double kBlock = 1e-10;
constexpr double kSecondComponent = 1e-9;
}  // namespace tol

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<Complex> grid200() { return disk_grid(200, 0.95); }

std::vector<DiskIsometry> structured_frames() {
    std::vector<DiskIsometry> out;
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t s = 0; s < 50; ++s) out.push_back(solve_germ(build_hessenberg_unitary(n, s)));
    return out;
}

RationalMap oracle_family(Complex zeta, int n) {
    return {Poly(oracle::family_num(zeta, n)), Poly(oracle::family_den(zeta, n))};
}

Outcome equations(const std::vector<DiskIsometry>& frames) {
    const auto grid = grid200();
    double worst_f = 0.0, worst_d = 0.0;
    for (const DiskIsometry& iso : frames) {
        const auto pts = map_indices<TargetPoint>(static_cast<int>(grid.size()), Exec::Parallel,
                                                  [&](int i) { return evaluate(iso, grid[i]); });
        const Matrix& u = iso.frame.entries();
        const int n = iso.ball_dim();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Complex w = grid[i];
            const TargetPoint& p = pts[i];
            double ball = 0.0;
            for (const Complex& c : p.ball) ball += std::norm(c);
            worst_f = std::max(worst_f, std::abs((1 - std::norm(p.disk)) * (1 - ball) - (1 - std::norm(w))));
            for (int r = 0; r <= n; ++r) {
                Complex s = u(r, 0) * p.disk;
                for (int j = 0; j < n; ++j) s += u(r, j + 1) * p.ball[j];
                const Complex rhs = r == 0 ? w : p.disk * p.ball[r - 1];
                worst_d = std::max(worst_d, std::abs(s - rhs));
            }
        }
    }
    return {worst_f < tol::kEquations && worst_d < tol::kEquations,
            fmt("%zu frames n=2..6, functional %.2e defining %.2e (tol %.0e)", frames.size(), worst_f, worst_d,
                tol::kEquations)};
}

Outcome blaschke(const std::vector<DiskIsometry>& frames) {
    double sym = 0.0, alpha = 0.0, modulus = 0.0, cross = 0.0;
    for (const DiskIsometry& iso : frames) {
        for (const Complex& z : safe_circle_samples(iso.R, 32)) {
            const Complex inv = 1.0 / std::conj(z);
            sym = std::max(sym, std::abs(iso.R(z) * std::conj(iso.R(inv)) - 1.0));
        }
        const BlaschkeForm f = to_blaschke(iso.R);
        alpha = std::max(alpha, std::abs(f.alpha0 - iso.frame(0, 0)));
        double prod = 1.0;
        for (int j = 1; j <= iso.ball_dim(); ++j) prod *= std::abs(iso.frame(j, j));
        modulus = std::max(modulus, std::abs(std::abs(f.alpha0) - prod));
        cross = std::max({cross, first_row_identity_residual(iso.frame), schur_complement_discrepancy(iso.frame)});
    }
    const bool ok = sym < tol::kSymmetry && alpha < tol::kAlpha && modulus < tol::kAlpha && cross < tol::kCrossCheck;
    return {ok, fmt("symmetry %.2e, |alpha0-u11| %.2e, ||alpha0|-prod|u_jj|| %.2e, cross-check %.2e", sym, alpha,
                    modulus, cross)};
}

Outcome degree_law(const std::vector<DiskIsometry>& frames) {
    int wrong_degree = 0;
    for (const DiskIsometry& iso : frames) wrong_degree += iso.R.degree() != iso.ball_dim() + 1;
    const auto grid = grid200();
    double sup = 0.0;
    int not_reducible = 0;
    for (int n = 3; n <= 6; ++n) {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const Matrix base = build_hessenberg_unitary(n - 1, s).entries();
            const DiskIsometry iso = solve_germ(check_unitary(insert_unit_slot(base, std::polar(1.0, 0.3 * s))));
            for (const Complex& w : grid) sup = std::max(sup, std::abs(evaluate(iso, w).ball[0]));
            not_reducible += reduction_classify(iso).kind != Verdict::Reducible;
        }
    }
    return {wrong_degree == 0 && sup < tol::kVanishing && not_reducible == 0,
            fmt("deg R != n+1 in %d/%zu frames; |u22|=1 (n=3..6): sup|f21| %.2e, non-Reducible %d", wrong_degree,
                frames.size(), sup, not_reducible)};
}

Outcome family_forms() {
    const auto zetas = sweep_parameters(50, 2024);
    const auto circle = circle_grid(100, 1.0, 0.01);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    double dist = 0.0, rot = 0.0;
    for (int n = 2; n <= 4; ++n) {
        for (const Complex& z : zetas) {
            dist = std::max(dist, coeff_distance(family_map(z, n).R, oracle_family(z, n)));
            rot = std::max(rot, rotation_equivariance_residual(z, angle(rng), n, circle));
        }
    }
    return {dist < tol::kClosedForm && rot < tol::kRotation,
            fmt("50 zeta x n=2..4: coefficient distance %.2e (tol %.0e), rotation %.2e (tol %.0e)", dist,
                tol::kClosedForm, rot, tol::kRotation)};
}

Outcome ramification() {
    const auto zetas = sweep_parameters(100, 77);
    double match = 0.0, unit = 0.0, pair = 0.0;
    int in_a = 0, in_b = 0;
    for (const Complex& z : zetas) {
        const RamificationProfile p = closed_form_ramification(z, 2);
        const auto crit = oracle::critical_points(oracle::family_num(z, 2), oracle::family_den(z, 2));
        for (Complex a : {p.a_plus, p.a_minus}) {
            double best = 1e300;
            for (const auto& c : crit) best = std::min(best, std::abs(c - a));
            match = std::max(match, best);
        }
        if (p.regime == Regime::A) {
            ++in_a;
            unit = std::max({unit, std::abs(std::abs(p.a_plus) - 1), std::abs(std::abs(p.a_minus) - 1)});
        } else if (p.regime == Regime::B) {
            ++in_b;
            pair = std::max(pair, std::abs(p.a_plus * std::conj(p.a_minus) - 1.0));
        }
    }
    int three = 0;
    for (int n = 2; n <= 4; ++n) {
        for (double t : {0.0, 1.0, 2.5}) {
            three += branch_data(family_map(std::polar(critical_radius(n), t), n).R).ramification.size() == 3;
        }
    }
    const bool ok = match < tol::kRamification && unit < tol::kRegimeGeometry && pair < tol::kRegimeGeometry &&
                    three == 9 && in_a > 0 && in_b > 0;
    return {ok, fmt("100 zeta (A %d, B %d): closed vs brute %.2e, ||a|-1| %.2e, |a+ conj(a-)-1| %.2e; "
                    "three points at critical radius %d/9",
                    in_a, in_b, match, unit, pair, three)};
}

Outcome incongruence() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mod(1.0 / 3.0 + 0.02, 0.97), angle(0.0, 2 * M_PI);
    int proven = 0, rotated_inconclusive = 0, pairs = 0;
    while (pairs < 20) {
        const double r1 = mod(rng), r2 = mod(rng);
        if (std::abs(r1 - r2) < 0.01) continue;
        ++pairs;
        const Complex z = std::polar(r1, angle(rng));
        const Complex z2 = std::polar(r2, angle(rng));
        const auto inv1 = invariants(family_map(z, 2).R);
        proven += incongruence_certificate(inv1, invariants(family_map(z2, 2).R)).provably_incongruent;
        const auto rot = invariants(family_map(z * std::polar(1.0, angle(rng)), 2).R);
        rotated_inconclusive += !incongruence_certificate(inv1, rot).provably_incongruent;
    }
    return {proven == 20 && rotated_inconclusive == 20,
            fmt("A_2: %d/20 distinct-modulus pairs ProvablyIncongruent, %d/20 rotations Inconclusive", proven,
                rotated_inconclusive)};
}

Outcome extension() {
    bool ok = true;
    std::string detail;
    for (double z : {0.1, 0.2, 0.32}) {
        const ExtensionReport r = boundary_extension_check(z);
        const bool pass = r.branch_distance >= tol::kBranchMargin && r.outer_ok && r.outer_residual < tol::kOuter &&
                          r.max_boundary_modulus < 1.0;
        ok = ok && pass;
        detail += fmt("%szeta=%.2f %s (branch %.4f, outer %.2e%s%s, max|f1| %.3f)", detail.empty() ? "" : "; ", z,
                      pass ? "ok" : "FAIL", r.branch_distance, r.outer_residual, r.outer_failure.empty() ? "" : ", ",
                      r.outer_failure.c_str(), r.max_boundary_modulus);
    }
    return {ok, detail};
}

Outcome peeling(const std::vector<DiskIsometry>& frames) {
    double identity = 0.0;
    for (const DiskIsometry& iso : frames) {
        const PeelResult p = peel_parameter(iso.R);
        identity = std::max(identity, p.residual);
    }
    double fam = 0.0, param = 0.0;
    for (const Complex& z : sweep_parameters(50, 8)) {
        for (int n = 2; n <= 4; ++n) {
            const PeelResult p = peel_parameter(family_map(z, n).R);
            fam = std::max(fam, coeff_distance(p.reduced, oracle_family(z, n - 1)));
            param = std::max(param, std::abs(p.c2 - z));
        }
    }
    return {identity < tol::kPeelIdentity && fam < tol::kPeelFamily && param < tol::kPeelFamily,
            fmt("re-multiply %.2e over %zu frames (tol %.0e); family: R_{n-1} %.2e, zeta %.2e (tol %.0e)", identity,
                frames.size(), tol::kPeelIdentity, fam, param, tol::kPeelFamily)};
}

Outcome embeddings() {
    const auto grid = grid200();
    double ci = 0.0, cii = 0.0;
    for (const Complex& z : sweep_parameters(5, 31)) {
        const DiskIsometry iso = family_map(z, 2);
        ci = std::max(ci, composite_residual(DomainSpec::type_I(2, 3), &iso, grid));
        cii = std::max(cii, composite_residual(DomainSpec::type_II(5), &iso, grid));
    }
    const double civ = composite_residual(DomainSpec::type_IV(3), nullptr, grid);

    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Complex> ws;
    std::vector<DomainPoint> zs;
    for (int k = 0; k < 50; ++k) {
        const int m = 2 + k % 3;
        Matrix s(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) s(i, j) = s(j, i) = Complex(g(rng), g(rng));
        s *= 0.95 * u(rng) / Eigen::JacobiSVD<Matrix>(s).singularValues()(0);
        zs.push_back(make_point(DomainSpec::type_III(m), s));
        ws.push_back(std::polar(0.95 * std::sqrt(u(rng)), 2 * M_PI * u(rng)));
    }
    const double ciii = block_multiplicativity_residual(ws, zs);
    return {ci < tol::kCompositeI_II && cii < tol::kCompositeI_II && civ < tol::kCompositeIV && ciii < tol::kBlock,
            fmt("I(2,3) %.2e, II(5) %.2e, IV(3) %.2e, III block %.2e", ci, cii, civ, ciii)};
}

Outcome second_component() {
    const auto samples = disk_grid(100, 0.95);
    double worst = 0.0;
    for (const Complex& z : sweep_parameters(10, 10)) worst = std::max(worst, second_component_residual(z, samples));
    return {worst < tol::kSecondComponent, fmt("10 zeta x 100 samples: %.2e (tol %.0e)", worst, tol::kSecondComponent)};
}

Outcome rigidity() {
    const auto corpus = rigidity_corpus();
    int passed = 0;
    for (const WeightedCandidate& c : corpus) {
        try {
            rigidity_audit(c);
            ++passed;
        } catch (const Error&) {
        }
    }
    WeightedCandidate square;
    square.components = {{RationalMap(Poly{0.0, 0.0, 1.0}, Poly{1.0})}};
    square.weights = {1.0};
    bool rejected = false;
    try {
        rigidity_audit(square);
    } catch (const NotAnIsometry&) {
        rejected = true;
    }
    const IntakeReport intake = rationality_intake(family_map(0.2, 2));
    const bool ok = corpus.size() >= 20 && passed == static_cast<int>(corpus.size()) && rejected && !intake.rational;
    return {ok, fmt("corpus %d/%zu pass, w^2 %s, f_{0.2,2} %s (identity residual %.2e)", passed, corpus.size(),
                    rejected ? "NotAnIsometry" : "accepted", intake.rational ? "rational" : "outside hypothesis",
                    intake.identity_residual)};
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<DiskIsometry> frames = structured_frames();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"functional and defining equations", [&] { return equations(frames); }},
        {"Blaschke structure", [&] { return blaschke(frames); }},
        {"degree law", [&] { return degree_law(frames); }},
        {"family closed forms", family_forms},
        {"ramification oracle", ramification},
        {"incongruence certificates", incongruence},
        {"boundary extension", extension},
        {"peeling", [&] { return peeling(frames); }},
        {"embedding norm identities", embeddings},
        {"second component identity", second_component},
        {"rigidity audit", rigidity},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
        std::fflush(stdout);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), secs);
    return failed == 0 ? 0 : 1;
}
