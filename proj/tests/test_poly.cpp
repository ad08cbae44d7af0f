#include <gtest/gtest.h>

#include <random>

#include "holoiso/errors.hpp"
#include "holoiso/poly.hpp"
#include "holoiso/rational.hpp"
#include "oracles.hpp"

using namespace holoiso;

namespace {

double nearest(const std::vector<Complex>& set, Complex z) {
    double best = 1e300;
    for (const Complex& s : set) best = std::min(best, std::abs(s - z));
    return best;
}

}  // namespace

TEST(Poly, ArithmeticAndEvaluation) {
    const Poly a{1.0, 2.0, 3.0};
    const Poly b{Complex(0, 1), -1.0};
    const Poly prod = a * b;
    for (Complex z : {Complex(0.3, -0.2), Complex(-1.5, 0.7)}) {
        EXPECT_LT(std::abs(prod(z) - a(z) * b(z)), 1e-13);
        EXPECT_LT(std::abs((a + b)(z) - (a(z) + b(z))), 1e-14);
        EXPECT_LT(std::abs((a - b)(z) - (a(z) - b(z))), 1e-14);
        const auto f = [&](Complex x) { return a(x); };
        EXPECT_LT(std::abs(a.derivative()(z) - oracle::central_difference(f, z)), 1e-7);
    }
    EXPECT_EQ(Poly{}.degree(), -1);
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Poly, DeflateDividesOutARoot) {
    const std::vector<Complex> r{0.5, Complex(0, 2), Complex(-1, 1)};
    const Poly p = Poly::from_roots(r, 3.0);
    const Poly q = p.deflate(r[1]);
    EXPECT_EQ(q.degree(), 2);
    EXPECT_LT(coeff_distance(q * Poly{-r[1], 1.0}, p), 1e-13);
    EXPECT_LT(std::abs(p.deflate_remainder(r[1])), 1e-13);
}

TEST(Poly, RootsAgreeWithDurandKerner) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> c(7);
        for (Complex& x : c) x = {g(rng), g(rng)};
        const auto lib = roots(Poly(c));
        const auto ref = oracle::roots(c);
        ASSERT_EQ(lib.size(), ref.size());
        for (const Complex& z : ref) EXPECT_LT(nearest(lib, z), 1e-9);
    }
}

TEST(Poly, ClustersReportMultiplicity) {
    const std::vector<Complex> r{-1.0, -1.0, -1.0, Complex(0.3, 0.4), Complex(0.3, 0.4), 2.0};
    const auto cl = root_clusters(Poly::from_roots(r));
    ASSERT_EQ(cl.size(), 3u);
    int total = 0;
    for (const RootCluster& c : cl) {
        total += c.multiplicity;
        if (std::abs(c.value + 1.0) < 1e-6) EXPECT_EQ(c.multiplicity, 3);
        if (std::abs(c.value - 2.0) < 1e-6) EXPECT_EQ(c.multiplicity, 1);
    }
    EXPECT_EQ(total, 6);
    EXPECT_THROW(root_clusters(Poly{}), ZeroPolynomial);
}

TEST(Poly, SmallMultipleRootUnderCoefficientNoise) {
    const Complex c(0.07, 0.02);
    const std::vector<Complex> r(4, c);
    std::vector<Complex> coeffs = Poly::from_roots(r).coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += Complex(3e-16, -2e-16) * static_cast<double>(k % 2);
    const auto cl = root_clusters(Poly(coeffs));
    ASSERT_EQ(cl.size(), 1u);
    EXPECT_EQ(cl[0].multiplicity, 4);
    EXPECT_LT(std::abs(cl[0].value - c), 1e-12);
}

TEST(Rational, EvaluatesOnTheSphere) {
    const RationalMap m(Poly{1.0, 0.0, 2.0}, Poly{-1.0, 1.0});
    EXPECT_TRUE(m.eval(SpherePoint::finite(1.0)).infinite);
    EXPECT_TRUE(m.eval(SpherePoint::infinity()).infinite);
    const RationalMap same_degree(Poly{1.0, 3.0}, Poly{2.0, 2.0});
    EXPECT_LT(std::abs(same_degree.eval(SpherePoint::infinity()).value - 1.5), 1e-15);
    EXPECT_EQ(m.degree(), 2);
}

TEST(Rational, ReducedCancelsCommonRoots) {
    const Poly common{Complex(-0.2, 0.1), 1.0};
    const RationalMap m(Poly{0.0, 1.0} * common, Poly{-3.0, 1.0} * common);
    const RationalMap r = m.reduced();
    EXPECT_EQ(r.degree(), 1);
    const Complex z(0.4, -0.7);
    EXPECT_LT(std::abs(r(z) - m(z)), 1e-13);
}

TEST(Rational, FamilyClosedFormMatchesExpansion) {
    for (int n = 1; n <= 5; ++n) {
        const Complex zeta = std::polar(0.37, 0.3 * n);
        const RationalMap m = family_closed_form(zeta, n);
        for (Complex z : {Complex(0.1, 0.2), Complex(-2.0, 0.5)}) {
            const Complex ref = oracle::family_R(zeta, n, z);
            EXPECT_LT(std::abs(m(z) - ref), 1e-12 * (1.0 + std::abs(ref)));
        }
    }
}

TEST(Rational, BlaschkeFormRoundTrip) {
    BlaschkeForm f;
    f.poles = {Complex(0.2, 0.1), Complex(-0.5, 0.3)};
    // Unimodular on the circle forces |alpha0| = prod |a_j|.
    f.alpha0 = std::polar(std::abs(f.poles[0]) * std::abs(f.poles[1]), 1.0);
    const RationalMap m = f.to_map();
    EXPECT_LT(circle_symmetry_residual(m, safe_circle_samples(m, 64)), 1e-12);
    const BlaschkeForm back = to_blaschke(m);
    EXPECT_LT(std::abs(back.alpha0 - f.alpha0), 1e-12);
    ASSERT_EQ(back.poles.size(), 2u);
    for (const Complex& a : f.poles) EXPECT_LT(nearest(back.poles, a), 1e-10);
}

TEST(Rational, NonBlaschkeMapsAreRejected) {
    EXPECT_THROW(to_blaschke(RationalMap(Poly{0.0, 1.0, 1.0}, Poly{2.0, 1.0})), NotBlaschkeForm);
    const RationalMap id;
    const std::vector<Complex> zero{0.0};
    EXPECT_THROW(circle_symmetry_residual(id, zero), SampleAtSingularity);
}
