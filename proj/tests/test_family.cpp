#include <gtest/gtest.h>

#include <sstream>

#include "holoiso/errors.hpp"
#include "holoiso/family.hpp"
#include "holoiso/grids.hpp"
#include "oracles.hpp"

using namespace holoiso;

TEST(Family, DeterminantMapEqualsClosedForm) {
    for (int n = 2; n <= 4; ++n) {
        for (const Complex& zeta : {Complex(0.1, 0.0), Complex(-0.3, 0.5), Complex(0.0, 0.9)}) {
            const RationalMap r = family_map(zeta, n).R;
            for (Complex z : {Complex(0.2, 0.1), Complex(-1.3, 0.4)}) {
                const Complex ref = oracle::family_R(zeta, n, z);
                EXPECT_LT(std::abs(r(z) - ref), 1e-11 * (1.0 + std::abs(ref)));
            }
        }
    }
}

TEST(Family, RegimeBoundary) {
    EXPECT_DOUBLE_EQ(critical_radius(2), 1.0 / 3.0);
    EXPECT_EQ(closed_form_ramification(0.2, 2).regime, Regime::B);
    EXPECT_EQ(closed_form_ramification(0.5, 2).regime, Regime::A);
    EXPECT_EQ(closed_form_ramification(0.4, 3).regime, Regime::B);
    EXPECT_EQ(closed_form_ramification(0.6, 3).regime, Regime::A);
    EXPECT_THROW(closed_form_ramification(1.2, 2), InvalidZeta);
}

TEST(Family, RotationEquivariance) {
    const auto samples = disk_grid(50, 0.9);
    EXPECT_LT(rotation_equivariance_residual(Complex(0.4, 0.1), 1.3, 3, samples), 1e-10);
    const std::vector<Complex> at_pole{Complex(0.4, 0.1) * std::polar(1.0, 1.3)};
    EXPECT_THROW(rotation_equivariance_residual(Complex(0.4, 0.1), 1.3, 3, at_pole), SampleAtSingularity);
}

TEST(Family, SecondComponentIdentity) {
    EXPECT_LT(second_component_residual(Complex(0.25, -0.1), disk_grid(60, 0.95)), 1e-10);
}

TEST(Family, ExtensionPassesForSmallZeta) {
    const ExtensionReport r = boundary_extension_check(0.1);
    EXPECT_TRUE(r.passed()) << r.outer_failure;
    EXPECT_LT(r.outer_residual, 1e-9);
    EXPECT_LT(r.max_boundary_modulus, 1.0);
    EXPECT_THROW(boundary_extension_check(0.34), HypothesisViolated);
}

TEST(Family, SweepIsSeededAndOrdered) {
    const auto a = sweep_parameters(12, 5);
    const auto b = sweep_parameters(12, 5);
    EXPECT_EQ(a, b);
    for (const Complex& z : a) {
        EXPECT_GE(std::abs(z), 0.05);
        EXPECT_LE(std::abs(z), 0.95);
    }
    const auto grid = disk_grid(20, 0.95);
    const auto rows = sweep(a, 2, grid, Exec::Serial);
    ASSERT_EQ(rows.size(), a.size());
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    int lines = 0;
    for (char c : csv.str()) lines += c == '\n';
    EXPECT_EQ(lines, 13);
    EXPECT_EQ(csv.str().find('\r'), std::string::npos);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].zeta, a[i]);
        EXPECT_LT(rows[i].max_residual, 1e-9);
    }
}
