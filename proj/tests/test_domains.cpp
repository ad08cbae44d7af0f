#include <gtest/gtest.h>

#include <random>

#include "holoiso/domains.hpp"
#include "holoiso/errors.hpp"
#include "holoiso/family.hpp"
#include "holoiso/grids.hpp"
#include "oracles.hpp"

using namespace holoiso;

namespace {

double det_I_minus_ZhZ(const Matrix& z) {
    const Matrix a = Matrix::Identity(z.cols(), z.cols()) - z.adjoint() * z;
    oracle::Mat m(a.rows(), std::vector<oracle::C>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    return oracle::det(m).real();
}

}  // namespace

TEST(Domains, GenericNormsAgreeWithDeterminants) {
    Matrix z(2, 3);
    z << Complex(0.1, 0.2), 0.3, Complex(0, -0.1), -0.2, Complex(0.05, 0.05), 0.1;
    const DomainPoint p = make_point(DomainSpec::type_I(2, 3), z);
    EXPECT_TRUE(membership(p).member);
    EXPECT_NEAR(generic_norm(p), det_I_minus_ZhZ(z), 1e-14);

    Matrix s(2, 2);
    s << 0.3, Complex(0.1, 0.1), Complex(0.1, 0.1), -0.2;
    EXPECT_NEAR(generic_norm(make_point(DomainSpec::type_III(2), s)), det_I_minus_ZhZ(s), 1e-14);

    Matrix a = Matrix::Zero(4, 4);
    a(0, 1) = Complex(0.2, 0.1); a(1, 0) = -a(0, 1);
    a(2, 3) = 0.3; a(3, 2) = -0.3;
    EXPECT_NEAR(generic_norm(make_point(DomainSpec::type_II(4), a)), std::sqrt(det_I_minus_ZhZ(a)), 1e-14);

    Vector v(3);
    v << Complex(0.1, 0.2), 0.2, Complex(0, 0.3);
    Complex sq = 0.0;
    for (int i = 0; i < 3; ++i) sq += v(i) * v(i);
    EXPECT_NEAR(generic_norm(make_point(DomainSpec::type_IV(3), v)),
                1.0 - v.squaredNorm() + std::norm(sq / 2.0), 1e-15);
}

TEST(Domains, ShapeAndMembershipErrors) {
    Matrix notsym(2, 2);
    notsym << 0.1, 0.2, 0.0, 0.1;
    EXPECT_THROW(make_point(DomainSpec::type_III(2), notsym), ShapeMismatch);
    EXPECT_THROW(make_point(DomainSpec::type_II(2), notsym), ShapeMismatch);
    EXPECT_THROW(make_point(DomainSpec::type_I(3, 3), notsym), ShapeMismatch);
    const DomainPoint big = make_point(DomainSpec::type_I(1, 1), Matrix(Matrix::Constant(1, 1, 1.5)));
    EXPECT_FALSE(membership(big).member);
    EXPECT_THROW(generic_norm(big), NotMember);
    const std::vector<Complex> z{0.1};
    EXPECT_THROW(embed(DomainSpec::type_I(2, 4), 0.1, z), ShapeMismatch);
    EXPECT_THROW(embed(DomainSpec::type_III(3), 0.1, z), ShapeMismatch);
}

TEST(Domains, EmbeddedPointsCarryTheProductNorm) {
    const std::vector<Complex> z{Complex(0.3, 0.1), Complex(-0.2, 0.4)};
    const Complex w(0.25, -0.35);
    double ball = 0.0;
    for (const Complex& c : z) ball += std::norm(c);
    const double expected = (1 - std::norm(w)) * (1 - ball);
    EXPECT_NEAR(generic_norm(embed(DomainSpec::type_I(2, 3), w, z)), expected, 1e-13);
    EXPECT_NEAR(generic_norm(embed(DomainSpec::type_II(5), w, z)), expected, 1e-13);
    EXPECT_NEAR(generic_norm(embed(DomainSpec::type_IV(4), w, {})), 1 - std::norm(w), 1e-15);
}

TEST(Domains, CompositesWithTheFamilySource) {
    const DiskIsometry iso = family_map(Complex(0.2, 0.1), 2);
    const auto grid = disk_grid(50, 0.95);
    EXPECT_LT(composite_residual(DomainSpec::type_I(2, 3), &iso, grid), 1e-9);
    EXPECT_LT(composite_residual(DomainSpec::type_II(5), &iso, grid), 1e-9);
    EXPECT_LT(composite_residual(DomainSpec::type_IV(3), nullptr, grid), 1e-12);
    EXPECT_THROW(composite_residual(DomainSpec::type_I(2, 5), &iso, grid), ShapeMismatch);
}

TEST(Domains, BlockJoinMultiplies) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    std::vector<Complex> ws;
    std::vector<DomainPoint> zs;
    for (int k = 0; k < 10; ++k) {
        Matrix s(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) s(i, j) = s(j, i) = Complex(u(rng), u(rng));
        ws.emplace_back(u(rng), u(rng));
        zs.push_back(make_point(DomainSpec::type_III(3), s));
    }
    EXPECT_LT(block_multiplicativity_residual(ws, zs), 1e-12);
}
