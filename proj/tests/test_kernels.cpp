#include <gtest/gtest.h>

#include <stdexcept>

#include "holoiso/domains.hpp"
#include "holoiso/family.hpp"
#include "holoiso/grids.hpp"
#include "holoiso/kernels.hpp"

using namespace holoiso;

TEST(Kernels, VerifyGridSerialEqualsParallel) {
    const DiskIsometry iso = solve_germ(build_hessenberg_unitary(5, 2));
    const auto grid = disk_grid(150, 0.95);
    const ResidueReport s = verify_grid(iso, grid, Exec::Serial);
    const ResidueReport p = verify_grid(iso, grid, Exec::Parallel);
    ASSERT_EQ(s.samples.size(), p.samples.size());
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        EXPECT_EQ(s.samples[i].w, p.samples[i].w);
        EXPECT_EQ(s.samples[i].functional, p.samples[i].functional);
        EXPECT_EQ(s.samples[i].defining, p.samples[i].defining);
    }
    EXPECT_EQ(s.max_residual(), p.max_residual());
    EXPECT_EQ(s.near_branch_paths, p.near_branch_paths);
}

TEST(Kernels, EvaluateGridSerialEqualsParallel) {
    const DiskIsometry iso = family_map(Complex(0.6, 0.2), 3);
    const auto grid = disk_grid(100, 0.95);
    EXPECT_EQ(evaluate_disk_grid(iso, grid, Exec::Serial), evaluate_disk_grid(iso, grid, Exec::Parallel));
}

TEST(Kernels, SweepAndCompositeSerialEqualsParallel) {
    const auto zetas = sweep_parameters(8, 3);
    const auto grid = disk_grid(30, 0.95);
    const auto s = sweep(zetas, 3, grid, Exec::Serial);
    const auto p = sweep(zetas, 3, grid, Exec::Parallel);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(s[i].zeta, p[i].zeta);
        EXPECT_EQ(s[i].max_residual, p[i].max_residual);
    }
    const DiskIsometry iso = family_map(0.3, 2);
    EXPECT_EQ(composite_residual(DomainSpec::type_I(2, 3), &iso, grid, Exec::Serial),
              composite_residual(DomainSpec::type_I(2, 3), &iso, grid, Exec::Parallel));
}

TEST(Kernels, MapIndicesKeepsOrderAndRethrows) {
    const auto v = map_indices<int>(100, Exec::Parallel, [](int i) { return i * i; });
    for (int i = 0; i < 100; ++i) EXPECT_EQ(v[i], i * i);
    const auto boom = [](int i) {
        if (i == 7 || i == 40) throw std::runtime_error(std::to_string(i));
        return i;
    };
    try {
        map_indices<int>(64, Exec::Parallel, boom);
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "7");
    }
}
