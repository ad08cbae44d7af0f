#pragma once

#include <string>
#include <vector>

#include "holoiso/germ.hpp"
#include "holoiso/rational.hpp"

namespace holoiso {

struct RamificationPoint {
    SpherePoint point;
    int order = 0;  // ramification index minus one
};

struct BranchValue {
    SpherePoint value;
    int total_branching = 0;  // sum of orders over the fiber
    std::vector<int> fiber_orders;  // sorted
};

/// Tallies over distinct ramification points; infinity counts as outside.
struct LocationCounts {
    int inside = 0;
    int outside = 0;
    int on_circle = 0;

    friend bool operator==(const LocationCounts&, const LocationCounts&) = default;
};

struct BranchData {
    int degree = 0;
    std::vector<RamificationPoint> ramification;
    std::vector<BranchValue> branch;
    LocationCounts counts;
    /// Sum of orders (with the order at infinity found independently)
    /// equals 2 deg - 2.
    bool riemann_hurwitz_consistent = true;

    [[nodiscard]] int total_order() const;
};

inline constexpr double kOnCircleTolerance = 1e-9;
inline constexpr double kBranchDedupTolerance = 1e-8;

BranchData branch_data(const RationalMap& map);

struct CongruenceInvariant {
    int degree = 1;
    std::vector<int> ram_orders;  // sorted
    LocationCounts counts;
    /// Set when disk automorphisms relating two such maps must be rotations:
    /// 0 is a branch value whose fiber profile differs from every other
    /// branch value inside the disk, and 0 is the only zero of R in the disk.
    bool pinned = false;
    /// |b| for finite nonzero branch values (pinned only), sorted.
    std::vector<double> branch_moduli;
    /// (|a|, order) for finite ramification points (pinned only), sorted.
    std::vector<std::pair<double, int>> ramification_moduli;
};

CongruenceInvariant invariants(const RationalMap& map);

struct Certificate {
    bool provably_incongruent = false;
    std::string reason;  // empty when inconclusive
};

/// Never claims congruence; reports only invariant mismatches.
Certificate incongruence_certificate(const CongruenceInvariant& a, const CongruenceInvariant& b);

enum class Verdict { GeodesicDiskFactor, SquareRootClass, Reducible, Full };

struct ReductionVerdict {
    Verdict kind = Verdict::GeodesicDiskFactor;
    int m = 0;  // Reducible(m): deg R = m + 1
    /// 1-based indices j of diagonal entries |u_jj| = 1 of the normalized
    /// frame, and of the components f_{2,j} that vanish identically.
    std::vector<int> unit_diagonal;
    std::vector<int> vanishing_components;
};

std::string to_string(Verdict v);

/// Verdict by degree for an n-target isometry. Throws HypothesisViolated
/// when deg R > n + 1.
ReductionVerdict reduction_classify(const RationalMap& map, int n);

/// Same verdict, plus the unit-modulus diagonal entries (after Schur
/// normalization) and the vanishing components.
ReductionVerdict reduction_classify(const DiskIsometry& iso);

struct PeelResult {
    RationalMap reduced;
    Complex c2{};
    double residual = 0.0;  // coefficient distance of reduced * factor to map
};

/// R = R~ (conj(c2) z - 1)/(z - c2), peeling the pole of largest modulus
/// (ties by ascending argument). Throws NothingToPeel for degree 1.
PeelResult peel_parameter(const RationalMap& map);

/// (conj(c) z - 1)/(z - c).
RationalMap blaschke_factor(Complex c);

}  // namespace holoiso
