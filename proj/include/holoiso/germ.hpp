#pragma once

#include <span>
#include <vector>

#include "holoiso/rational.hpp"
#include "holoiso/unitary.hpp"

namespace holoiso {

/// Critical data of R cached for path tracking.
struct ContinuationContext {
    std::vector<Complex> critical_points;  // finite zeros of R'
    std::vector<Complex> critical_values;  // their finite images
};

/// A solved isometry w -> (f1(w); f_{2,1}(w), ..., f_{2,n}(w)).
///
/// Non-degenerate frames: f1 is the branch of R^{-1} with f1(0) = 0 and
/// f_{2,j} = R_j(f1). Degenerate frames (det U'' = 0): f1 = 0 and every
/// component is linear in w; `components` then holds those maps of w and
/// `R` is the zero map.
struct DiskIsometry {
    UnitaryFrame frame;
    RationalMap R = RationalMap::zero();
    std::vector<RationalMap> components;
    bool degenerate = false;
    ContinuationContext continuation;

    [[nodiscard]] int ball_dim() const { return frame.ball_dim(); }
};

/// Evaluated point of Delta x B^n.
struct TargetPoint {
    Complex disk{};
    std::vector<Complex> ball;
    /// The radial path passed within 1e-3 of a critical value of R.
    bool near_branch = false;
};

struct ResidueSample {
    Complex w{};
    double functional = 0.0;
    double defining = 0.0;
};

struct ResidueReport {
    std::vector<ResidueSample> samples;
    double max_functional = 0.0;
    double max_defining = 0.0;
    int near_branch_paths = 0;

    [[nodiscard]] double max_residual() const { return std::max(max_functional, max_defining); }
};

inline constexpr double kDegenerateThreshold = 1e-12;

/// True when |det U''| <= 1e-12 * ||U''||_F.
bool is_degenerate(const UnitaryFrame& u);

/// R(z) = z det(U - z diag(0, I)) / det(U'' - z I), reduced.
/// Throws DegenerateFrame.
RationalMap rational_from_unitary(const UnitaryFrame& u);

/// Coefficient distance between the two numerators of R: the determinant
/// form and the Schur-complement form z u11 det(U'' - v u^T / u11 - zI).
double schur_complement_discrepancy(const UnitaryFrame& u);

/// Cramer solution f_{2,j} = R_j(f1) of the lower rows of the defining
/// system, reduced. Throws DegenerateFrame.
std::vector<RationalMap> component_rationals(const UnitaryFrame& u);

/// Coefficient residual of u11 z + sum u_{1,j+1} R_j(z) = R(z) over the
/// common denominator det(U'' - zI).
double first_row_identity_residual(const UnitaryFrame& u);

DiskIsometry degenerate_solve(const UnitaryFrame& u);

/// Solves the frame; degenerate frames fall back to degenerate_solve.
DiskIsometry solve_germ(const UnitaryFrame& u);

/// f1'(0) = 1 / R'(0) (zero for degenerate frames).
Complex germ_derivative_at_origin(const DiskIsometry& iso);

/// f(w) by radial predictor-corrector continuation from 0.
/// Throws OutsideDomain when |w| >= radius_cap and ContinuationFailure when
/// the path runs into a critical point of R.
TargetPoint evaluate(const DiskIsometry& iso, Complex w, double radius_cap = 1.0);

/// |(1 - |f1|^2)(1 - sum |f2j|^2) - (1 - |w|^2)|.
double functional_residual(Complex w, const TargetPoint& p);

/// ||U (f1, f2)^T - (w, f1 f2)^T||_max.
double defining_residual(const UnitaryFrame& u, Complex w, const TargetPoint& p);

/// Residuals over a grid; see kernels.hpp for the serial/parallel choice.
ResidueReport verify(const DiskIsometry& iso, std::span<const Complex> grid, double radius_cap = 1.0);

}  // namespace holoiso
