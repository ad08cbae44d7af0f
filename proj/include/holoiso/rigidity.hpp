#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "holoiso/germ.hpp"

namespace holoiso {

/// f = (f_1, ..., f_m) into a product of balls B^{N_j} with weights
/// lambda_j; each f_j is a vector of rational functions of w.
struct WeightedCandidate {
    std::vector<std::vector<RationalMap>> components;
    std::vector<double> weights;
};

/// Throws ShapeMismatch for empty candidates, mismatched weights,
/// nonpositive weights, constant factors or factors not vanishing at 0.
void validate(const WeightedCandidate& c);

/// ||f_j(w)||^2. Throws PoleOnGrid when w is a pole.
double squared_norm(std::span<const RationalMap> f, Complex w);

/// max |prod (1 - ||f_j||^2)^{lambda_j} - (1 - |w|^2)| over the grid.
double weighted_residual(const WeightedCandidate& c, std::span<const Complex> grid);

struct AuditReport {
    double weighted_residual = 0.0;
    double min_pole_distance = 0.0;    // min ||a| - 1| over component poles
    double properness_defect = 0.0;    // max | ||f_j(b)||^2 - 1 | on |b| = 1
    double weight_sum_defect = 0.0;    // |sum lambda - 1|
    double factor_residual = 0.0;      // max |(1 - ||f_j||^2) - (1 - |w|^2)|
};

/// Checks the rigidity conclusion on one candidate: no pole near the
/// circle, every factor proper, weights summing to 1, every factor an
/// isometry. Throws NotAnIsometry when the weighted residual on a
/// 200-point grid is not below 1e-9 and ConclusionViolated when any
/// conclusion fails.
AuditReport rigidity_audit(const WeightedCandidate& c);

/// Deterministic corpus of rational isometries into ball products: unit
/// vectors times w, phase rotations and reweightings (at least 20).
std::vector<WeightedCandidate> rigidity_corpus(std::uint64_t seed = 1);

struct IntakeReport {
    bool rational = false;
    int fitted_degree = -1;       // smallest m with a [m/m] fit at rounding level, -1 if none <= max_degree
    double fit_ratio = 0.0;       // sigma_min / sigma_max of the fit's linear system
    double identity_residual = 0.0;  // max |R(F(w)) - w| / (1 + |w|) on the check circle
    double radius = 1.0;          // estimated radius of convergence of f1
    int terms = 0;
};

/// Decides whether the germ f1 is rational of degree <= max_degree. A
/// [m/m] rational F is fitted to the Taylor series (rescaled by the
/// estimated radius of convergence) with the smallest m that fits at
/// rounding level; f1 counts as rational when R(F(w)) = w also holds on the
/// circle of twice that radius, where a branch cut of an algebraic germ is
/// always crossed. The rigidity audit only applies to rational germs.
IntakeReport rationality_intake(const DiskIsometry& iso, int terms = 80, int max_degree = 12);

/// Taylor coefficients g_0..g_{terms-1} of f1 at 0.
std::vector<Complex> germ_series(const DiskIsometry& iso, int terms);

}  // namespace holoiso
