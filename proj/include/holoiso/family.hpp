#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "holoiso/germ.hpp"
#include "holoiso/kernels.hpp"

namespace holoiso {

enum class Regime { A, Critical, B };

std::string to_string(Regime r);

/// Closed-form ramification of R_zeta(z) = z ((conj(zeta) z - 1)/(z - zeta))^n.
struct RamificationProfile {
    Complex zeta{};
    int n = 2;
    Complex a_plus{};
    Complex a_minus{};
    Regime regime = Regime::B;
    double discriminant = 0.0;
    /// Arguments of a_+ and a_- (meaningful in regime A).
    double theta_plus = 0.0;
    double theta_minus = 0.0;
    /// R(a_+) and R(a_-); the two further branch values besides 0 and inf.
    Complex branch_plus{};
    Complex branch_minus{};
    /// R(a_+) and R(a_-) agree within 1e-10 (recorded, not interpreted).
    bool branch_values_coincide = false;
};

/// (n - 1)/(n + 1).
double critical_radius(int n);

/// Throws InvalidZeta unless 0 < |zeta| < 1; requires n >= 2.
RamificationProfile closed_form_ramification(Complex zeta, int n);

/// The isometry solved from build_family_unitary(zeta, n).
DiskIsometry family_map(Complex zeta, int n);

/// max |R_{zeta e^{i theta}}(z) - e^{-i(n-1)theta} R_zeta(e^{-i theta} z)|,
/// both maps built from their frames. Throws SampleAtSingularity.
double rotation_equivariance_residual(Complex zeta, double theta, int n, std::span<const Complex> samples);

struct ExtensionOptions {
    double epsilon = 0.05;
    double branch_margin = 0.01;
    int outer_samples = 64;
    int circle_samples = 256;
    double pole_clearance = 1e-6;
    double outer_tolerance = 1e-9;
};

struct ExtensionReport {
    Complex zeta{};
    ExtensionOptions options;
    double branch_distance = 0.0;   // min over finite nonzero branch values of ||b| - 1|
    bool branch_ok = false;
    double outer_residual = 0.0;    // max |R(f1(w)) - w| on |w| = 1 + eps
    bool outer_ok = false;
    std::string outer_failure;      // continuation error, if any
    double max_boundary_modulus = 0.0;  // max |f1| on |w| = 1
    bool compact_image_ok = false;
    double pole_distance = 0.0;     // min distance from f1(circle) to poles of R_j
    bool poles_ok = false;

    [[nodiscard]] bool passed() const { return branch_ok && outer_ok && compact_image_ok && poles_ok; }
};

/// Numerical check that f1 extends past the closed disk. Defined for n = 2
/// and |zeta| < 1/3; other inputs throw HypothesisViolated.
ExtensionReport boundary_extension_check(Complex zeta, const ExtensionOptions& options = {});

/// max |f_{2,2}(w) - sqrt(1 - |zeta|^2) f1(w)/(f1(w) - zeta)| for the n = 2
/// family (the identity lives in the last component slot).
double second_component_residual(Complex zeta, std::span<const Complex> samples);

struct SweepRow {
    Complex zeta{};
    int n = 2;
    RamificationProfile profile;
    double max_residual = 0.0;
};

/// count parameters zeta = r e^{i t} with r uniform in [0.05, 0.95] and t
/// uniform in [0, 2 pi), drawn from mt19937_64(seed); each row carries the
/// closed-form ramification and the max verify residual over `grid`.
std::vector<Complex> sweep_parameters(int count, std::uint64_t seed);
std::vector<SweepRow> sweep(std::span<const Complex> zetas, int n, std::span<const Complex> grid, Exec exec);
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace holoiso
