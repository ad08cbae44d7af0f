#pragma once

#include <span>
#include <vector>

#include "holoiso/poly.hpp"

namespace holoiso {

/// Rational self-map of the Riemann sphere, num/den.
///
/// The constant zero map (empty numerator) is allowed because vanishing
/// ball components are represented that way; the denominator is never zero.
class RationalMap {
public:
    RationalMap();  // identity z
    RationalMap(Poly num, Poly den);

    static RationalMap identity() { return {}; }
    static RationalMap zero();

    /// Cancels numerator/denominator roots that agree within
    /// kCancelTolerance (relative to max(1,|z|)); drops negligible leading
    /// coefficients first.
    [[nodiscard]] RationalMap reduced() const;
    /// Same map with a monic denominator.
    [[nodiscard]] RationalMap normalized() const;

    [[nodiscard]] const Poly& num() const { return num_; }
    [[nodiscard]] const Poly& den() const { return den_; }
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

    /// Total on the sphere: poles return the infinity marker, infinity
    /// returns the ratio of leading terms.
    [[nodiscard]] SpherePoint eval(SpherePoint z) const;
    /// Finite-point evaluation; callers guarantee z is not a pole.
    [[nodiscard]] Complex operator()(Complex z) const { return num_(z) / den_(z); }
    /// R(z) and R'(z) at a finite non-pole.
    void eval_with_derivative(Complex z, Complex& value, Complex& deriv) const;

    /// p'q - pq' (the ramification polynomial).
    [[nodiscard]] Poly wronskian() const;

    friend RationalMap operator*(const RationalMap& a, const RationalMap& b);

private:
    Poly num_;
    Poly den_;
};

inline constexpr double kCancelTolerance = 1e-10;

/// Max over coefficients after normalizing both denominators to monic.
double coeff_distance(const RationalMap& a, const RationalMap& b);

/// max over samples of |R(z) conj(R(1/conj z)) - 1|.
/// Throws SampleAtSingularity for samples at 0, at poles/zeros of R, or at
/// their circle inversions.
double circle_symmetry_residual(const RationalMap& map, std::span<const Complex> samples);

/// alpha0 * z * prod (z - 1/conj(a_j)) / (z - a_j).
struct BlaschkeForm {
    Complex alpha0{1.0};
    std::vector<Complex> poles;
    bool fixed_zero_at_origin = true;

    [[nodiscard]] RationalMap to_map() const;
    [[nodiscard]] int degree() const { return 1 + static_cast<int>(poles.size()); }
};

/// Recovers the Blaschke-type form of a map fixing 0 with a simple zero and
/// satisfying the unit-circle symmetry. Throws NotBlaschkeForm otherwise.
BlaschkeForm to_blaschke(const RationalMap& map);

/// Samples on a circle whose radius avoids the zeros and poles of map and
/// their inversions; used by the symmetry checks.
std::vector<Complex> safe_circle_samples(const RationalMap& map, int count);

/// The family map z ((conj(zeta) z - 1)/(z - zeta))^n in closed form.
RationalMap family_closed_form(Complex zeta, int n);

}  // namespace holoiso
