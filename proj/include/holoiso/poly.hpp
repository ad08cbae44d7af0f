#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace holoiso {

using Complex = std::complex<double>;

/// A point of the Riemann sphere: a finite complex value or the point at
/// infinity.
struct SpherePoint {
    Complex value{};
    bool infinite = false;

    static SpherePoint infinity() { return {Complex{}, true}; }
    static SpherePoint finite(Complex z) { return {z, false}; }
};

/// Dense univariate polynomial with complex coefficients in ascending
/// degree order. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Complex> coeffs);
    explicit Poly(std::vector<Complex> coeffs);

    static Poly constant(Complex c);
    static Poly monomial(int degree, Complex c = 1.0);
    /// lead * prod (z - r) over the given roots.
    static Poly from_roots(std::span<const Complex> roots, Complex lead = 1.0);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Complex>& coeffs() const { return coeffs_; }
    [[nodiscard]] Complex operator[](int k) const;
    [[nodiscard]] Complex leading() const;

    [[nodiscard]] Complex operator()(Complex z) const;
    /// Value and first derivative in one Horner sweep.
    void eval_with_derivative(Complex z, Complex& value, Complex& deriv) const;
    /// Sum |c_k| |z|^k: the natural rounding scale of p(z).
    [[nodiscard]] double abs_scale(double radius) const;
    [[nodiscard]] double max_abs_coeff() const;

    [[nodiscard]] Poly derivative() const;
    /// Taylor coefficient (1/k!) p^{(k)}(z).
    [[nodiscard]] Complex taylor_coeff(Complex z, int k) const;

    /// Drops trailing coefficients below rel_tol * max|c|.
    [[nodiscard]] Poly trimmed(double rel_tol) const;
    [[nodiscard]] Poly scaled(Complex s) const;
    [[nodiscard]] Poly monic() const;
    /// Synthetic division by (z - r); the remainder is discarded.
    [[nodiscard]] Poly deflate(Complex r) const;
    /// Remainder of synthetic division by (z - r), i.e. p(r).
    [[nodiscard]] Complex deflate_remainder(Complex r) const;
    /// q(z) = conj(p(conj z)): conjugates every coefficient.
    [[nodiscard]] Poly conj_coeffs() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Complex s, const Poly& p) { return p.scaled(s); }

private:
    void strip_exact_zeros();
    std::vector<Complex> coeffs_;
};

/// A root together with its multiplicity.
struct RootCluster {
    Complex value;
    int multiplicity = 1;
};

/// Distinct roots with multiplicities. Companion-matrix eigenvalues
/// (balanced) are grouped, each candidate group is validated as a k-fold
/// root through the Taylor coefficients of p at the refined centre, and
/// every accepted value is Newton-polished (on p^{(k-1)} for k-fold roots).
/// Throws ZeroPolynomial for the zero polynomial.
std::vector<RootCluster> root_clusters(const Poly& p);

/// All roots repeated by multiplicity, ordered by ascending argument then
/// ascending modulus.
std::vector<Complex> roots(const Poly& p);

/// Max over coefficients of |a_k - b_k| with zero padding.
double coeff_distance(const Poly& a, const Poly& b);

/// Multiplicity clustering radius (relative to max(1, |z|)).
inline constexpr double kClusterRadius = 1e-7;

}  // namespace holoiso
