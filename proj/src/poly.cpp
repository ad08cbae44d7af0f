#include "holoiso/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "holoiso/errors.hpp"

namespace holoiso {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Relative size of the sub-k Taylor coefficients at an accepted k-fold root.
constexpr double kMultiplicityTol = 1e-13;
// First grouping radius for eigenvalues that may belong to one multiple root.
constexpr double kLooseGroupRadius = 1e-2;

double rel_scale(Complex z) { return std::max(1.0, std::abs(z)); }

// All Taylor coefficients of p about z: p(z + t) = sum out[k] t^k.
std::vector<Complex> taylor_shift(const std::vector<Complex>& c, Complex z) {
    std::vector<Complex> out = c;
    const int n = static_cast<int>(out.size());
    for (int k = 0; k < n; ++k) {
        for (int i = n - 2; i >= k; --i) {
            out[i] += z * out[i + 1];
        }
    }
    return out;
}

std::vector<double> taylor_shift_abs(const std::vector<Complex>& c, double r) {
    std::vector<double> out(c.size());
    std::transform(c.begin(), c.end(), out.begin(), [](Complex x) { return std::abs(x); });
    const int n = static_cast<int>(out.size());
    for (int k = 0; k < n; ++k) {
        for (int i = n - 2; i >= k; --i) {
            out[i] += r * out[i + 1];
        }
    }
    return out;
}

void balance(Eigen::MatrixXcd& a) {
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    const Eigen::Index n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

std::vector<Complex> companion_eigenvalues(const Poly& p) {
    const int d = p.degree();
    if (d == 1) return {-p[0] / p[1]};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    const Complex lead = p.leading();
    for (int j = 0; j < d; ++j) {
        comp(0, j) = -p[d - 1 - j] / lead;
    }
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    balance(comp);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    std::vector<Complex> out(d);
    for (int i = 0; i < d; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

Complex polish_simple(const Poly& p, const Poly& dp, Complex z) {
    Complex best = z;
    double best_res = std::abs(p(z));
    for (int it = 0; it < 30; ++it) {
        const Complex d = dp(z);
        if (d == Complex{}) break;
        const Complex step = p(z) / d;
        z -= step;
        const double res = std::abs(p(z));
        if (res < best_res) {
            best_res = res;
            best = z;
        }
        if (std::abs(step) <= 4.0 * kEps * rel_scale(z)) break;
    }
    return best;
}

// Tests whether p has a k-fold root near c; on success writes the refined
// centre to out.
bool accept_multiple(const Poly& p, Complex c, int k, double radius, Complex& out) {
    Poly g = p;
    for (int i = 0; i < k - 1; ++i) g = g.derivative();
    const Poly dg = g.derivative();
    Complex z = polish_simple(g, dg, c);
    if (std::abs(z - c) > radius * rel_scale(c)) return false;
    const auto t = taylor_shift(p.coeffs(), z);
    const auto s = taylor_shift_abs(p.coeffs(), std::abs(z));
    // Coefficient rounding is absolute (about eps * max|c|), so it also
    // bounds how small t[j] can get at a true multiple root.
    const auto noise = taylor_shift_abs(std::vector<Complex>(p.coeffs().size(), p.max_abs_coeff()), std::abs(z));
    for (int j = 0; j < k; ++j) {
        if (std::abs(t[j]) > kMultiplicityTol * std::max(s[j], noise[j])) return false;
    }
    if (std::abs(t[k]) <= kMultiplicityTol * s[k]) return false;
    out = z;
    return true;
}

std::vector<std::vector<Complex>> single_linkage(const std::vector<Complex>& pts, double radius) {
    const std::size_t n = pts.size();
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] >= 0) continue;
        label[i] = next;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < n; ++b) {
                if (label[b] >= 0) continue;
                const double tol = radius * std::max(rel_scale(pts[a]), rel_scale(pts[b]));
                if (std::abs(pts[a] - pts[b]) <= tol) {
                    label[b] = next;
                    stack.push_back(b);
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<Complex>> groups(next);
    for (std::size_t i = 0; i < n; ++i) groups[label[i]].push_back(pts[i]);
    return groups;
}

void resolve_group(const Poly& p, const Poly& dp, const std::vector<Complex>& group, double radius,
                   std::vector<RootCluster>& out) {
    if (group.size() == 1) {
        out.push_back({polish_simple(p, dp, group.front()), 1});
        return;
    }
    const Complex centre =
        std::accumulate(group.begin(), group.end(), Complex{}) / static_cast<double>(group.size());
    Complex refined;
    if (accept_multiple(p, centre, static_cast<int>(group.size()), radius, refined)) {
        out.push_back({refined, static_cast<int>(group.size())});
        return;
    }
    if (radius <= kClusterRadius) {
        for (const Complex& z : group) out.push_back({polish_simple(p, dp, z), 1});
        return;
    }
    for (const auto& sub : single_linkage(group, radius / 10.0)) {
        resolve_group(p, dp, sub, radius / 10.0, out);
    }
}

bool root_order(Complex a, Complex b) {
    const double aa = std::arg(a);
    const double ab = std::arg(b);
    if (std::abs(aa - ab) > 1e-12) return aa < ab;
    return std::abs(a) < std::abs(b);
}

}  // namespace

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { strip_exact_zeros(); }

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { strip_exact_zeros(); }

void Poly::strip_exact_zeros() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Poly Poly::constant(Complex c) { return Poly{c}; }

Poly Poly::monomial(int degree, Complex c) {
    std::vector<Complex> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const Complex> roots, Complex lead) {
    std::vector<Complex> c{lead};
    for (const Complex& r : roots) {
        std::vector<Complex> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Poly(std::move(c));
}

Complex Poly::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[k];
}

Complex Poly::leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

Complex Poly::operator()(Complex z) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

void Poly::eval_with_derivative(Complex z, Complex& value, Complex& deriv) const {
    value = {};
    deriv = {};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        deriv = deriv * z + value;
        value = value * z + *it;
    }
}

double Poly::abs_scale(double radius) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * radius + std::abs(*it);
    return acc;
}

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Poly(std::move(d));
}

Complex Poly::taylor_coeff(Complex z, int k) const {
    if (k < 0 || k > degree()) return {};
    return taylor_shift(coeffs_, z)[k];
}

Poly Poly::trimmed(double rel_tol) const {
    const double thresh = rel_tol * max_abs_coeff();
    std::vector<Complex> c = coeffs_;
    while (!c.empty() && std::abs(c.back()) <= thresh) c.pop_back();
    return Poly(std::move(c));
}

Poly Poly::scaled(Complex s) const {
    std::vector<Complex> c = coeffs_;
    for (Complex& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) throw ZeroPolynomial("monic of zero polynomial");
    return scaled(1.0 / leading());
}

Poly Poly::deflate(Complex r) const {
    if (coeffs_.size() <= 1) return {};
    const std::size_t n = coeffs_.size() - 1;
    std::vector<Complex> q(n);
    Complex acc = coeffs_[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = acc;
        acc = coeffs_[i] + r * acc;
    }
    return Poly(std::move(q));
}

Complex Poly::deflate_remainder(Complex r) const { return (*this)(r); }

Poly Poly::conj_coeffs() const {
    std::vector<Complex> c = coeffs_;
    for (Complex& x : c) x = std::conj(x);
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(-1.0); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

std::vector<RootCluster> root_clusters(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("root_clusters of the zero polynomial");
    std::vector<RootCluster> out;
    if (p.degree() == 0) return out;

    // Exact zeros at the origin are split off so they keep exact value 0.
    int zero_mult = 0;
    while (p[zero_mult] == Complex{}) ++zero_mult;
    std::vector<Complex> rest(p.coeffs().begin() + zero_mult, p.coeffs().end());
    const Poly q(std::move(rest));

    if (q.degree() >= 1) {
        const Poly dq = q.derivative();
        const auto eig = companion_eigenvalues(q);
        for (const auto& group : single_linkage(eig, kLooseGroupRadius)) {
            resolve_group(q, dq, group, kLooseGroupRadius, out);
        }
    }
    if (zero_mult > 0) out.push_back({Complex{}, zero_mult});

    std::sort(out.begin(), out.end(),
              [](const RootCluster& a, const RootCluster& b) { return root_order(a.value, b.value); });
    // Polishing can land two members of a rejected group on the same root.
    std::vector<RootCluster> merged;
    for (const RootCluster& rc : out) {
        auto hit = std::find_if(merged.begin(), merged.end(), [&](const RootCluster& m) {
            return std::abs(m.value - rc.value) <= kClusterRadius * std::max(rel_scale(m.value), rel_scale(rc.value));
        });
        if (hit == merged.end()) {
            merged.push_back(rc);
        } else {
            const int total = hit->multiplicity + rc.multiplicity;
            hit->value = (hit->value * static_cast<double>(hit->multiplicity) +
                          rc.value * static_cast<double>(rc.multiplicity)) /
                         static_cast<double>(total);
            hit->multiplicity = total;
        }
    }
    return merged;
}

std::vector<Complex> roots(const Poly& p) {
    std::vector<Complex> out;
    for (const RootCluster& rc : root_clusters(p)) {
        for (int k = 0; k < rc.multiplicity; ++k) out.push_back(rc.value);
    }
    return out;
}

double coeff_distance(const Poly& a, const Poly& b) {
    const int n = std::max(a.degree(), b.degree()) + 1;
    double m = 0.0;
    for (int k = 0; k < n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace holoiso
