#include "holoiso/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/SVD>

#include "holoiso/errors.hpp"
#include "holoiso/grids.hpp"

namespace holoiso {

namespace {

constexpr double kIsometryTol = 1e-9;
constexpr double kPoleClearance = 1e-6;
constexpr double kPropernessTol = 1e-8;
constexpr double kWeightTol = 1e-10;
constexpr double kFactorTol = 1e-8;
constexpr int kGridSize = 200;
constexpr int kBoundarySamples = 128;
constexpr double kFitTolerance = 1e-12;
constexpr double kCheckRadius = 2.0;
constexpr int kCheckSamples = 256;
constexpr double kIdentityTolerance = 1e-8;

using Series = std::vector<Complex>;

Series series_of(const Poly& p, int terms) {
    Series s(terms);
    for (int k = 0; k < terms && k <= p.degree(); ++k) s[k] = p[k];
    return s;
}

Series multiply(const Series& a, const Series& b) {
    const std::size_t n = a.size();
    Series out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == Complex{}) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series divide(const Series& a, const Series& b) {
    const std::size_t n = a.size();
    Series out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex s = a[k];
        for (std::size_t i = 1; i <= k; ++i) s -= b[i] * out[k - i];
        out[k] = s / b[0];
    }
    return out;
}

}  // namespace

void validate(const WeightedCandidate& c) {
    if (c.components.empty()) throw ShapeMismatch("candidate has no factors");
    if (c.components.size() != c.weights.size()) throw ShapeMismatch("one weight per factor expected");
    for (double l : c.weights) {
        if (!(l > 0.0)) throw ShapeMismatch("weights must be positive");
    }
    for (const auto& f : c.components) {
        if (f.empty()) throw ShapeMismatch("factor with no coordinates");
        bool constant = true;
        for (const RationalMap& r : f) {
            const RationalMap m = r.reduced();
            if (m.degree() >= 1 && !m.is_zero()) constant = false;
            if (!m.is_zero() && std::abs(m.eval(SpherePoint::finite(0.0)).value) > 1e-12) {
                throw ShapeMismatch("factor does not vanish at 0");
            }
        }
        if (constant) throw ShapeMismatch("constant factor");
    }
}

double squared_norm(std::span<const RationalMap> f, Complex w) {
    double s = 0.0;
    for (const RationalMap& r : f) {
        if (r.is_zero()) continue;
        const Complex d = r.den()(w);
        if (std::abs(d) <= 1e-12 * std::max(r.den().abs_scale(std::abs(w)), 1e-300)) {
            throw PoleOnGrid("grid point at a pole of a component");
        }
        s += std::norm(r.num()(w) / d);
    }
    return s;
}

double weighted_residual(const WeightedCandidate& c, std::span<const Complex> grid) {
    double worst = 0.0;
    for (const Complex& w : grid) {
        double prod = 1.0;
        for (std::size_t j = 0; j < c.components.size(); ++j) {
            const double defect = 1.0 - squared_norm(c.components[j], w);
            if (defect <= 0.0) return std::numeric_limits<double>::infinity();
            prod *= std::pow(defect, c.weights[j]);
        }
        worst = std::max(worst, std::abs(prod - (1.0 - std::norm(w))));
    }
    return worst;
}

AuditReport rigidity_audit(const WeightedCandidate& c) {
    validate(c);
    const auto grid = disk_grid(kGridSize, 0.95);
    AuditReport rep;
    rep.weighted_residual = weighted_residual(c, grid);
    if (!(rep.weighted_residual < kIsometryTol)) {
        throw NotAnIsometry("weighted residual " + std::to_string(rep.weighted_residual));
    }

    rep.min_pole_distance = std::numeric_limits<double>::infinity();
    for (const auto& f : c.components) {
        for (const RationalMap& r : f) {
            const RationalMap m = r.reduced();
            if (m.is_zero() || m.den().degree() < 1) continue;
            for (const RootCluster& p : root_clusters(m.den())) {
                rep.min_pole_distance = std::min(rep.min_pole_distance, std::abs(std::abs(p.value) - 1.0));
            }
        }
    }
    if (!(rep.min_pole_distance > kPoleClearance)) throw ConclusionViolated("component pole on the unit circle");

    for (const Complex& b : circle_grid(kBoundarySamples, 1.0)) {
        for (const auto& f : c.components) {
            rep.properness_defect = std::max(rep.properness_defect, std::abs(squared_norm(f, b) - 1.0));
        }
    }
    if (!(rep.properness_defect < kPropernessTol)) throw ConclusionViolated("factor is not proper");

    double total = 0.0;
    for (double l : c.weights) total += l;
    rep.weight_sum_defect = std::abs(total - 1.0);
    if (!(rep.weight_sum_defect <= kWeightTol)) throw ConclusionViolated("weights do not sum to 1");

    for (const Complex& w : grid) {
        for (const auto& f : c.components) {
            const double r = std::abs((1.0 - squared_norm(f, w)) - (1.0 - std::norm(w)));
            rep.factor_residual = std::max(rep.factor_residual, r);
        }
    }
    if (!(rep.factor_residual < kFactorTol)) throw ConclusionViolated("factor is not an isometry");
    return rep;
}

std::vector<WeightedCandidate> rigidity_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto random_factor = [&](int dim) {
        Vector u(dim);
        for (int i = 0; i < dim; ++i) u(i) = std::polar(0.2 + unit(rng), 2.0 * M_PI * unit(rng));
        u.normalize();
        std::vector<RationalMap> f;
        for (int i = 0; i < dim; ++i) f.emplace_back(Poly{0.0, u(i)}, Poly{1.0});
        return f;
    };
    const std::vector<std::vector<double>> weight_sets = {
        {1.0}, {0.5, 0.5}, {1.0 / 3.0, 2.0 / 3.0}, {0.2, 0.3, 0.5}, {0.25, 0.25, 0.5}, {0.1, 0.2, 0.3, 0.4},
    };
    std::vector<WeightedCandidate> out;
    for (const auto& weights : weight_sets) {
        for (int variant = 0; variant < 4; ++variant) {
            WeightedCandidate c;
            c.weights = weights;
            for (std::size_t j = 0; j < weights.size(); ++j) {
                // variant 0: the plain diagonal (w, ..., w); others rotate and
                // spread each factor over 1-3 coordinates.
                if (variant == 0) {
                    c.components.push_back({RationalMap::identity()});
                } else {
                    c.components.push_back(random_factor(1 + static_cast<int>(unit(rng) * 3.0)));
                }
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<Complex> germ_series(const DiskIsometry& iso, int terms) {
    Series g(terms);
    if (iso.degenerate || terms < 2) return g;
    const RationalMap m = iso.R.reduced();
    // R(z) = z p~(z) / q(z); Lagrange inversion uses h = z / R = q / p~.
    std::vector<Complex> tail(m.num().coeffs().begin() + 1, m.num().coeffs().end());
    const Series h = divide(series_of(m.den(), terms), series_of(Poly(tail), terms));
    Series power(terms);
    power[0] = 1.0;
    for (int k = 1; k < terms; ++k) {
        power = multiply(power, h);
        g[k] = power[k - 1] / static_cast<double>(k);
    }
    return g;
}

IntakeReport rationality_intake(const DiskIsometry& iso, int terms, int max_degree) {
    IntakeReport rep;
    rep.terms = terms;
    if (iso.degenerate) {
        rep.rational = true;
        rep.fitted_degree = 0;
        return rep;
    }
    if (terms < 2 * max_degree + 4) throw std::invalid_argument("not enough series terms for the fit");
    Series g = germ_series(iso, terms);
    double growth = 0.0;
    for (int k = terms / 2; k < terms; ++k) {
        if (std::abs(g[k]) > 0.0) growth = std::max(growth, std::pow(std::abs(g[k]), 1.0 / k));
    }
    rep.radius = growth > 0.0 ? 1.0 / growth : std::numeric_limits<double>::infinity();
    const double scale = growth > 0.0 ? rep.radius : 1.0;
    for (int k = 0; k < terms; ++k) g[k] *= std::pow(scale, k);

    // Denominator b of the fit: sum_i b_i g_{k-i} = 0 for every k > m.
    Vector den;
    for (int m = 0; m <= max_degree; ++m) {
        Matrix t(terms - m - 1, m + 1);
        for (int k = m + 1; k < terms; ++k)
            for (int i = 0; i <= m; ++i) t(k - m - 1, i) = g[k - i];
        Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullV);
        const Eigen::VectorXd sv = svd.singularValues();
        rep.fit_ratio = sv(0) > 0.0 ? sv(m) / sv(0) : 0.0;
        if (rep.fit_ratio < kFitTolerance) {
            rep.fitted_degree = m;
            den = svd.matrixV().col(m);
            break;
        }
    }
    if (rep.fitted_degree < 0) return rep;

    const int m = rep.fitted_degree;
    std::vector<Complex> a(m + 1), b(m + 1);
    for (int k = 0; k <= m; ++k) {
        b[k] = den(k);
        for (int i = 0; i <= k; ++i) a[k] += g[k - i] * den(i);
    }
    const Poly fit_num(std::move(a));
    const Poly fit_den(std::move(b));
    for (const Complex& t : circle_grid(kCheckSamples, kCheckRadius, M_PI / kCheckSamples)) {
        const Complex w = t * scale;
        const Complex f = fit_num(t) / fit_den(t);
        const Complex r = iso.R.eval(SpherePoint::finite(f)).value;
        const double res = std::abs(r - w) / (1.0 + std::abs(w));
        rep.identity_residual = std::isfinite(res) ? std::max(rep.identity_residual, res)
                                                   : std::numeric_limits<double>::infinity();
    }
    rep.rational = rep.identity_residual < kIdentityTolerance;
    return rep;
}

}  // namespace holoiso
