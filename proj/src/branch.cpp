#include "holoiso/branch.hpp"

#include <algorithm>
#include <cmath>

#include "holoiso/errors.hpp"

namespace holoiso {

namespace {

bool same_value(const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    return std::abs(a.value - b.value) <= kBranchDedupTolerance * std::max(1.0, std::abs(a.value));
}

// Ramification order at infinity from the expansion of R there.
int order_at_infinity(const RationalMap& m) {
    const int dp = m.num().degree();
    const int dq = m.den().degree();
    if (dp != dq) return std::abs(dp - dq) - 1;
    const Complex c = m.num().leading() / m.den().leading();
    const Poly rest = (m.num() - m.den().scaled(c)).trimmed(1e-12);
    if (rest.is_zero()) return 0;
    return dq - rest.degree() - 1;
}

bool inside_disk(Complex z) { return std::abs(z) < 1.0 - kOnCircleTolerance; }

bool moduli_match(double a, double b) { return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a)); }

}  // namespace

int BranchData::total_order() const {
    int s = 0;
    for (const RamificationPoint& r : ramification) s += r.order;
    return s;
}

BranchData branch_data(const RationalMap& map) {
    const RationalMap m = map.reduced();
    BranchData out;
    out.degree = m.degree();
    if (out.degree <= 1) return out;

    const Poly w = m.wronskian().trimmed(1e-13);
    if (w.degree() >= 1) {
        for (const RootCluster& c : root_clusters(w)) {
            out.ramification.push_back({SpherePoint::finite(c.value), c.multiplicity});
        }
    }
    const int at_inf = order_at_infinity(m);
    if (at_inf > 0) out.ramification.push_back({SpherePoint::infinity(), at_inf});
    out.riemann_hurwitz_consistent = out.total_order() == 2 * out.degree - 2;

    for (const RamificationPoint& r : out.ramification) {
        const SpherePoint v = m.eval(r.point);
        auto it = std::find_if(out.branch.begin(), out.branch.end(),
                               [&](const BranchValue& b) { return same_value(b.value, v); });
        if (it == out.branch.end()) {
            out.branch.push_back({v, 0, {}});
            it = std::prev(out.branch.end());
        }
        it->total_branching += r.order;
        it->fiber_orders.push_back(r.order);
    }
    for (BranchValue& b : out.branch) std::sort(b.fiber_orders.begin(), b.fiber_orders.end());

    for (const RamificationPoint& r : out.ramification) {
        if (r.point.infinite) {
            ++out.counts.outside;
            continue;
        }
        const double d = std::abs(r.point.value) - 1.0;
        if (d < -kOnCircleTolerance) {
            ++out.counts.inside;
        } else if (d > kOnCircleTolerance) {
            ++out.counts.outside;
        } else {
            ++out.counts.on_circle;
        }
    }
    return out;
}

CongruenceInvariant invariants(const RationalMap& map) {
    const RationalMap m = map.reduced();
    const BranchData bd = branch_data(m);
    CongruenceInvariant inv;
    inv.degree = bd.degree;
    inv.counts = bd.counts;
    for (const RamificationPoint& r : bd.ramification) inv.ram_orders.push_back(r.order);
    std::sort(inv.ram_orders.begin(), inv.ram_orders.end());

    const auto is_zero_value = [](const SpherePoint& v) { return !v.infinite && std::abs(v.value) < 1e-8; };
    const auto zero_it = std::find_if(bd.branch.begin(), bd.branch.end(),
                                      [&](const BranchValue& b) { return is_zero_value(b.value); });
    bool pinned = zero_it != bd.branch.end();
    if (pinned) {
        for (const BranchValue& b : bd.branch) {
            if (&b == &*zero_it || b.value.infinite || !inside_disk(b.value.value)) continue;
            if (b.fiber_orders == zero_it->fiber_orders) pinned = false;
        }
    }
    if (pinned && m.num().degree() >= 1) {
        for (const RootCluster& z : root_clusters(m.num())) {
            if (!inside_disk(z.value)) continue;
            if (std::abs(z.value) > 1e-12 || z.multiplicity != 1) pinned = false;
        }
    }
    inv.pinned = pinned;
    if (!pinned) return inv;

    for (const BranchValue& b : bd.branch) {
        if (b.value.infinite || is_zero_value(b.value)) continue;
        inv.branch_moduli.push_back(std::abs(b.value.value));
    }
    std::sort(inv.branch_moduli.begin(), inv.branch_moduli.end());
    for (const RamificationPoint& r : bd.ramification) {
        if (!r.point.infinite) inv.ramification_moduli.emplace_back(std::abs(r.point.value), r.order);
    }
    std::sort(inv.ramification_moduli.begin(), inv.ramification_moduli.end());
    return inv;
}

Certificate incongruence_certificate(const CongruenceInvariant& a, const CongruenceInvariant& b) {
    if (a.degree != b.degree) {
        return {true, "degree " + std::to_string(a.degree) + " vs " + std::to_string(b.degree)};
    }
    if (a.ram_orders != b.ram_orders) return {true, "ramification order multisets differ"};
    if (!(a.counts == b.counts)) return {true, "ramification location counts differ"};
    if (!(a.pinned && b.pinned)) return {};

    if (a.branch_moduli.size() != b.branch_moduli.size()) return {true, "branch value counts differ"};
    for (std::size_t i = 0; i < a.branch_moduli.size(); ++i) {
        if (!moduli_match(a.branch_moduli[i], b.branch_moduli[i])) return {true, "branch value moduli differ"};
    }
    if (a.ramification_moduli.size() != b.ramification_moduli.size()) {
        return {true, "ramification point counts differ"};
    }
    for (std::size_t i = 0; i < a.ramification_moduli.size(); ++i) {
        const auto& x = a.ramification_moduli[i];
        const auto& y = b.ramification_moduli[i];
        if (x.second != y.second || !moduli_match(x.first, y.first)) {
            return {true, "ramification point moduli differ"};
        }
    }
    return {};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::GeodesicDiskFactor: return "GeodesicDiskFactor";
        case Verdict::SquareRootClass: return "SquareRootClass";
        case Verdict::Reducible: return "Reducible";
        case Verdict::Full: return "Full";
    }
    return "Unknown";
}

ReductionVerdict reduction_classify(const RationalMap& map, int n) {
    const int d = map.reduced().degree();
    if (d > n + 1) {
        throw HypothesisViolated("degree " + std::to_string(d) + " exceeds n + 1 = " + std::to_string(n + 1));
    }
    ReductionVerdict v;
    if (d <= 1) {
        v.kind = Verdict::GeodesicDiskFactor;
    } else if (d == 2) {
        v.kind = Verdict::SquareRootClass;
    } else if (d == n + 1) {
        v.kind = Verdict::Full;
    } else {
        v.kind = Verdict::Reducible;
    }
    v.m = std::max(d - 1, 0);
    return v;
}

ReductionVerdict reduction_classify(const DiskIsometry& iso) {
    ReductionVerdict v = reduction_classify(iso.R, iso.ball_dim());
    const UnitaryFrame normalized = schur_normalize(iso.frame).first;
    for (int j = 1; j < normalized.dim(); ++j) {
        if (std::abs(std::abs(normalized(j, j)) - 1.0) < 1e-10) v.unit_diagonal.push_back(j + 1);
    }
    for (std::size_t j = 0; j < iso.components.size(); ++j) {
        if (iso.components[j].is_zero()) v.vanishing_components.push_back(static_cast<int>(j) + 1);
    }
    return v;
}

namespace {

// q with q(z) (cb z - 1) = p(z). For |cb| < 1 the recurrence runs from the
// constant term up, where errors shrink by |cb| per step.
Poly divide_by_factor(const Poly& p, Complex cb) {
    if (std::abs(cb) >= 1.0) return p.deflate(1.0 / cb).scaled(1.0 / cb);
    const int d = p.degree();
    std::vector<Complex> q(d);
    Complex prev{};
    for (int i = 0; i < d; ++i) {
        prev = cb * prev - p[i];
        q[i] = prev;
    }
    return Poly(std::move(q));
}

}  // namespace

RationalMap blaschke_factor(Complex c) { return {Poly{-1.0, std::conj(c)}, Poly{-c, 1.0}}; }

PeelResult peel_parameter(const RationalMap& map) {
    const RationalMap m = map.reduced().normalized();
    if (m.degree() < 2) throw NothingToPeel("degree-1 map has no Blaschke factor to remove");
    const BlaschkeForm form = to_blaschke(m);

    Complex c = form.poles.front();
    for (const Complex& a : form.poles) {
        const double da = std::abs(a);
        const double dc = std::abs(c);
        if (da > dc + 1e-12 || (std::abs(da - dc) <= 1e-12 && std::arg(a) < std::arg(c) - 1e-12)) c = a;
    }
    const Complex cb = std::conj(c);
    PeelResult out;
    out.c2 = c;
    out.reduced = RationalMap(divide_by_factor(m.num(), cb), m.den().deflate(c));
    out.residual = coeff_distance(out.reduced * blaschke_factor(c), m);
    return out;
}

}  // namespace holoiso
