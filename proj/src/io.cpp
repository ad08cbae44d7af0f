#include "holoiso/io.hpp"

#include "holoiso/errors.hpp"

namespace holoiso {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw ShapeMismatch("complex numbers are [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const SpherePoint& p) { return p.infinite ? Json("inf") : to_json(p.value); }

Json to_json(const Poly& p) {
    Json out = Json::array();
    for (const Complex& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Poly poly_from_json(const Json& j) {
    std::vector<Complex> c;
    for (const Json& e : j) c.push_back(complex_from_json(e));
    return Poly(std::move(c));
}

Json to_json(const RationalMap& m) { return {{"num", to_json(m.num())}, {"den", to_json(m.den())}}; }

RationalMap rational_from_json(const Json& j) { return {poly_from_json(j.at("num")), poly_from_json(j.at("den"))}; }

Json to_json(const UnitaryFrame& f) {
    Json rows = Json::array();
    for (int i = 0; i < f.dim(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < f.dim(); ++k) row.push_back(to_json(f(i, k)));
        rows.push_back(row);
    }
    const FrameFlags& fl = f.flags();
    Json flags = {{"lower_block_upper_triangular", fl.lower_block_upper_triangular},
                  {"constant_diagonal", fl.constant_diagonal},
                  {"zeta", fl.zeta ? to_json(*fl.zeta) : Json(nullptr)}};
    return {{"dim", f.dim()}, {"entries", rows}, {"flags", flags}};
}

UnitaryFrame frame_from_json(const Json& j) {
    const Json& rows = j.at("entries");
    const auto k = static_cast<Eigen::Index>(rows.size());
    if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != k) throw ShapeMismatch("dim disagrees with entries");
    Matrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != k) throw NotUnitary("matrix is not square");
        for (Eigen::Index c = 0; c < k; ++c) m(i, c) = complex_from_json(rows[i][c]);
    }
    return check_unitary(m);
}

Json to_json(const DiskIsometry& iso) {
    Json comps = Json::array();
    for (const RationalMap& c : iso.components) comps.push_back(to_json(c));
    return {{"frame", to_json(iso.frame)}, {"R", to_json(iso.R)}, {"components", comps},
            {"degenerate", iso.degenerate}};
}

DiskIsometry isometry_from_json(const Json& j) {
    DiskIsometry iso = solve_germ(frame_from_json(j.at("frame")));
    if (j.contains("degenerate") && j.at("degenerate").get<bool>() != iso.degenerate) {
        throw ShapeMismatch("stored degenerate flag disagrees with the frame");
    }
    if (j.contains("R") && !iso.degenerate) {
        const RationalMap stored = rational_from_json(j.at("R"));
        if (coeff_distance(stored.reduced(), iso.R) > 1e-9) throw ShapeMismatch("stored R disagrees with the frame");
    }
    return iso;
}

Json to_json(const ResidueReport& r, bool with_samples) {
    Json out = {{"max_functional", r.max_functional}, {"max_defining", r.max_defining},
                {"max_residual", r.max_residual()}, {"near_branch_paths", r.near_branch_paths},
                {"samples", r.samples.size()}};
    if (with_samples) {
        Json s = Json::array();
        for (const ResidueSample& x : r.samples) {
            s.push_back({{"w", to_json(x.w)}, {"functional", x.functional}, {"defining", x.defining}});
        }
        out["points"] = s;
    }
    return out;
}

Json to_json(const BranchData& b) {
    Json ram = Json::array();
    for (const RamificationPoint& r : b.ramification) ram.push_back({{"point", to_json(r.point)}, {"order", r.order}});
    Json br = Json::array();
    for (const BranchValue& v : b.branch) {
        br.push_back({{"value", to_json(v.value)}, {"total_branching", v.total_branching},
                      {"fiber_orders", v.fiber_orders}});
    }
    return {{"degree", b.degree},
            {"ramification", ram},
            {"branch", br},
            {"location_counts", {b.counts.inside, b.counts.outside, b.counts.on_circle}},
            {"locations", {{"inside", b.counts.inside}, {"outside", b.counts.outside},
                           {"on_circle", b.counts.on_circle}}},
            {"riemann_hurwitz_consistent", b.riemann_hurwitz_consistent}};
}

Json to_json(const CongruenceInvariant& c) {
    Json rm = Json::array();
    for (const auto& [r, k] : c.ramification_moduli) rm.push_back({{"modulus", r}, {"order", k}});
    return {{"degree", c.degree},
            {"ram_orders", c.ram_orders},
            {"location_counts", {c.counts.inside, c.counts.outside, c.counts.on_circle}},
            {"pinned", c.pinned},
            {"branch_moduli", c.branch_moduli},
            {"ramification_moduli", rm}};
}

Json to_json(const ReductionVerdict& v) {
    return {{"kind", to_string(v.kind)}, {"m", v.m}, {"unit_diagonal", v.unit_diagonal},
            {"vanishing_components", v.vanishing_components}};
}

Json to_json(const RamificationProfile& p) {
    return {{"zeta", to_json(p.zeta)},
            {"n", p.n},
            {"regime", to_string(p.regime)},
            {"discriminant", p.discriminant},
            {"a_plus", to_json(p.a_plus)},
            {"a_minus", to_json(p.a_minus)},
            {"theta_plus", p.theta_plus},
            {"theta_minus", p.theta_minus},
            {"branch_plus", to_json(p.branch_plus)},
            {"branch_minus", to_json(p.branch_minus)},
            {"branch_values_coincide", p.branch_values_coincide}};
}

Json to_json(const ExtensionReport& r) {
    return {{"zeta", to_json(r.zeta)},
            {"epsilon", r.options.epsilon},
            {"branch_distance", r.branch_distance},
            {"branch_margin", r.options.branch_margin},
            {"branch_ok", r.branch_ok},
            {"outer_residual", r.outer_residual},
            {"outer_ok", r.outer_ok},
            {"outer_failure", r.outer_failure},
            {"max_boundary_modulus", r.max_boundary_modulus},
            {"compact_image_ok", r.compact_image_ok},
            {"pole_distance", r.pole_distance},
            {"poles_ok", r.poles_ok},
            {"passed", r.passed()}};
}

Json to_json(const DomainPoint& p) {
    Json out = {{"domain", p.spec.name()}};
    if (p.spec.kind == DomainKind::IV) {
        Json v = Json::array();
        for (Eigen::Index i = 0; i < p.vector.size(); ++i) v.push_back(to_json(p.vector(i)));
        out["vector"] = v;
    } else {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < p.matrix.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index k = 0; k < p.matrix.cols(); ++k) row.push_back(to_json(p.matrix(i, k)));
            rows.push_back(row);
        }
        out["matrix"] = rows;
    }
    return out;
}

Json to_json(const AuditReport& r) {
    return {{"weighted_residual", r.weighted_residual}, {"min_pole_distance", r.min_pole_distance},
            {"properness_defect", r.properness_defect}, {"weight_sum_defect", r.weight_sum_defect},
            {"factor_residual", r.factor_residual}};
}

Json to_json(const IntakeReport& r) {
    return {{"rational", r.rational},         {"fitted_degree", r.fitted_degree},
            {"fit_ratio", r.fit_ratio},       {"identity_residual", r.identity_residual},
            {"radius", r.radius},             {"terms", r.terms}};
}

Json to_json(const WeightedCandidate& c) {
    Json comps = Json::array();
    for (const auto& f : c.components) {
        Json fj = Json::array();
        for (const RationalMap& r : f) fj.push_back(to_json(r));
        comps.push_back(fj);
    }
    return {{"components", comps}, {"weights", c.weights}};
}

WeightedCandidate candidate_from_json(const Json& j) {
    WeightedCandidate c;
    for (const Json& f : j.at("components")) {
        std::vector<RationalMap> maps;
        for (const Json& r : f) maps.push_back(rational_from_json(r));
        c.components.push_back(std::move(maps));
    }
    c.weights = j.at("weights").get<std::vector<double>>();
    return c;
}

}  // namespace holoiso
