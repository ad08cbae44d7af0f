#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "holoiso/branch.hpp"
#include "holoiso/domains.hpp"
#include "holoiso/errors.hpp"
#include "holoiso/family.hpp"
#include "holoiso/grids.hpp"
#include "holoiso/io.hpp"
#include "holoiso/rigidity.hpp"

namespace holoiso::cli {

namespace {

double parse_real(std::string_view s, const std::string& whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("bad complex number: " + whole);
    return v;
}

struct Source {
    std::string unitary;
    std::string in;
    std::string zeta;
    int n = 2;
    std::uint64_t seed = 0;
};

void add_source_options(CLI::App* cmd, Source& s, bool with_unitary) {
    if (with_unitary) {
        cmd->add_option("--unitary", s.unitary, "identity3 | identity | hessenberg | family | permutation")
            ->check(CLI::IsMember({"identity3", "identity", "hessenberg", "family", "permutation"}));
        cmd->add_option("--in", s.in, "isometry bundle JSON");
        cmd->add_option("--seed", s.seed, "seed for hessenberg frames")->capture_default_str();
    }
    cmd->add_option("--zeta", s.zeta, "family parameter a+bi");
    cmd->add_option("--n", s.n, "ball dimension")->check(CLI::Range(1, 64))->capture_default_str();
}

Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    return Json::parse(f);
}

UnitaryFrame frame_from(const Source& s) {
    const std::string kind = s.unitary.empty() ? (s.zeta.empty() ? "" : "family") : s.unitary;
    if (kind == "identity3") return check_unitary(Matrix::Identity(3, 3));
    if (kind == "identity") return check_unitary(Matrix::Identity(s.n + 1, s.n + 1));
    if (kind == "hessenberg") return build_hessenberg_unitary(s.n, s.seed);
    if (kind == "family") {
        if (s.zeta.empty()) throw std::invalid_argument("--unitary family needs --zeta");
        return build_family_unitary(parse_complex(s.zeta), s.n);
    }
    if (kind == "permutation") {
        const int k = s.n + 1;
        Matrix p = Matrix::Zero(k, k);
        for (int i = 0; i < k; ++i) p((i + 1) % k, i) = 1.0;
        return check_unitary(p);
    }
    throw std::invalid_argument("give --in, --unitary or --zeta");
}

DiskIsometry isometry_from(const Source& s) {
    if (!s.in.empty()) {
        const Json doc = read_json(s.in);
        return isometry_from_json(doc.contains("isometry") ? doc.at("isometry") : doc);
    }
    return solve_germ(frame_from(s));
}

void emit(const Json& body, const std::string& out_path, std::ostream& out) {
    Json doc = {{"schema_version", kSchemaVersion}};
    doc.update(body);
    if (out_path.empty()) {
        out << doc.dump(2) << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot write " + out_path);
        f << doc.dump(2) << '\n';
    }
}

std::vector<Complex> parse_list(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_complex(item));
    }
    return out;
}

DomainSpec domain_from(const std::string& name, int p, int q, int m, int dim) {
    if (name == "I") return DomainSpec::type_I(p, q);
    if (name == "II") return DomainSpec::type_II(m);
    if (name == "III") return DomainSpec::type_III(m);
    return DomainSpec::type_IV(dim);
}

}  // namespace

Complex parse_complex(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty complex number");
    if (text.back() != 'i') return {parse_real(text, text), 0.0};
    const std::string_view body(text.data(), text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_real(body, text)};
    return {parse_real(body.substr(0, split), text), parse_real(body.substr(split), text)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Holomorphic isometries of the disk into products and classical domains", "holoiso"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "write the report here instead of stdout");

    // construct / verify / ramify / classify / peel
    Source src;
    auto* construct = app.add_subcommand("construct", "build and solve a unitary frame");
    add_source_options(construct, src, true);

    int grid = 200;
    double radius = 0.95;
    double tol = 1e-9;
    bool with_points = false;
    auto* verify_cmd = app.add_subcommand("verify", "functional and defining residuals on a disk grid");
    add_source_options(verify_cmd, src, true);
    verify_cmd->add_option("--grid", grid, "grid size")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--radius", radius, "grid radius")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    verify_cmd->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_flag("--points", with_points, "include per-point residuals");

    auto* ramify = app.add_subcommand("ramify", "ramification and branch data of R");
    add_source_options(ramify, src, true);

    auto* classify = app.add_subcommand("classify", "reduction verdict");
    add_source_options(classify, src, true);

    double peel_tol = 1e-12;
    auto* peel = app.add_subcommand("peel", "split off one Blaschke factor of R");
    add_source_options(peel, src, true);
    peel->add_option("--tol", peel_tol, "re-multiplication tolerance")->check(CLI::PositiveNumber);

    // family
    std::string action;
    auto* family = app.add_subcommand("family", "the one-parameter family");
    add_source_options(family, src, false);
    family->add_option("--grid", grid, "grid size")->check(CLI::PositiveNumber)->capture_default_str();
    family->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    family->add_option("action", action, "verify")->check(CLI::IsMember({"verify"}));

    // extendcheck
    ExtensionOptions ext;
    auto* extend = app.add_subcommand("extendcheck", "extension of f1 past the closed disk (n = 2)");
    extend->add_option("--zeta", src.zeta, "family parameter a+bi")->required();
    extend->add_option("--eps", ext.epsilon, "outer circle offset")->check(CLI::PositiveNumber)->capture_default_str();
    extend->add_option("--margin", ext.branch_margin, "branch value margin")->check(CLI::PositiveNumber);

    // embed
    std::string domain = "I";
    int p = 2, q = 3, m = 5, dim = 3;
    std::string w_text = "0";
    std::string z_text;
    auto* embed_cmd = app.add_subcommand("embed", "embed a point of Delta x B^n into a classical domain");
    embed_cmd->add_option("--domain", domain, "I | II | III | IV")
        ->check(CLI::IsMember({"I", "II", "III", "IV"}))
        ->capture_default_str();
    embed_cmd->add_option("--p", p, "rows (type I)")->check(CLI::PositiveNumber);
    embed_cmd->add_option("--q", q, "columns (type I)")->check(CLI::PositiveNumber);
    embed_cmd->add_option("--m", m, "size (types II, III)")->check(CLI::PositiveNumber);
    embed_cmd->add_option("--dim", dim, "dimension (type IV)")->check(CLI::PositiveNumber);
    embed_cmd->add_option("--w", w_text, "disk coordinate a+bi");
    embed_cmd->add_option("--z", z_text, "ball coordinates, comma separated");
    embed_cmd->add_option("--zeta", src.zeta, "also report the composite residual of this family source");
    embed_cmd->add_option("--n", src.n, "family ball dimension")->capture_default_str();
    embed_cmd->add_option("--grid", grid, "composite grid size")->check(CLI::PositiveNumber);
    embed_cmd->add_option("--tol", tol, "composite tolerance")->check(CLI::PositiveNumber);

    // rigidity
    std::string candidate_path;
    bool corpus = false;
    auto* rigidity = app.add_subcommand("rigidity", "audit a weighted candidate, the corpus, or a family germ");
    rigidity->add_option("--in", candidate_path, "candidate JSON");
    rigidity->add_flag("--corpus", corpus, "audit the built-in corpus");
    rigidity->add_option("--zeta", src.zeta, "rationality intake of the family germ");
    rigidity->add_option("--n", src.n, "family ball dimension")->capture_default_str();
    rigidity->add_option("--seed", src.seed, "corpus seed");

    // sweep
    int count = 100;
    int samples = 50;
    std::uint64_t sweep_seed = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "seeded parameter sweep to CSV");
    sweep_cmd->add_option("--n", src.n, "ball dimension")->check(CLI::Range(2, 64))->capture_default_str();
    sweep_cmd->add_option("--grid", count, "number of parameters")->check(CLI::PositiveNumber)->capture_default_str();
    sweep_cmd->add_option("--samples", samples, "verify grid size per parameter")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", sweep_seed, "seed")->capture_default_str();

    // CLI11 consumes the argument vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (construct->parsed()) {
            const DiskIsometry iso = isometry_from(src);
            emit({{"isometry", to_json(iso)}, {"degree", iso.R.degree()}}, out_path, out);
            return kOk;
        }
        if (verify_cmd->parsed()) {
            const DiskIsometry iso = isometry_from(src);
            const ResidueReport rep = verify_grid(iso, disk_grid(grid, radius), Exec::Parallel);
            const bool ok = rep.max_residual() < tol;
            emit({{"residuals", to_json(rep, with_points)}, {"grid", grid}, {"radius", radius},
                  {"tolerance", tol}, {"passed", ok}},
                 out_path, out);
            return ok ? kOk : kVerificationFailed;
        }
        if (ramify->parsed()) {
            const DiskIsometry iso = isometry_from(src);
            const BranchData b = branch_data(iso.R);
            Json body = {{"branch_data", to_json(b)},
                         {"distinct_ramification_points", b.ramification.size()},
                         {"invariants", to_json(invariants(iso.R))}};
            bool ok = b.riemann_hurwitz_consistent;
            if (!src.zeta.empty() && src.in.empty()) {
                const RamificationProfile prof = closed_form_ramification(parse_complex(src.zeta), src.n);
                double worst = 0.0;
                for (Complex a : {prof.a_plus, prof.a_minus}) {
                    double best = std::numeric_limits<double>::infinity();
                    for (const RamificationPoint& r : b.ramification) {
                        if (!r.point.infinite) best = std::min(best, std::abs(r.point.value - a));
                    }
                    worst = std::max(worst, best);
                }
                body["profile"] = to_json(prof);
                body["closed_form_distance"] = worst;
                ok = ok && worst < 1e-8;
            }
            body["passed"] = ok;
            emit(body, out_path, out);
            return ok ? kOk : kVerificationFailed;
        }
        if (classify->parsed()) {
            const DiskIsometry iso = isometry_from(src);
            emit({{"verdict", to_json(reduction_classify(iso))}, {"degree", iso.R.degree()}}, out_path, out);
            return kOk;
        }
        if (peel->parsed()) {
            const DiskIsometry iso = isometry_from(src);
            const PeelResult r = peel_parameter(iso.R);
            Json body = {{"reduced", to_json(r.reduced)}, {"c2", to_json(r.c2)}, {"residual", r.residual}};
            bool ok = r.residual < peel_tol;
            if (!src.zeta.empty() && src.in.empty() && src.n >= 2) {
                const Complex zeta = parse_complex(src.zeta);
                const double d = coeff_distance(r.reduced, family_closed_form(zeta, src.n - 1));
                body["family_distance"] = d;
                body["parameter_distance"] = std::abs(r.c2 - zeta);
            }
            body["passed"] = ok;
            emit(body, out_path, out);
            return ok ? kOk : kVerificationFailed;
        }
        if (family->parsed()) {
            if (src.zeta.empty()) throw std::invalid_argument("family needs --zeta");
            const Complex zeta = parse_complex(src.zeta);
            const DiskIsometry iso = family_map(zeta, src.n);
            const double closed = coeff_distance(iso.R, family_closed_form(zeta, src.n));
            Json body = {{"profile", to_json(closed_form_ramification(zeta, src.n))},
                         {"R", to_json(iso.R)},
                         {"degree", iso.R.degree()},
                         {"closed_form_distance", closed}};
            bool ok = closed < 1e-12;
            if (action == "verify") {
                const ResidueReport rep = verify_grid(iso, disk_grid(grid, 0.95), Exec::Parallel);
                body["residuals"] = to_json(rep);
                body["max_residual"] = rep.max_residual();
                body["tolerance"] = tol;
                ok = ok && rep.max_residual() < tol;
            }
            body["passed"] = ok;
            emit(body, out_path, out);
            return ok ? kOk : kVerificationFailed;
        }
        if (extend->parsed()) {
            const ExtensionReport r = boundary_extension_check(parse_complex(src.zeta), ext);
            emit({{"extension", to_json(r)}}, out_path, out);
            return r.passed() ? kOk : kVerificationFailed;
        }
        if (embed_cmd->parsed()) {
            const Complex w = parse_complex(w_text);
            const std::vector<Complex> z = parse_list(z_text);
            const DomainSpec spec = domain_from(domain, p, q, m, dim);
            DomainPoint pt;
            if (spec.kind == DomainKind::III) {
                if (static_cast<int>(z.size()) != m - 1) throw ShapeMismatch("type III takes m - 1 coordinates");
                Matrix zz = Matrix::Zero(m - 1, m - 1);
                for (int i = 0; i < m - 1; ++i) zz(i, i) = z[i];
                pt = block_join(w, make_point(DomainSpec::type_III(m - 1), zz));
            } else {
                pt = embed(spec, w, z);
            }
            const Membership mem = membership(pt);
            Json body = {{"point", to_json(pt)}, {"member", mem.member}, {"margin", mem.margin}};
            if (mem.member) body["generic_norm"] = generic_norm(pt);
            bool ok = true;
            if (!src.zeta.empty()) {
                const DiskIsometry iso = family_map(parse_complex(src.zeta), src.n);
                const double r = composite_residual(spec, spec.kind == DomainKind::IV ? nullptr : &iso,
                                                    disk_grid(grid, 0.95), Exec::Parallel);
                body["composite_residual"] = r;
                ok = r < tol;
            }
            body["passed"] = ok;
            emit(body, out_path, out);
            return ok ? kOk : kVerificationFailed;
        }
        if (rigidity->parsed()) {
            Json body;
            if (!src.zeta.empty()) {
                const IntakeReport rep = rationality_intake(family_map(parse_complex(src.zeta), src.n));
                body["intake"] = to_json(rep);
                body["status"] = rep.rational ? "in_hypothesis" : "outside_hypothesis";
                emit(body, out_path, out);
                return kOk;
            }
            std::vector<WeightedCandidate> cands;
            if (!candidate_path.empty()) cands.push_back(candidate_from_json(read_json(candidate_path)));
            if (corpus) {
                auto c = rigidity_corpus(src.seed == 0 ? 1 : src.seed);
                cands.insert(cands.end(), c.begin(), c.end());
            }
            if (cands.empty()) throw std::invalid_argument("give --in, --corpus or --zeta");
            Json audits = Json::array();
            int status = kOk;
            for (const WeightedCandidate& c : cands) {
                try {
                    audits.push_back({{"status", "passed"}, {"audit", to_json(rigidity_audit(c))}});
                } catch (const NotAnIsometry& e) {
                    audits.push_back({{"status", "not_an_isometry"}, {"message", e.what()}});
                    status = kVerificationFailed;
                } catch (const ConclusionViolated& e) {
                    audits.push_back({{"status", "conclusion_violated"}, {"message", e.what()}});
                    status = kVerificationFailed;
                }
            }
            body["audits"] = audits;
            emit(body, out_path, out);
            return status;
        }
        if (sweep_cmd->parsed()) {
            const auto zetas = sweep_parameters(count, sweep_seed);
            const auto rows = sweep(zetas, src.n, disk_grid(samples, 0.95), Exec::Parallel);
            if (out_path.empty()) {
                write_sweep_csv(out, rows);
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::invalid_argument("cannot write " + out_path);
                write_sweep_csv(f, rows);
            }
            return kOk;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const Json::exception& e) {
        err << "bad JSON: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace holoiso::cli
