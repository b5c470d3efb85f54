// Manifest-driven command line for the Dirac-structure engine.
//
// Exit codes: 0 = property holds / operation succeeded,
//             1 = property fails (obstruction certificates in the report),
//             2 = input or parse error.

#include <e1dirac/conformal.hpp>
#include <e1dirac/manifest.hpp>
#include <e1dirac/structures.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace e1dirac;

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Manifest load_manifest(const std::string& path) {
    return parse_manifest(read_file(path));
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path + "'");
    out << body;
}

void finish(Report& rep, Clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    rep.add("elapsed-ms", std::to_string(ms.count()));
    std::cout << rep.to_string();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void report_common(Report& rep, const Manifest& m) {
    rep.add("structure", kind_name(m.kind));
    rep.add("chart-dim", std::to_string(m.n()));
}

void report_dirac(Report& rep, const DiracVerdict& v, const Manifest& m) {
    rep.add("is-isotropic", bool_str(v.is_isotropic));
    rep.add("generic-rank", std::to_string(v.generic_rank));
    rep.add("is-maximal", bool_str(v.is_maximal));
    if (v.closure_checked) rep.add("graph-dirac", bool_str(v.is_dirac()));
    for (const auto& [ij, val] : v.isotropy_failures)
        rep.add("obstruction", "<g" + std::to_string(ij.first) + ",g" +
                                   std::to_string(ij.second) + ">+ = " + val.to_string(m.coords));
    for (const auto& t : v.closure_obstructions)
        rep.add("obstruction", "<[g" + std::to_string(t.i) + ",g" + std::to_string(t.j) +
                                   "],g" + std::to_string(t.k) +
                                   ">+ = " + t.value.to_string(m.coords));
    for (const auto& a : v.assumptions_used)
        rep.add("assumption-used", a.to_string(m.coords));
    for (const auto& c : v.caveats) rep.add("caveat", c);
}

// --- check ------------------------------------------------------------

int run_check(const std::string& path) {
    auto start = Clock::now();
    Manifest m = load_manifest(path);
    Report rep;
    report_common(rep, m);
    int n = m.n();
    bool holds = true;

    if (m.kind == StructureKind::nambu) {
        const MultiVector& pi = *m.pi;
        int p = pi.degree();
        rep.add("order", std::to_string(p));
        if (static_cast<int>(m.test_functions.size()) < 2 * p - 1)
            throw error("fundamental identity needs a test family of at least " +
                        std::to_string(2 * p - 1) + " functions (test-function lines)");
        FiReport fi = check_fundamental_identity(pi, m.test_functions);
        rep.add("fundamental-identity", fi.passed ? "passed on family" : "failed");
        if (!fi.passed) {
            std::string tuple = "f=(";
            for (std::size_t k = 0; k < fi.failing_fs.size(); ++k)
                tuple += (k ? "," : "") + std::to_string(fi.failing_fs[k]);
            tuple += ") g=(";
            for (std::size_t k = 0; k < fi.failing_gs.size(); ++k)
                tuple += (k ? "," : "") + std::to_string(fi.failing_gs[k]);
            tuple += ")";
            rep.add("obstruction", "fundamental identity fails on family indices " + tuple);
            holds = false;
        }
        if (m.volume) {
            Form omega_n(n, n);
            IndexMask full = (IndexMask(1) << n) - 1;
            omega_n.add_term(full, *m.volume);
            Form wf = nambu_to_form(pi, omega_n);
            rep.add("conambu-form", wf.to_string(m.coords));
            bool conambu = check_conambu(wf);
            rep.add("conambu", bool_str(conambu));
            holds = holds && conambu;
            if (n - p == 2) {
                Form eta(n, 1);
                for (int i = 0; i < n; ++i)
                    eta.add_term(IndexMask(1) << i, m.volume->derivative(i) / *m.volume);
                std::vector<Scalar> assume = m.assumptions;
                assume.push_back(*m.volume);
                DiracVerdict v = is_dirac(graph_of_lcps(wf, eta, assume));
                report_dirac(rep, v, m);
                holds = holds && v.is_dirac();
            }
        }
        rep.add("verdict", holds ? "pass" : "fail");
        finish(rep, start);
        return holds ? 0 : 1;
    }

    // tensor-side condition, when the kind has one
    switch (m.kind) {
        case StructureKind::two_form: {
            bool closed = m.omega ? exterior_derivative(*m.omega).is_zero() : true;
            rep.add("closed", bool_str(closed));
            if (!closed)
                rep.add("obstruction", "d omega = " +
                                           exterior_derivative(*m.omega).to_string(m.coords));
            holds = closed;
            break;
        }
        case StructureKind::bivector: {
            bool poisson = m.pi ? check_poisson(*m.pi) : true;
            rep.add("poisson", bool_str(poisson));
            if (!poisson)
                rep.add("obstruction", "[pi,pi]_s = " +
                                           schouten_bracket(*m.pi, *m.pi).to_string(m.coords));
            holds = poisson;
            break;
        }
        case StructureKind::jacobi: {
            MultiVector pi = m.pi ? *m.pi : MultiVector(n, 2);
            MultiVector e = m.e ? *m.e : MultiVector(n, 1);
            bool ok = check_jacobi(JacobiPair{pi, e});
            rep.add("jacobi", bool_str(ok));
            if (!ok) {
                MultiVector d1 = schouten_bracket(e, pi);
                MultiVector d2 = schouten_bracket(pi, pi) -
                                 wedge(e, pi) * Scalar::constant(n, 2);
                if (!d1.is_zero())
                    rep.add("obstruction", "[E,pi]_s = " + d1.to_string(m.coords));
                if (!d2.is_zero())
                    rep.add("obstruction",
                            "[pi,pi]_s - 2*E^pi = " + d2.to_string(m.coords));
            }
            holds = ok;
            break;
        }
        case StructureKind::homogeneous: {
            MultiVector pi = m.pi ? *m.pi : MultiVector(n, 2);
            MultiVector z = m.z ? *m.z : MultiVector(n, 1);
            bool ok = check_homogeneous(HomogeneousPair{pi, z});
            rep.add("homogeneous", bool_str(ok));
            if (!ok) {
                MultiVector d1 = schouten_bracket(pi, pi);
                MultiVector d2 = schouten_bracket(z, pi) + pi;
                if (!d1.is_zero())
                    rep.add("obstruction", "[pi,pi]_s = " + d1.to_string(m.coords));
                if (!d2.is_zero())
                    rep.add("obstruction", "[Z,pi]_s + pi = " + d2.to_string(m.coords));
            }
            holds = ok;
            break;
        }
        case StructureKind::lcps: {
            Form omega = m.omega ? *m.omega : Form(n, 2);
            Form eta = m.eta ? *m.eta : Form(n, 1);
            bool ok = check_lcps(LcpsPair{omega, eta});
            rep.add("lcps", bool_str(ok));
            if (!ok) {
                Form d1 = exterior_derivative(eta);
                Form d2 = exterior_derivative(omega) - wedge(eta, omega);
                if (!d1.is_zero())
                    rep.add("obstruction", "d eta = " + d1.to_string(m.coords));
                if (!d2.is_zero())
                    rep.add("obstruction",
                            "d omega - eta^omega = " + d2.to_string(m.coords));
            }
            holds = ok;
            break;
        }
        case StructureKind::exact_pair: {
            Form omega = m.omega ? *m.omega : Form(n, 2);
            Form alpha = m.alpha ? *m.alpha : Form(n, 1);
            Form defect = omega - exterior_derivative(alpha);
            rep.add("exact", bool_str(defect.is_zero()));
            if (!defect.is_zero())
                rep.add("obstruction", "omega - d alpha = " + defect.to_string(m.coords));
            holds = defect.is_zero();
            break;
        }
        default:
            break; // distribution and subbundle: the graph verdict decides
    }

    DiracVerdict v = is_dirac(manifest_bundle(m));
    report_dirac(rep, v, m);
    if (m.kind == StructureKind::distribution || m.kind == StructureKind::subbundle)
        holds = v.is_dirac();
    else
        holds = holds && v.is_dirac();
    rep.add("verdict", holds ? "pass" : "fail");
    finish(rep, start);
    return holds ? 0 : 1;
}

// --- bracket ----------------------------------------------------------

int run_bracket(const std::string& path, int i, int j) {
    auto start = Clock::now();
    Manifest m = load_manifest(path);
    SubBundle l = manifest_bundle(m);
    int count = static_cast<int>(l.generators.size());
    if (i < 0 || j < 0 || i >= count || j >= count)
        throw error("generator index out of range (bundle has " + std::to_string(count) +
                    " generators)");
    Report rep;
    report_common(rep, m);
    E1Section b = extended_bracket(l.generators[i], l.generators[j]);
    rep.add("bracket", b.to_string(m.coords));
    auto member = contains_section(l, b);
    rep.add("in-span", bool_str(member.has_value()));
    rep.add("verdict", "ok");
    finish(rep, start);
    return 0;
}

// --- admissible / poisson-bracket --------------------------------------

int run_admissible(const std::string& path, const std::string& expr) {
    auto start = Clock::now();
    Manifest m = load_manifest(path);
    SubBundle l = manifest_bundle(m);
    Scalar f = parse_expression(expr, m.coords);
    Report rep;
    report_common(rep, m);
    rep.add("function", f.to_string(m.coords));
    auto w = find_admissible(l, f);
    if (!w) {
        rep.add("verdict", "not-admissible");
        finish(rep, start);
        return 1;
    }
    rep.add("x_f", w->x_f.to_string(m.coords));
    rep.add("phi_f", w->phi_f.to_string(m.coords));
    rep.add("freedom-rank", std::to_string(w->homogeneous_freedom.size()));
    for (const auto& d : w->denominators)
        rep.add("denominator", d.to_string(m.coords));
    rep.add("verdict", "admissible");
    finish(rep, start);
    return 0;
}

int run_poisson_bracket(const std::string& path, const std::string& fexpr,
                        const std::string& gexpr) {
    auto start = Clock::now();
    Manifest m = load_manifest(path);
    SubBundle l = manifest_bundle(m);
    Scalar f = parse_expression(fexpr, m.coords);
    Scalar g = parse_expression(gexpr, m.coords);
    Report rep;
    report_common(rep, m);
    auto wf = find_admissible(l, f);
    auto wg = find_admissible(l, g);
    if (!wf || !wg) {
        rep.add("verdict", "not-admissible");
        rep.add("offending", !wf ? fexpr : gexpr);
        finish(rep, start);
        return 1;
    }
    rep.add("bracket", (-pair_minus(wf->e_f, wg->e_f)).to_string(m.coords));
    rep.add("verdict", "ok");
    finish(rep, start);
    return 0;
}

// --- conformal ----------------------------------------------------------

int run_conformal(const std::string& path, const std::string& factor_expr,
                  const std::string& emit_path) {
    auto start = Clock::now();
    Manifest m = load_manifest(path);
    SubBundle l = manifest_bundle(m);
    Scalar a = parse_expression(factor_expr, m.coords);
    Report rep;
    report_common(rep, m);
    rep.add("factor", a.to_string(m.coords));
    auto c = find_conformal_section(l, a);
    if (!c) {
        rep.add("verdict", "no-conformal-section");
        finish(rep, start);
        return 1;
    }
    rep.add("y_a", c->y_a.to_string(m.coords));
    rep.add("theta_a", c->theta_a.to_string(m.coords));
    for (const auto& d : c->denominators) rep.add("denominator", d.to_string(m.coords));
    SubBundle la = conformal_transform(l, *c);

    EfSpanCertificate cert = ef_form_spanning(l);
    rep.add("ef-spanned", bool_str(cert.spanned));
    bool holds;
    if (cert.spanned) {
        DiracVerdict v = is_dirac(la);
        report_dirac(rep, v, m);
        holds = v.is_dirac();
    } else {
        // only the maximal-isotropy conclusion is claimed in this case
        DiracVerdict v = is_maximal_isotropic(la);
        report_dirac(rep, v, m);
        rep.add("note", "generators not certified in e_f form; only maximal isotropy is claimed");
        holds = v.is_isotropic && v.is_maximal;
    }
    if (!emit_path.empty()) {
        write_file(emit_path, serialize_manifest(manifest_from_bundle(la, m.coords)));
        rep.add("emitted", emit_path);
    }
    rep.add("verdict", holds ? "pass" : "fail");
    finish(rep, start);
    return holds ? 0 : 1;
}

// --- lift / recover -----------------------------------------------------

int run_lift(const std::string& path, const std::string& emit_path) {
    auto start = Clock::now();
    Manifest m = load_manifest(path);
    if (m.kind != StructureKind::two_form && m.kind != StructureKind::bivector &&
        m.kind != StructureKind::distribution)
        throw error("lift applies to two-form, bivector, and distribution manifests");
    SubBundle l = manifest_bundle(m);
    Report rep;
    report_common(rep, m);
    for (std::size_t i = 0; i < l.generators.size(); ++i)
        rep.add("generator." + std::to_string(i), l.generators[i].to_string(m.coords));
    if (!emit_path.empty()) {
        write_file(emit_path, serialize_manifest(manifest_from_bundle(l, m.coords)));
        rep.add("emitted", emit_path);
    }
    rep.add("verdict", "ok");
    finish(rep, start);
    return 0;
}

int run_recover(const std::string& path) {
    auto start = Clock::now();
    Manifest m = load_manifest(path);
    SubBundle l = manifest_bundle(m);
    Report rep;
    report_common(rep, m);
    RecoverFailure why;
    auto rec = recover_jacobi(l, &why);
    if (!rec) {
        rep.add("verdict", "not-admissible");
        rep.add("offending", why.offending);
        finish(rep, start);
        return 1;
    }
    rep.add("pi", rec->pair.pi.to_string(m.coords));
    rep.add("e", rec->pair.e.to_string(m.coords));
    rep.add("verified", bool_str(rec->verified));
    rep.add("verdict", rec->verified ? "pass" : "fail");
    finish(rep, start);
    return rec->verified ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dirac-structure engine on coordinate charts"};
    app.require_subcommand(1);

    std::string path, expr_f, expr_g, factor, emit;
    int gi = 0, gj = 0;

    auto* check = app.add_subcommand("check", "decide the structure condition of a manifest");
    check->add_option("manifest", path)->required();

    auto* bracket = app.add_subcommand("bracket", "extended bracket of two generators");
    bracket->add_option("manifest", path)->required();
    bracket->add_option("--i", gi, "first generator index")->required();
    bracket->add_option("--j", gj, "second generator index")->required();

    auto* adm = app.add_subcommand("admissible", "find an admissibility witness");
    adm->add_option("manifest", path)->required();
    adm->add_option("--function", expr_f, "the function to test")->required();

    auto* pb = app.add_subcommand("poisson-bracket", "bracket of two admissible functions");
    pb->add_option("manifest", path)->required();
    pb->add_option("-f", expr_f)->required();
    pb->add_option("-g", expr_g)->required();

    auto* conf = app.add_subcommand("conformal", "a-conformal transform of the structure");
    conf->add_option("manifest", path)->required();
    conf->add_option("--factor", factor, "nonvanishing factor a")->required();
    conf->add_option("--emit", emit, "write the transformed sub-bundle manifest here");

    auto* lift = app.add_subcommand("lift", "lift a TM(+)T*M structure to the 1-jet bundle");
    lift->add_option("manifest", path)->required();
    lift->add_option("--emit", emit, "write the lifted sub-bundle manifest here");

    auto* rec = app.add_subcommand("recover-jacobi", "rebuild (pi, E) from a Dirac structure");
    rec->add_option("manifest", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(path);
        if (*bracket) return run_bracket(path, gi, gj);
        if (*adm) return run_admissible(path, expr_f);
        if (*pb) return run_poisson_bracket(path, expr_f, expr_g);
        if (*conf) return run_conformal(path, factor, emit);
        if (*lift) return run_lift(path, emit);
        if (*rec) return run_recover(path);
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
