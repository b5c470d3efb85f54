#include <e1dirac/conformal.hpp>

#include <algorithm>

namespace e1dirac {

namespace {

E1Section combine(const SubBundle& l, const std::vector<Scalar>& coeff) {
    E1Section acc = E1Section::zero(l.n);
    for (std::size_t i = 0; i < l.generators.size(); ++i)
        acc = acc + l.generators[i] * coeff[i];
    return acc;
}

bool contains_scalar(const std::vector<Scalar>& v, const Scalar& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

} // namespace

std::optional<ConformalFactor> find_conformal_section(const SubBundle& l, const Scalar& a) {
    if (a.vars() != l.n) throw chart_mismatch("conformal factor across charts");
    if (a.is_zero()) throw malformed_scalar("conformal factor must be nonvanishing");
    int n = l.n;
    int m = static_cast<int>(l.generators.size());

    LinearSystem sys;
    Form da = differential(a);
    for (int r = 0; r < n; ++r) sys.rhs.push_back(da.coefficient(IndexMask(1) << r));
    sys.rhs.push_back(Scalar(n)); // the (., 0) slot
    sys.matrix.assign(n + 1, std::vector<Scalar>(m, Scalar(n)));
    for (int j = 0; j < m; ++j) {
        const E1Section& gen = l.generators[j];
        for (int r = 0; r < n; ++r) sys.matrix[r][j] = gen.alpha.coefficient(IndexMask(1) << r);
        sys.matrix[n][j] = gen.g;
    }
    auto sol = solve_linear(sys);
    if (!sol) return std::nullopt;

    E1Section s = combine(l, sol->particular);
    return ConformalFactor{a, s.x, s.f, s, std::move(sol->particular),
                           std::move(sol->denominators)};
}

ConformalFactor identity_factor(int dim) {
    Scalar one = Scalar::constant(dim, 1);
    E1Section zero = E1Section::zero(dim);
    return ConformalFactor{one, zero.x, zero.f, zero, {}, {}};
}

E1Section transform_section(const ConformalFactor& c, const E1Section& e) {
    // (X, phi) + (alpha, f)  ->  (a X + f Y_a, a phi - i_{Y_a} alpha) + (alpha, f)
    MultiVector x = e.x * c.a + c.y_a * e.g;
    Scalar phi = c.a * e.f - interior_product(c.y_a, e.alpha).coefficient(0);
    return E1Section(std::move(x), std::move(phi), e.alpha, e.g);
}

SubBundle conformal_transform(const SubBundle& l, const ConformalFactor& c) {
    if (c.a.vars() != l.n) throw chart_mismatch("conformal transform across charts");
    std::vector<E1Section> gens;
    gens.reserve(l.generators.size());
    for (const auto& g : l.generators) gens.push_back(transform_section(c, g));
    std::vector<Scalar> assume = l.assumptions;
    if (!c.a.num().is_constant() && !contains_scalar(assume, c.a)) assume.push_back(c.a);
    return SubBundle(l.n, std::move(gens), std::move(assume));
}

ConformalBracketResult conformal_bracket(const SubBundle& l, const ConformalFactor& c,
                                         const Scalar& f, const Scalar& g) {
    Scalar af = c.a * f, ag = c.a * g;
    auto waf = find_admissible(l, af);
    auto wag = find_admissible(l, ag);
    if (!waf || !wag)
        throw error("conformal_bracket: a*f or a*g is not admissible in L");
    Scalar via_scaling = -pair_minus(waf->e_f, wag->e_f) / c.a;

    SubBundle la = conformal_transform(l, c);
    auto wf = find_admissible(la, f);
    auto wg = find_admissible(la, g);
    if (!wf || !wg)
        throw error("conformal_bracket: f or g is not admissible in L^a");
    Scalar via_transform = -pair_minus(wf->e_f, wg->e_f);

    return ConformalBracketResult{std::move(via_scaling), std::move(via_transform)};
}

EfSpanCertificate ef_form_spanning(const SubBundle& l, std::vector<Scalar> candidates) {
    int n = l.n;
    if (candidates.empty()) {
        candidates.push_back(Scalar::constant(n, 1));
        for (int i = 0; i < n; ++i) candidates.push_back(Scalar::variable(n, i));
        for (const auto& h : l.assumptions) {
            candidates.push_back(h);
            for (int i = 0; i < n; ++i) candidates.push_back(h * Scalar::variable(n, i));
        }
    }

    EfSpanCertificate cert;
    // f = 0 directions: the homogeneous space of the admissibility system
    auto w0 = find_admissible(l, Scalar(n));
    if (w0)
        for (const auto& k : w0->homogeneous_freedom)
            if (!k.is_zero()) cert.ef_generators.push_back(k);

    auto rank_of = [](const std::vector<E1Section>& gens) {
        ScalarMatrix rows;
        rows.reserve(gens.size());
        for (const auto& g : gens) rows.push_back(section_components(g));
        return rows.empty() ? 0 : generic_rank(rows);
    };

    int rank = rank_of(cert.ef_generators);
    for (const auto& f : candidates) {
        if (rank == n + 1) break;
        auto w = find_admissible(l, f);
        if (!w) continue;
        auto trial = cert.ef_generators;
        trial.push_back(w->e_f);
        int r = rank_of(trial);
        if (r > rank) {
            rank = r;
            cert.ef_generators = std::move(trial);
            cert.functions.push_back(f);
        }
    }
    if (rank == n + 1) {
        SubBundle candidate(n, cert.ef_generators, l.assumptions);
        cert.spanned = same_module(candidate, l);
    }
    return cert;
}

EquivalenceReport check_equivalence_axioms(const SubBundle& l, const ConformalFactor& c,
                                           const Scalar& b) {
    EquivalenceReport rep;
    int n = l.n;

    rep.reflexive = same_module(conformal_transform(l, identity_factor(n)), l);

    SubBundle la = conformal_transform(l, c);
    // (a Y_a, a theta_a) + (da, 0) must be a section of L^a ...
    E1Section sym(c.y_a * c.a, c.theta_a * c.a, differential(c.a), Scalar(n));
    bool sym_member = contains_section(la, sym).has_value();
    // ... and the 1/a-transform of L^a must return L.
    Scalar ainv = c.a.inverse();
    auto cinv = find_conformal_section(la, ainv);
    rep.symmetric = sym_member && cinv && same_module(conformal_transform(la, *cinv), l);

    auto cb = find_conformal_section(la, b);
    auto cab = find_conformal_section(l, c.a * b);
    rep.transitive = cb && cab &&
                     same_module(conformal_transform(la, *cb),
                                 conformal_transform(l, *cab));
    return rep;
}

} // namespace e1dirac
