#include <e1dirac/dirac.hpp>

namespace e1dirac {

SubBundle::SubBundle(int dim, std::vector<E1Section> gens, std::vector<Scalar> assume)
    : n(dim), generators(std::move(gens)), assumptions(std::move(assume)) {
    if (generators.empty()) throw error("sub-bundle needs at least one generator");
    for (const auto& g : generators)
        if (g.dim() != n) throw chart_mismatch("generator on a different chart");
}

std::vector<Scalar> section_components(const E1Section& e) {
    int n = e.dim();
    std::vector<Scalar> out;
    out.reserve(2 * n + 2);
    for (int i = 0; i < n; ++i) out.push_back(e.x.coefficient(IndexMask(1) << i));
    out.push_back(e.f);
    for (int i = 0; i < n; ++i) out.push_back(e.alpha.coefficient(IndexMask(1) << i));
    out.push_back(e.g);
    return out;
}

DiracVerdict is_maximal_isotropic(const SubBundle& l) {
    DiracVerdict v;
    v.assumptions_used = l.assumptions;
    v.is_isotropic = true;
    int m = static_cast<int>(l.generators.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Scalar p = pair_plus(l.generators[i], l.generators[j]);
            if (!p.is_zero()) {
                v.is_isotropic = false;
                v.isotropy_failures.push_back({{i, j}, p});
            }
        }
    }
    ScalarMatrix rows;
    rows.reserve(m);
    for (const auto& g : l.generators) rows.push_back(section_components(g));
    v.generic_rank = generic_rank(rows);
    v.is_maximal = (v.generic_rank == l.n + 1);
    v.caveats.push_back("rank computed at a generic chart point; it may drop on a measure-zero locus");
    return v;
}

DiracVerdict is_dirac(const SubBundle& l) {
    DiracVerdict v = is_maximal_isotropic(l);
    v.closure_checked = true;
    int m = static_cast<int>(l.generators.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            E1Section b = extended_bracket(l.generators[i], l.generators[j]);
            for (int k = 0; k < m; ++k) {
                Scalar t = pair_plus(b, l.generators[k]);
                if (!t.is_zero()) v.closure_obstructions.push_back({i, j, k, t});
            }
        }
    }
    return v;
}

std::optional<MembershipWitness> contains_section(const SubBundle& l, const E1Section& e) {
    if (e.dim() != l.n) throw chart_mismatch("membership across charts");
    int m = static_cast<int>(l.generators.size());
    LinearSystem sys;
    sys.rhs = section_components(e);
    int rows = static_cast<int>(sys.rhs.size());
    sys.matrix.assign(rows, std::vector<Scalar>(m, Scalar(l.n)));
    for (int j = 0; j < m; ++j) {
        auto col = section_components(l.generators[j]);
        for (int i = 0; i < rows; ++i) sys.matrix[i][j] = col[i];
    }
    auto sol = solve_linear(sys);
    if (!sol) return std::nullopt;
    return MembershipWitness{std::move(sol->particular), std::move(sol->denominators)};
}

bool same_module(const SubBundle& a, const SubBundle& b) {
    for (const auto& g : a.generators)
        if (!contains_section(b, g)) return false;
    for (const auto& g : b.generators)
        if (!contains_section(a, g)) return false;
    return true;
}

namespace {

MultiVector basis_vector(int n, int i) {
    MultiVector v(n, 1);
    v.add_term(IndexMask(1) << i, Scalar::constant(n, 1));
    return v;
}

Form basis_form(int n, int i) {
    Form a(n, 1);
    a.add_term(IndexMask(1) << i, Scalar::constant(n, 1));
    return a;
}

Scalar contract1(const MultiVector& x, const Form& a) {
    return interior_product(x, a).coefficient(0);
}

} // namespace

SubBundle lift_to_e1(const std::vector<CourantSection>& gens, int dim,
                     std::vector<Scalar> assume) {
    std::vector<E1Section> out;
    out.reserve(gens.size() + 1);
    for (const auto& s : gens) out.push_back(s.lift());
    // the extra direction (0,0)+(0,1)
    out.emplace_back(MultiVector(dim, 1), Scalar(dim), Form(dim, 1), Scalar::constant(dim, 1));
    return SubBundle(dim, std::move(out), std::move(assume));
}

SubBundle graph_of_two_form(const Form& omega, std::vector<Scalar> assume) {
    if (omega.degree() != 2) throw degree_error("graph_of_two_form expects a 2-form");
    int n = omega.dim();
    std::vector<CourantSection> gens;
    gens.reserve(n);
    for (int i = 0; i < n; ++i)
        gens.emplace_back(basis_vector(n, i), interior_product(basis_vector(n, i), omega));
    return lift_to_e1(gens, n, std::move(assume));
}

SubBundle graph_of_bivector(const MultiVector& pi, std::vector<Scalar> assume) {
    if (pi.degree() != 2) throw degree_error("graph_of_bivector expects a bivector");
    int n = pi.dim();
    std::vector<CourantSection> gens;
    gens.reserve(n);
    for (int i = 0; i < n; ++i)
        gens.emplace_back(bivector_apply(pi, basis_form(n, i)), basis_form(n, i));
    return lift_to_e1(gens, n, std::move(assume));
}

SubBundle graph_of_distribution(const std::vector<MultiVector>& fields,
                                std::vector<Scalar> assume) {
    if (fields.empty()) throw error("distribution needs at least one spanning field");
    int n = fields[0].dim();
    // annihilator: nullspace of the coefficient matrix of the fields
    LinearSystem sys;
    sys.matrix.reserve(fields.size());
    for (const auto& f : fields) {
        if (f.degree() != 1) throw degree_error("distribution fields must be vector fields");
        std::vector<Scalar> row;
        row.reserve(n);
        for (int i = 0; i < n; ++i) row.push_back(f.coefficient(IndexMask(1) << i));
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(Scalar(n));
    }
    auto sol = solve_linear(sys); // homogeneous: always consistent
    std::vector<CourantSection> gens;
    for (const auto& f : fields) gens.emplace_back(f, Form(n, 1));
    for (const auto& k : sol->kernel) {
        Form xi(n, 1);
        for (int i = 0; i < n; ++i) xi.add_term(IndexMask(1) << i, k[i]);
        gens.emplace_back(MultiVector(n, 1), xi);
    }
    return lift_to_e1(gens, n, std::move(assume));
}

SubBundle graph_of_jacobi(const MultiVector& pi, const MultiVector& e,
                          std::vector<Scalar> assume) {
    if (pi.degree() != 2 || e.degree() != 1)
        throw degree_error("graph_of_jacobi expects a bivector and a vector field");
    if (pi.dim() != e.dim()) throw chart_mismatch("jacobi pair components on different charts");
    int n = pi.dim();
    std::vector<E1Section> gens;
    gens.reserve(n + 1);
    for (int i = 0; i < n; ++i) {
        Form dxi = basis_form(n, i);
        gens.emplace_back(bivector_apply(pi, dxi), -contract1(e, dxi), dxi, Scalar(n));
    }
    gens.emplace_back(e, Scalar(n), Form(n, 1), Scalar::constant(n, 1));
    return SubBundle(n, std::move(gens), std::move(assume));
}

SubBundle graph_of_lcps(const Form& omega, const Form& eta, std::vector<Scalar> assume) {
    if (omega.degree() != 2 || eta.degree() != 1)
        throw degree_error("graph_of_lcps expects a 2-form and a 1-form");
    if (omega.dim() != eta.dim()) throw chart_mismatch("lcps pair components on different charts");
    int n = omega.dim();
    std::vector<E1Section> gens;
    gens.reserve(n + 1);
    for (int i = 0; i < n; ++i) {
        MultiVector di = basis_vector(n, i);
        gens.emplace_back(di, -contract1(di, eta), interior_product(di, omega), Scalar(n));
    }
    gens.emplace_back(MultiVector(n, 1), Scalar(n), eta, Scalar::constant(n, 1));
    return SubBundle(n, std::move(gens), std::move(assume));
}

SubBundle graph_of_homogeneous(const MultiVector& pi, const MultiVector& z,
                               std::vector<Scalar> assume) {
    if (pi.degree() != 2 || z.degree() != 1)
        throw degree_error("graph_of_homogeneous expects a bivector and a vector field");
    if (pi.dim() != z.dim()) throw chart_mismatch("homogeneous pair components on different charts");
    int n = pi.dim();
    std::vector<E1Section> gens;
    gens.reserve(n + 1);
    for (int i = 0; i < n; ++i) {
        Form dxi = basis_form(n, i);
        gens.emplace_back(bivector_apply(pi, dxi), Scalar(n), dxi, contract1(z, dxi));
    }
    gens.emplace_back(z, Scalar::constant(n, -1), Form(n, 1), Scalar(n));
    return SubBundle(n, std::move(gens), std::move(assume));
}

SubBundle graph_of_exact_pair(const Form& omega, const Form& alpha,
                              std::vector<Scalar> assume) {
    if (omega.degree() != 2 || alpha.degree() != 1)
        throw degree_error("graph_of_exact_pair expects a 2-form and a 1-form");
    if (omega.dim() != alpha.dim()) throw chart_mismatch("pair components on different charts");
    int n = omega.dim();
    std::vector<E1Section> gens;
    gens.reserve(n + 1);
    for (int i = 0; i < n; ++i) {
        MultiVector di = basis_vector(n, i);
        gens.emplace_back(di, Scalar(n), interior_product(di, omega), -contract1(di, alpha));
    }
    gens.emplace_back(MultiVector(n, 1), Scalar::constant(n, 1), alpha, Scalar(n));
    return SubBundle(n, std::move(gens), std::move(assume));
}

} // namespace e1dirac
