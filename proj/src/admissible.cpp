#include <e1dirac/admissible.hpp>

namespace e1dirac {

namespace {

E1Section combine(const SubBundle& l, const std::vector<Scalar>& coeff) {
    E1Section acc = E1Section::zero(l.n);
    for (std::size_t i = 0; i < l.generators.size(); ++i)
        acc = acc + l.generators[i] * coeff[i];
    return acc;
}

} // namespace

std::optional<AdmissibleWitness> find_admissible(const SubBundle& l, const Scalar& f) {
    if (f.vars() != l.n) throw chart_mismatch("admissibility across charts");
    int n = l.n;
    int m = static_cast<int>(l.generators.size());

    // Solve only the (alpha, g)-components: sum c_i g_i = (., .) + (df, f).
    LinearSystem sys;
    Form df = differential(f);
    for (int r = 0; r < n; ++r) sys.rhs.push_back(df.coefficient(IndexMask(1) << r));
    sys.rhs.push_back(f);
    sys.matrix.assign(n + 1, std::vector<Scalar>(m, Scalar(n)));
    for (int j = 0; j < m; ++j) {
        const E1Section& gen = l.generators[j];
        for (int r = 0; r < n; ++r) sys.matrix[r][j] = gen.alpha.coefficient(IndexMask(1) << r);
        sys.matrix[n][j] = gen.g;
    }
    auto sol = solve_linear(sys);
    if (!sol) return std::nullopt;

    AdmissibleWitness w{f,
                        MultiVector(n, 1),
                        Scalar(n),
                        E1Section::zero(n),
                        std::move(sol->particular),
                        {},
                        std::move(sol->denominators)};
    E1Section e = combine(l, w.coefficients);
    // By construction e = (X_f, phi_f) + (df, f).
    w.x_f = e.x;
    w.phi_f = e.f;
    w.e_f = std::move(e);
    for (const auto& k : sol->kernel) w.homogeneous_freedom.push_back(combine(l, k));
    return w;
}

Scalar admissible_bracket(const SubBundle& l, const Scalar& f, const Scalar& g) {
    auto wf = find_admissible(l, f);
    if (!wf) throw error("admissible_bracket: first function is not admissible");
    auto wg = find_admissible(l, g);
    if (!wg) throw error("admissible_bracket: second function is not admissible");
    return -pair_minus(wf->e_f, wg->e_f);
}

LeibnizCheck leibniz_defect(const SubBundle& l, const Scalar& f, const Scalar& g,
                            const Scalar& h) {
    auto wf = find_admissible(l, f);
    if (!wf) throw error("leibniz_defect: f is not admissible");
    Scalar gh = g * h;
    Scalar lhs = admissible_bracket(l, f, gh);
    Scalar rhs = g * admissible_bracket(l, f, h) + admissible_bracket(l, f, g) * h -
                 gh * wf->phi_f;
    return LeibnizCheck{lhs == rhs, lhs, rhs};
}

std::optional<RecoveredJacobi> recover_jacobi(const SubBundle& l, RecoverFailure* failure) {
    int n = l.n;
    auto w1 = find_admissible(l, Scalar::constant(n, 1));
    if (!w1) {
        if (failure) failure->offending = "1";
        return std::nullopt;
    }
    // isotropy forces phi_1 = 0, so (E, 0) + (0, 1) is the witness
    MultiVector e = w1->x_f;

    std::vector<AdmissibleWitness> ws;
    ws.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto wi = find_admissible(l, Scalar::variable(n, i));
        if (!wi) {
            if (failure) failure->offending = "coordinate " + std::to_string(i);
            return std::nullopt;
        }
        ws.push_back(std::move(*wi));
    }

    // {x_i, x_j} = pi(dx_i, dx_j) + x_i E.x_j - x_j E.x_i, so strip the E part
    MultiVector pi(n, 2);
    for (int i = 0; i < n; ++i) {
        Scalar xi = Scalar::variable(n, i);
        for (int j = i + 1; j < n; ++j) {
            Scalar xj = Scalar::variable(n, j);
            Scalar bracket = -pair_minus(ws[i].e_f, ws[j].e_f);
            pi.add_term((IndexMask(1) << i) | (IndexMask(1) << j),
                        bracket - xi * apply_vector(e, xj) + xj * apply_vector(e, xi));
        }
    }

    RecoveredJacobi out{JacobiPair{pi, e}, false};
    out.verified = check_jacobi(out.pair) &&
                   same_module(graph_of_jacobi(pi, e, l.assumptions), l);
    return out;
}

} // namespace e1dirac
