#include <e1dirac/structures.hpp>

#include <bit>

namespace e1dirac {

namespace {

Scalar contract1(const MultiVector& x, const Form& a) {
    return interior_product(x, a).coefficient(0);
}

void check_pair_charts(const MultiVector& a, const MultiVector& b) {
    if (a.dim() != b.dim()) throw chart_mismatch("pair components on different charts");
}

// All strictly increasing index subsets of {0..n-1} of size k, as masks.
std::vector<IndexMask> basis_masks(int n, int k) {
    std::vector<IndexMask> out;
    for (IndexMask m = 0; m < (IndexMask(1) << n); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

} // namespace

bool check_poisson(const MultiVector& pi) {
    if (pi.degree() != 2) throw degree_error("check_poisson expects a bivector");
    return schouten_bracket(pi, pi).is_zero();
}

bool check_jacobi(const JacobiPair& j) {
    check_pair_charts(j.pi, j.e);
    if (j.pi.degree() != 2 || j.e.degree() != 1)
        throw degree_error("check_jacobi expects a bivector and a vector field");
    if (!schouten_bracket(j.e, j.pi).is_zero()) return false;
    MultiVector rhs = wedge(j.e, j.pi) * Scalar::constant(j.pi.dim(), 2);
    return schouten_bracket(j.pi, j.pi) == rhs;
}

bool check_homogeneous(const HomogeneousPair& h) {
    check_pair_charts(h.pi, h.z);
    if (h.pi.degree() != 2 || h.z.degree() != 1)
        throw degree_error("check_homogeneous expects a bivector and a vector field");
    if (!schouten_bracket(h.pi, h.pi).is_zero()) return false;
    return schouten_bracket(h.z, h.pi) == -h.pi;
}

bool check_lcps(const LcpsPair& l) {
    if (l.omega.degree() != 2 || l.eta.degree() != 1)
        throw degree_error("check_lcps expects a 2-form and a 1-form");
    if (l.omega.dim() != l.eta.dim()) throw chart_mismatch("lcps components on different charts");
    if (!exterior_derivative(l.eta).is_zero()) return false;
    return exterior_derivative(l.omega) == wedge(l.eta, l.omega);
}

bool check_conambu(const Form& w) {
    int n = w.dim();
    int adeg = w.degree() - 1;
    if (adeg < 0) throw degree_error("check_conambu expects a form of degree >= 1");
    Form dw = exterior_derivative(w);
    for (IndexMask m : basis_masks(n, adeg)) {
        MultiVector a(n, adeg);
        a.add_term(m, Scalar::constant(n, 1));
        Form iaw = interior_product(a, w);
        if (!wedge(iaw, w).is_zero()) return false;
        if (!wedge(iaw, dw).is_zero()) return false;
    }
    return true;
}

Scalar nambu_bracket(const MultiVector& pi, const std::vector<Scalar>& fs) {
    std::vector<Form> dfs;
    dfs.reserve(fs.size());
    for (const auto& f : fs) dfs.push_back(differential(f));
    return multivector_eval(pi, dfs);
}

FiReport check_fundamental_identity(const MultiVector& pi,
                                    const std::vector<Scalar>& family) {
    int p = pi.degree();
    if (p < 2) throw degree_error("nambu order must be at least 2");
    if (static_cast<int>(family.size()) < 2 * p - 1)
        throw error("fundamental identity: test family needs at least 2p-1 functions");
    int m = static_cast<int>(family.size());

    // iterate over all ordered tuples of indices
    auto next_tuple = [m](std::vector<int>& t) -> bool {
        for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
            if (++t[i] < m) return true;
            t[i] = 0;
        }
        return false;
    };

    std::vector<int> fidx(p - 1, 0);
    do {
        std::vector<int> gidx(p, 0);
        do {
            std::vector<Scalar> gs;
            gs.reserve(p);
            for (int i : gidx) gs.push_back(family[i]);
            Scalar inner = nambu_bracket(pi, gs);

            std::vector<Scalar> outer;
            outer.reserve(p);
            for (int i : fidx) outer.push_back(family[i]);
            outer.push_back(inner);
            Scalar lhs = nambu_bracket(pi, outer);

            Scalar rhs(pi.dim());
            for (int k = 0; k < p; ++k) {
                std::vector<Scalar> innerk;
                innerk.reserve(p);
                for (int i : fidx) innerk.push_back(family[i]);
                innerk.push_back(gs[k]);
                Scalar bk = nambu_bracket(pi, innerk);
                std::vector<Scalar> outerk = gs;
                outerk[k] = bk;
                rhs += nambu_bracket(pi, outerk);
            }
            if (lhs != rhs) return FiReport{false, fidx, gidx};
        } while (next_tuple(gidx));
    } while (next_tuple(fidx));
    return FiReport{};
}

Form nambu_to_form(const MultiVector& pi, const Form& volume) {
    if (volume.degree() != volume.dim())
        throw degree_error("nambu_to_form expects a top-degree form");
    if (volume.is_zero()) throw degree_error("nambu_to_form: degenerate volume form");
    return interior_product(pi, volume);
}

OneJet ks_bracket(const JacobiPair& j, const OneJet& u, const OneJet& v) {
    check_pair_charts(j.pi, j.e);
    int n = j.pi.dim();
    if (u.alpha.dim() != n || v.alpha.dim() != n)
        throw chart_mismatch("1-jets on a different chart");

    MultiVector pia = bivector_apply(j.pi, u.alpha);
    MultiVector pib = bivector_apply(j.pi, v.alpha);
    Scalar piab = contract1(pia, v.alpha); // pi(alpha, beta) = i_{pi alpha} beta

    Form first = lie_derivative(pia, v.alpha) - lie_derivative(pib, u.alpha) -
                 differential(piab) +
                 lie_derivative(j.e, v.alpha) * u.f - lie_derivative(j.e, u.alpha) * v.f -
                 interior_product(j.e, wedge(u.alpha, v.alpha));

    Scalar second = -piab + contract1(pia, differential(v.f)) -
                    contract1(pib, differential(u.f)) +
                    u.f * apply_vector(j.e, v.f) - v.f * apply_vector(j.e, u.f);

    return OneJet{first, second};
}

E1Section phi_iso(const JacobiPair& j, const OneJet& u) {
    check_pair_charts(j.pi, j.e);
    MultiVector x = bivector_apply(j.pi, u.alpha) + j.e * u.f;
    Scalar f = -contract1(j.e, u.alpha);
    return E1Section(std::move(x), std::move(f), u.alpha, u.f);
}

} // namespace e1dirac
