#include <e1dirac/tensor.hpp>

#include <bit>

namespace e1dirac {

namespace detail {

int popcount(IndexMask m) {
    return std::popcount(m);
}

int wedge_sign(IndexMask a, IndexMask b) {
    if (a & b) return 0;
    int inversions = 0;
    IndexMask bb = b;
    while (bb) {
        int i = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (i + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

int position_in(IndexMask s, int i) {
    return std::popcount(s & ((IndexMask(1) << i) - 1));
}

} // namespace detail

using detail::position_in;
using detail::wedge_sign;

Form exterior_derivative(const Form& w) {
    Form r(w.dim(), w.degree() + 1);
    for (const auto& [mask, c] : w.coefficients()) {
        for (int i = 0; i < w.dim(); ++i) {
            IndexMask bit = IndexMask(1) << i;
            if (mask & bit) continue;
            Scalar dc = c.derivative(i);
            if (dc.is_zero()) continue;
            int s = wedge_sign(bit, mask);
            r.add_term(mask | bit, s > 0 ? dc : -dc);
        }
    }
    return r;
}

Form differential(const Scalar& f) {
    Form r(f.vars(), 1);
    for (int i = 0; i < f.vars(); ++i)
        r.add_term(IndexMask(1) << i, f.derivative(i));
    return r;
}

Form interior_product(const MultiVector& a, const Form& w) {
    if (a.dim() != w.dim()) throw chart_mismatch("interior product across charts");
    if (a.degree() > w.degree())
        throw degree_error("interior product: multivector degree exceeds form degree");
    Form r(w.dim(), w.degree() - a.degree());
    for (const auto& [s, ca] : a.coefficients()) {
        for (const auto& [t, cw] : w.coefficients()) {
            if ((s & t) != s) continue;
            // contract the lowest index first
            int sign = 1;
            IndexMask remaining = t;
            IndexMask ss = s;
            while (ss) {
                int i = std::countr_zero(ss);
                ss &= ss - 1;
                if (position_in(remaining, i) & 1) sign = -sign;
                remaining &= ~(IndexMask(1) << i);
            }
            Scalar c = ca * cw;
            r.add_term(t & ~s, sign > 0 ? c : -c);
        }
    }
    return r;
}

MultiVector contract_form(const Form& alpha, const MultiVector& u) {
    if (alpha.dim() != u.dim()) throw chart_mismatch("contraction across charts");
    if (alpha.degree() != 1) throw degree_error("contract_form expects a 1-form");
    if (u.degree() < 1) throw degree_error("contract_form: multivector degree must be >= 1");
    MultiVector r(u.dim(), u.degree() - 1);
    for (const auto& [s, cu] : u.coefficients()) {
        IndexMask ss = s;
        while (ss) {
            int i = std::countr_zero(ss);
            ss &= ss - 1;
            Scalar ai = alpha.coefficient(IndexMask(1) << i);
            if (ai.is_zero()) continue;
            Scalar c = cu * ai;
            r.add_term(s & ~(IndexMask(1) << i), (position_in(s, i) & 1) ? -c : c);
        }
    }
    return r;
}

MultiVector bivector_apply(const MultiVector& pi, const Form& alpha) {
    if (pi.degree() != 2) throw degree_error("bivector_apply expects a bivector");
    return contract_form(alpha, pi);
}

Scalar multivector_eval(const MultiVector& u, const std::vector<Form>& alphas) {
    if (static_cast<int>(alphas.size()) != u.degree())
        throw degree_error("multivector_eval: argument count must equal the degree");
    int n = u.dim();
    Scalar out(n);
    int p = u.degree();
    for (const auto& [s, c] : u.coefficients()) {
        // det(alpha_i(e_{s_j}))
        std::vector<int> idx;
        IndexMask ss = s;
        while (ss) {
            idx.push_back(std::countr_zero(ss));
            ss &= ss - 1;
        }
        // Laplace expansion over permutations is fine at p <= 4; use
        // elimination-free recursive expansion.
        std::vector<std::vector<Scalar>> m(p, std::vector<Scalar>(p, Scalar(n)));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                m[i][j] = alphas[i].coefficient(IndexMask(1) << idx[j]);
        // determinant by expansion along the first row, recursively
        struct Det {
            static Scalar run(const std::vector<std::vector<Scalar>>& a,
                              std::vector<int> cols, int row, int n) {
                if (cols.empty()) return Scalar::constant(n, 1);
                Scalar acc(n);
                for (std::size_t k = 0; k < cols.size(); ++k) {
                    const Scalar& v = a[row][cols[k]];
                    if (v.is_zero()) continue;
                    std::vector<int> rest;
                    for (std::size_t t = 0; t < cols.size(); ++t)
                        if (t != k) rest.push_back(cols[t]);
                    Scalar sub = run(a, rest, row + 1, n);
                    Scalar term = v * sub;
                    acc += (k & 1) ? -term : term;
                }
                return acc;
            }
        };
        std::vector<int> cols(p);
        for (int j = 0; j < p; ++j) cols[j] = j;
        out += c * Det::run(m, cols, 0, n);
    }
    return out;
}

MultiVector lie_bracket(const MultiVector& x, const MultiVector& y) {
    if (x.dim() != y.dim()) throw chart_mismatch("lie bracket across charts");
    if (x.degree() != 1 || y.degree() != 1)
        throw degree_error("lie_bracket expects vector fields");
    int n = x.dim();
    MultiVector r(n, 1);
    for (int j = 0; j < n; ++j) {
        Scalar c(n);
        IndexMask bj = IndexMask(1) << j;
        for (int i = 0; i < n; ++i) {
            IndexMask bi = IndexMask(1) << i;
            c += x.coefficient(bi) * y.coefficient(bj).derivative(i);
            c -= y.coefficient(bi) * x.coefficient(bj).derivative(i);
        }
        r.add_term(bj, c);
    }
    return r;
}

Scalar apply_vector(const MultiVector& x, const Scalar& f) {
    if (x.degree() != 1) throw degree_error("apply_vector expects a vector field");
    Scalar out(x.dim());
    for (const auto& [m, c] : x.coefficients()) {
        int i = std::countr_zero(m);
        out += c * f.derivative(i);
    }
    return out;
}

Form lie_derivative(const MultiVector& x, const Form& w) {
    return exterior_derivative(interior_product(x, w)) +
           interior_product(x, exterior_derivative(w));
}

namespace {

// Right/left odd derivatives of a multivector: remove index i from each key,
// signed by moving xi_i to the right (resp. left) end of the monomial.
MultiVector xi_derivative(const MultiVector& u, int i, bool right) {
    MultiVector r(u.dim(), u.degree() - 1);
    IndexMask bit = IndexMask(1) << i;
    for (const auto& [s, c] : u.coefficients()) {
        if (!(s & bit)) continue;
        int pos = position_in(s, i);
        int moves = right ? (u.degree() - 1 - pos) : pos;
        r.add_term(s & ~bit, (moves & 1) ? -c : c);
    }
    return r;
}

MultiVector x_derivative(const MultiVector& u, int i) {
    MultiVector r(u.dim(), u.degree());
    for (const auto& [s, c] : u.coefficients()) r.add_term(s, c.derivative(i));
    return r;
}

} // namespace

MultiVector schouten_bracket(const MultiVector& u, const MultiVector& v) {
    if (u.dim() != v.dim()) throw chart_mismatch("schouten bracket across charts");
    int n = u.dim();
    int p = u.degree(), q = v.degree();
    int deg = p + q - 1;
    MultiVector r(n, deg < 0 ? 0 : deg);
    for (int i = 0; i < n; ++i) {
        if (p >= 1) {
            MultiVector du = xi_derivative(u, i, /*right=*/true);
            if (!du.is_zero()) r += wedge(du, x_derivative(v, i));
        }
        if (q >= 1) {
            MultiVector dv = xi_derivative(v, i, /*right=*/false);
            if (!dv.is_zero()) r -= wedge(x_derivative(u, i), dv);
        }
    }
    // Sign convention: the one under which a Jacobi pair obeys
    // [pi,pi] = 2 E ^ pi and the graph of P(alpha,g) closes under the
    // extended bracket. It differs from the odd-Poisson bracket by
    // (-1)^{(p-1)(q-1)}; both extend the Lie bracket and satisfy
    // [Z, pi] alpha = [Z, pi alpha] - pi(L_Z alpha).
    if (((p - 1) * (q - 1)) % 2 != 0) r = -r;
    return r;
}

} // namespace e1dirac
