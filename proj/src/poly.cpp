#include <e1dirac/poly.hpp>

#include <algorithm>
#include <cassert>

namespace e1dirac {

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(int vars, const Rat& c) {
    Poly p(vars);
    if (c != 0) p.terms_.emplace(Monomial(vars, 0), c);
    return p;
}

Poly Poly::variable(int vars, int index) {
    if (index < 0 || index >= vars)
        throw degree_error("variable index out of range");
    Poly p(vars);
    Monomial m(vars, 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    // grlex: last term has maximal total degree
    const Monomial& m = terms_.rbegin()->first;
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
}

Rat Poly::leading_coefficient() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
}

Rat Poly::constant_term() const {
    auto it = terms_.find(Monomial(vars_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    assert(static_cast<int>(m.size()) == vars_);
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (vars_ != o.vars_) throw chart_mismatch("polynomial chart dimensions differ");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (vars_ != o.vars_) throw chart_mismatch("polynomial chart dimensions differ");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (vars_ != o.vars_) throw chart_mismatch("polynomial chart dimensions differ");
    Poly r(vars_);
    Monomial m(vars_, 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < vars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(vars_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

Poly Poly::derivative(int index) const {
    if (index < 0 || index >= vars_)
        throw degree_error("derivative index out of range");
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[index] == 0) continue;
        Monomial dm = m;
        dm[index] -= 1;
        r.add_term(dm, c * Rat(static_cast<long>(m[index])));
    }
    return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto name_of = [&](int i) -> std::string {
        if (i < static_cast<int>(names.size())) return names[i];
        return "x" + std::to_string(i);
    };
    std::string out;
    // descending grlex: leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rat c = it->second;
        bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rat a = abs(c);
        std::string mono;
        for (int i = 0; i < vars_; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += name_of(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact division and gcd.
// ---------------------------------------------------------------------------

namespace {

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Degree in one chosen variable.
int degree_in(const Poly& p, int v) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<int>(m[v]));
    return p.is_zero() ? -1 : d;
}

// Coefficient of x_v^k, as a polynomial in the remaining variables
// (represented on the same chart with the v-exponent zeroed).
Poly coeff_in(const Poly& p, int v, int k) {
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (static_cast<int>(m[v]) != k) continue;
        Monomial q = m;
        q[v] = 0;
        r.add_term(q, c);
    }
    return r;
}

Poly shift_in(const Poly& p, int v, int k) {
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial q = m;
        q[v] += k;
        r.add_term(q, c);
    }
    return r;
}

int highest_variable(const Poly& p) {
    int best = -1;
    for (const auto& [m, c] : p.terms())
        for (int i = p.vars() - 1; i > best; --i)
            if (m[i] > 0) { best = i; break; }
    return best;
}

// Clears denominators and integer content; result has coprime integer
// coefficients with positive leading coefficient.
Poly integer_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1);
    for (const auto& [m, c] : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class num_gcd(0);
    for (const auto& [m, c] : p.terms()) {
        mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd); // multiply by lcm/gcd
    factor.canonicalize();
    Poly r = p * factor;
    if (r.leading_coefficient() < 0) r = -r;
    return r;
}

Poly gcd_integer(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int v) {
    Poly c(p.vars());
    for (int k = 0; k <= degree_in(p, v); ++k) {
        Poly ck = coeff_in(p, v, k);
        if (!ck.is_zero()) c = gcd_integer(c, ck);
    }
    return c;
}

// Pseudo-remainder of F by G with respect to variable v (G nonzero in v).
// The result differs from the true pseudo-remainder by a power of lc_v(G),
// which is irrelevant because callers take primitive parts.
Poly prem_in(const Poly& F, const Poly& G, int v) {
    int dG = degree_in(G, v);
    Poly lcG = coeff_in(G, v, dG);
    Poly R = F;
    while (!R.is_zero() && degree_in(R, v) >= dG) {
        int dR = degree_in(R, v);
        Poly lcR = coeff_in(R, v, dR);
        R = R * lcG - G * shift_in(lcR, v, dR - dG);
    }
    return R;
}

// Gcd of integer-coefficient polynomials by primitive PRS, recursing on the
// highest variable present.
Poly gcd_integer(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int va = highest_variable(a), vb = highest_variable(b);
    if (va < 0 || vb < 0) {
        // at least one is a nonzero constant
        mpz_class g(0);
        auto fold = [&g](const Poly& p) {
            for (const auto& [m, c] : p.terms())
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        };
        fold(a);
        fold(b);
        return Poly::constant(a.vars(), Rat(g));
    }
    int v = std::max(va, vb);
    Poly ca = content_in(a, v);
    Poly cb = content_in(b, v);
    Poly c = gcd_integer(ca, cb);
    Poly A = divexact(a, ca);
    Poly B = divexact(b, cb);
    Poly F = A, G = B;
    if (degree_in(F, v) < degree_in(G, v)) std::swap(F, G);
    Poly result(a.vars());
    for (;;) {
        Poly R = prem_in(F, G, v);
        if (R.is_zero()) {
            Poly cont = content_in(G, v);
            result = divexact(G, cont);
            break;
        }
        if (degree_in(R, v) == 0) {
            result = Poly::constant(a.vars(), Rat(1));
            break;
        }
        F = G;
        G = divexact(R, content_in(R, v));
    }
    Poly out = c * result;
    if (out.leading_coefficient() < 0) out = -out;
    return out;
}

} // namespace

namespace {

bool try_divexact(const Poly& a, const Poly& b, Poly& quotient) {
    try {
        quotient = divexact(a, b);
        return true;
    } catch (const error&) {
        return false;
    }
}

// ---- heuristic gcd (evaluate, gcd, reconstruct, verify) --------------------

// balanced remainder in (-xi/2, xi/2]
mpz_class balanced_mod(const mpz_class& v, const mpz_class& xi) {
    mpz_class r = v % xi; // truncated: sign follows v
    if (r * 2 > xi) r -= xi;
    if (r * 2 <= -xi) r += xi;
    return r;
}

mpz_class poly_height(const Poly& p) {
    mpz_class h(0);
    for (const auto& [m, c] : p.terms()) {
        mpz_class a = abs(c.get_num());
        if (a > h) h = a;
    }
    return h;
}

// substitute x_v = xi (integer); coefficients stay integral
Poly eval_var(const Poly& p, int v, const mpz_class& xi) {
    std::vector<mpz_class> powers = {mpz_class(1)};
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        while (powers.size() <= m[v]) powers.push_back(powers.back() * xi);
        Monomial q = m;
        q[v] = 0;
        r.add_term(q, c * Rat(powers[m[v]]));
    }
    return r;
}

// read off the xi-adic digits of g as the coefficients of x_v
bool interpolate_var(Poly g, int v, const mpz_class& xi, int max_deg, Poly& out) {
    out = Poly(g.vars());
    for (int d = 0; !g.is_zero(); ++d) {
        if (d > max_deg) return false;
        Poly digit(g.vars());
        for (const auto& [m, c] : g.terms())
            digit.add_term(m, Rat(balanced_mod(c.get_num(), xi)));
        if (!digit.is_zero()) {
            Poly shifted(g.vars());
            for (const auto& [m, c] : digit.terms()) {
                Monomial q = m;
                q[v] = static_cast<std::uint32_t>(d);
                shifted.add_term(q, c);
            }
            out += shifted;
        }
        Poly rest = g - digit;
        Poly next(g.vars());
        for (const auto& [m, c] : rest.terms())
            next.add_term(m, Rat(mpz_class(c.get_num() / xi)));
        g = std::move(next);
    }
    return true;
}

// integer-coefficient inputs; returns a gcd candidate verified by trial
// division, or fails (caller falls back to the subresultant route)
bool gcd_heuristic(const Poly& a, const Poly& b, Poly& out, int depth = 0) {
    if (depth > 8) return false;
    int va = highest_variable(a), vb = highest_variable(b);
    if (va < 0 && vb < 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.constant_term().get_num().get_mpz_t(),
                b.constant_term().get_num().get_mpz_t());
        out = Poly::constant(a.vars(), Rat(g));
        return true;
    }
    int v = std::max(va, vb);
    mpz_class ha = poly_height(a), hb = poly_height(b);
    mpz_class xi = 2 * (ha > hb ? ha : hb) + 29;
    int max_deg = std::max(degree_in(a, v), degree_in(b, v));
    for (int attempt = 0; attempt < 6; ++attempt) {
        Poly ea = eval_var(a, v, xi);
        Poly eb = eval_var(b, v, xi);
        if (!ea.is_zero() && !eb.is_zero()) {
            Poly g(a.vars());
            if (gcd_heuristic(ea, eb, g, depth + 1)) {
                // keep the candidate's integer content: at recursive levels it
                // is the evaluated image of the gcd's content in x_v
                Poly candidate(a.vars());
                if (interpolate_var(g, v, xi, max_deg, candidate) && !candidate.is_zero()) {
                    Poly q(a.vars());
                    if (try_divexact(a, candidate, q) && try_divexact(b, candidate, q)) {
                        out = std::move(candidate);
                        return true;
                    }
                }
            }
        }
        xi = xi * 73794 / 27011 + 17;
    }
    return false;
}

// single-term fast path
bool monomial_gcd(const Poly& a, const Poly& b, Poly& out) {
    const Poly* mono = nullptr;
    const Poly* other = nullptr;
    if (a.terms().size() == 1) {
        mono = &a;
        other = &b;
    } else if (b.terms().size() == 1) {
        mono = &b;
        other = &a;
    } else {
        return false;
    }
    Monomial exps = mono->terms().begin()->first;
    for (const auto& [m, c] : other->terms())
        for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(exps[i], m[i]);
    // inputs are integer-primitive, so the coefficient part of the gcd is 1
    out = Poly(a.vars());
    out.add_term(exps, Rat(1));
    return true;
}

} // namespace

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("divexact: division by zero polynomial");
    Poly q(a.vars());
    Poly r = a;
    const Monomial& lead_b = b.terms().rbegin()->first;
    const Rat& lead_bc = b.terms().rbegin()->second;
    while (!r.is_zero()) {
        const Monomial& lead_r = r.terms_.rbegin()->first;
        if (!mono_divides(lead_b, lead_r))
            throw error("divexact: quotient is not a polynomial");
        Monomial qm(a.vars());
        for (int i = 0; i < a.vars(); ++i) qm[i] = lead_r[i] - lead_b[i];
        Rat qc = r.terms_.rbegin()->second / lead_bc;
        Poly t(a.vars());
        t.add_term(qm, qc);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw chart_mismatch("gcd: chart dimensions differ");
    if (a.is_zero() && b.is_zero()) return Poly(a.vars());
    Poly pa = integer_primitive(a);
    Poly pb = integer_primitive(b);
    Poly g(a.vars());
    if (!pa.is_zero() && pa == pb) {
        g = pa;
    } else if (pa.is_zero() || pb.is_zero() || !monomial_gcd(pa, pb, g)) {
        if (pa.is_zero() || pb.is_zero() || !gcd_heuristic(pa, pb, g))
            g = gcd_integer(pa, pb); // subresultant fallback
    }
    Rat lc = g.leading_coefficient();
    return g * (Rat(1) / lc); // monic
}

} // namespace e1dirac
