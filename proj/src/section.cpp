#include <e1dirac/section.hpp>

namespace e1dirac {

namespace {

void check_section(const MultiVector& x, const Scalar& f, const Form& alpha, const Scalar& g) {
    if (x.degree() != 1) throw degree_error("section: X must be a vector field");
    if (alpha.degree() != 1) throw degree_error("section: alpha must be a 1-form");
    if (x.dim() != alpha.dim() || x.dim() != f.vars() || x.dim() != g.vars())
        throw chart_mismatch("section components on different charts");
}

Scalar contract(const MultiVector& x, const Form& a) {
    // i_X alpha for a vector field and a 1-form
    return interior_product(x, a).coefficient(0);
}

} // namespace

E1Section::E1Section(MultiVector x_, Scalar f_, Form alpha_, Scalar g_)
    : x(std::move(x_)), f(std::move(f_)), alpha(std::move(alpha_)), g(std::move(g_)) {
    check_section(x, f, alpha, g);
}

E1Section E1Section::zero(int dim) {
    return E1Section(MultiVector(dim, 1), Scalar(dim), Form(dim, 1), Scalar(dim));
}

bool E1Section::is_zero() const {
    return x.is_zero() && f.is_zero() && alpha.is_zero() && g.is_zero();
}

E1Section E1Section::operator+(const E1Section& o) const {
    return E1Section(x + o.x, f + o.f, alpha + o.alpha, g + o.g);
}

E1Section E1Section::operator-(const E1Section& o) const {
    return E1Section(x - o.x, f - o.f, alpha - o.alpha, g - o.g);
}

E1Section E1Section::operator-() const {
    return E1Section(-x, -f, -alpha, -g);
}

E1Section E1Section::operator*(const Scalar& c) const {
    return E1Section(x * c, f * c, alpha * c, g * c);
}

bool E1Section::operator==(const E1Section& o) const {
    return x == o.x && f == o.f && alpha == o.alpha && g == o.g;
}

std::string E1Section::to_string(const std::vector<std::string>& names) const {
    return "(" + x.to_string(names) + ", " + f.to_string(names) + ") + (" +
           alpha.to_string(names) + ", " + g.to_string(names) + ")";
}

CourantSection::CourantSection(MultiVector x_, Form alpha_)
    : x(std::move(x_)), alpha(std::move(alpha_)) {
    if (x.degree() != 1 || alpha.degree() != 1)
        throw degree_error("courant section: expected a vector field and a 1-form");
    if (x.dim() != alpha.dim())
        throw chart_mismatch("courant section components on different charts");
}

E1Section CourantSection::lift() const {
    return E1Section(x, Scalar(dim()), alpha, Scalar(dim()));
}

Scalar pair_plus(const E1Section& e1, const E1Section& e2) {
    if (e1.dim() != e2.dim()) throw chart_mismatch("pairing across charts");
    Scalar half = Scalar::constant(e1.dim(), Rat(1, 2));
    return half * (contract(e2.x, e1.alpha) + contract(e1.x, e2.alpha) +
                   e1.g * e2.f + e2.g * e1.f);
}

Scalar pair_minus(const E1Section& e1, const E1Section& e2) {
    if (e1.dim() != e2.dim()) throw chart_mismatch("pairing across charts");
    Scalar half = Scalar::constant(e1.dim(), Rat(1, 2));
    return half * (contract(e2.x, e1.alpha) - contract(e1.x, e2.alpha) +
                   e1.g * e2.f - e2.g * e1.f);
}

E1Section extended_bracket(const E1Section& e1, const E1Section& e2) {
    if (e1.dim() != e2.dim()) throw chart_mismatch("extended bracket across charts");
    int n = e1.dim();
    Scalar half = Scalar::constant(n, Rat(1, 2));

    MultiVector x = lie_bracket(e1.x, e2.x);
    Scalar f = apply_vector(e1.x, e2.f) - apply_vector(e2.x, e1.f);

    Scalar i21 = contract(e2.x, e1.alpha); // i_{X2} alpha1
    Scalar i12 = contract(e1.x, e2.alpha); // i_{X1} alpha2

    Form alpha = lie_derivative(e1.x, e2.alpha) - lie_derivative(e2.x, e1.alpha) +
                 differential(half * (i21 - i12)) +
                 e2.alpha * e1.f - e1.alpha * e2.f +
                 (differential(e1.f) * e2.g - differential(e2.f) * e1.g -
                  differential(e2.g) * e1.f + differential(e1.g) * e2.f) *
                     half;

    Scalar g = apply_vector(e1.x, e2.g) - apply_vector(e2.x, e1.g) +
               half * (i21 - i12 - e2.f * e1.g + e1.f * e2.g);

    return E1Section(std::move(x), std::move(f), std::move(alpha), std::move(g));
}

CourantSection courant_bracket(const CourantSection& a, const CourantSection& b) {
    E1Section r = extended_bracket(a.lift(), b.lift());
    return CourantSection(r.x, r.alpha);
}

Scalar anchor(const E1Section& e, const Scalar& h) {
    if (e.dim() != h.vars()) throw chart_mismatch("anchor across charts");
    return apply_vector(e.x, h);
}

Scalar jacobiator(const E1Section& e1, const E1Section& e2, const E1Section& e3) {
    Scalar third = Scalar::constant(e1.dim(), Rat(1, 3));
    return third * (pair_plus(extended_bracket(e1, e2), e3) +
                    pair_plus(extended_bracket(e2, e3), e1) +
                    pair_plus(extended_bracket(e3, e1), e2));
}

} // namespace e1dirac
