#include <e1dirac/scalar.hpp>

namespace e1dirac {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars())
        throw chart_mismatch("scalar: numerator and denominator on different charts");
    if (den_.is_zero())
        throw malformed_scalar("scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(vars(), 1);
        return;
    }
    // a constant on either side cannot share a factor with the other
    if (!den_.is_constant() && !num_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (g.total_degree() > 0) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    Rat lc = den_.leading_coefficient();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool Scalar::is_one() const {
    return den_.is_constant() && !den_.is_zero() && num_ == den_;
}

bool Scalar::is_polynomial() const {
    return den_ == Poly::constant(vars(), 1);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

// divide out a shared factor before multiplying, to keep products small
void cross_cancel(Poly& a, Poly& b) {
    if (a.is_constant() || b.is_constant()) return;
    Poly g = poly_gcd(a, b);
    if (g.total_degree() > 0) {
        a = divexact(a, g);
        b = divexact(b, g);
    }
}

} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (vars() != o.vars()) throw chart_mismatch("scalar addition across charts");
    // common-denominator form: smaller products and a smaller final gcd
    Poly d1 = den_, d2 = o.den_;
    cross_cancel(d1, d2); // now den = den_ * d2 = o.den_ * d1 is the lcm
    return Scalar(num_ * d2 + o.num_ * d1, den_ * d2);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (vars() != o.vars()) throw chart_mismatch("scalar subtraction across charts");
    Poly d1 = den_, d2 = o.den_;
    cross_cancel(d1, d2);
    return Scalar(num_ * d2 - o.num_ * d1, den_ * d2);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (vars() != o.vars()) throw chart_mismatch("scalar multiplication across charts");
    Poly n1 = num_, d2 = o.den_;
    Poly n2 = o.num_, d1 = den_;
    cross_cancel(n1, d2);
    cross_cancel(n2, d1);
    return Scalar(n1 * n2, d1 * d2);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (vars() != o.vars()) throw chart_mismatch("scalar division across charts");
    if (o.is_zero()) throw malformed_scalar("division by the zero function");
    Poly n1 = num_, n2 = o.num_;
    Poly d1 = den_, d2 = o.den_;
    cross_cancel(n1, n2);
    cross_cancel(d1, d2);
    return Scalar(n1 * d2, d1 * n2);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw malformed_scalar("inverse of the zero function");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(unsigned e) const {
    Scalar acc = Scalar::constant(vars(), 1);
    Scalar base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

Scalar Scalar::derivative(int index) const {
    // (n/d)' = (n'd - nd') / d^2
    Poly dn = num_.derivative(index);
    Poly dd = den_.derivative(index);
    return Scalar(dn * den_ - num_ * dd, den_ * den_);
}

std::string Scalar::to_string(const std::vector<std::string>& names) const {
    if (is_polynomial()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

} // namespace e1dirac
