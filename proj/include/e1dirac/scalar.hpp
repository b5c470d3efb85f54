#pragma once

/**
 * @file scalar.hpp
 * @brief The coefficient field: exact multivariate rational functions.
 *
 * A Scalar is a quotient num/den of polynomials on a fixed coordinate chart,
 * held in canonical form: gcd(num, den) = 1 and den monic in grlex order.
 * Equality of canonical forms is equality of rational functions, so every
 * decision in the engine is exact; there are no tolerances anywhere.
 */

#include <e1dirac/poly.hpp>

namespace e1dirac {

class Scalar {
public:
    /// Zero on a chart of dimension `vars`.
    explicit Scalar(int vars = 0)
        : num_(vars), den_(Poly::constant(vars, 1)) {}

    /// num/den, normalized. Throws malformed_scalar if den is the zero polynomial.
    Scalar(Poly num, Poly den);

    static Scalar constant(int vars, const Rat& c) {
        return Scalar(Poly::constant(vars, c), Poly::constant(vars, 1));
    }
    static Scalar from_poly(Poly p) {
        int v = p.vars();
        return Scalar(std::move(p), Poly::constant(v, 1));
    }
    static Scalar variable(int vars, int index) {
        return from_poly(Poly::variable(vars, index));
    }

    int vars() const { return num_.vars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Throws malformed_scalar when dividing by the zero function.
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    /// Exact partial derivative (quotient rule), canonical form.
    Scalar derivative(int index) const;

    /// Exact equality of rational functions (syntactic on canonical forms).
    bool operator==(const Scalar& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    Poly num_, den_;
    void normalize();
};

inline Scalar operator*(const Rat& c, const Scalar& s) {
    return Scalar::constant(s.vars(), c) * s;
}

} // namespace e1dirac
