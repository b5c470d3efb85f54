#pragma once

/**
 * @file poly.hpp
 * @brief Multivariate polynomials with exact rational coefficients.
 *
 * Terms are kept in a sparse map from dense exponent vectors to nonzero
 * rational coefficients, ordered by graded lexicographic order. This is the
 * substrate of the rational-function field; all higher layers depend on the
 * exactness of the arithmetic and of gcd here.
 */

#include <e1dirac/error.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace e1dirac {

/// Exact rational number.
using Rat = mpq_class;

std::string rat_to_string(const Rat& r);

/// Dense exponent vector; length equals the chart dimension.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order (total degree first, then lex on exponents).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    explicit Poly(int vars = 0) : vars_(vars) {}
    static Poly constant(int vars, const Rat& c);
    static Poly variable(int vars, int index);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the grlex-leading term (0 for the zero polynomial).
    Rat leading_coefficient() const;
    /// The constant term (possibly 0).
    Rat constant_term() const;

    void add_term(const Monomial& m, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(unsigned e) const;

    /// Exact partial derivative with respect to coordinate `index` (0-based).
    Poly derivative(int index) const;

    /// Renders with the given variable names ("x^2*y - 1/2"); names may be
    /// empty, in which case x0, x1, ... are used.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int vars_;
    TermMap terms_; // nonzero coefficients only
    friend Poly divexact(const Poly&, const Poly&);
};

/// Exact quotient; throws e1dirac::error if the division is not exact.
Poly divexact(const Poly& a, const Poly& b);

/// Gcd over Q, normalized monic in grlex. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace e1dirac
