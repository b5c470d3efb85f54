#pragma once

/**
 * @file section.hpp
 * @brief Sections of E1(M) = (TM x R) + (T*M x R), the two canonical
 *        pairings, and the extended Courant bracket.
 *
 * A section is a quadruple (X, f) + (alpha, g). The extended bracket is
 * implemented literally, term by term, with no algebraic simplification, so
 * that the structural identities
 *
 *   [[e1,e2],e3] + c.p. = (0,0) + (dT, T)
 *   [e1, f e2] = f [e1,e2] + (rho(e1) f) e2 - <e1,e2>+ ((0,0)+(df,0))
 *
 * exercised by the test suite catch any transcription slip.
 */

#include <e1dirac/tensor.hpp>

namespace e1dirac {

struct E1Section {
    MultiVector x;  // vector field
    Scalar f;       // TM x R component
    Form alpha;     // 1-form
    Scalar g;       // T*M x R component

    E1Section(MultiVector x_, Scalar f_, Form alpha_, Scalar g_);
    static E1Section zero(int dim);

    int dim() const { return x.dim(); }
    bool is_zero() const;

    E1Section operator+(const E1Section& o) const;
    E1Section operator-(const E1Section& o) const;
    E1Section operator-() const;
    /// Module action: multiply every component by a function.
    E1Section operator*(const Scalar& c) const;
    bool operator==(const E1Section& o) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;
};

inline E1Section operator*(const Scalar& c, const E1Section& e) { return e * c; }

/// A section X + alpha of TM + T*M.
struct CourantSection {
    MultiVector x;
    Form alpha;

    CourantSection(MultiVector x_, Form alpha_);
    int dim() const { return x.dim(); }
    /// Embeds as (X, 0) + (alpha, 0).
    E1Section lift() const;
};

/// <e1, e2>+ : the symmetric pairing.
Scalar pair_plus(const E1Section& e1, const E1Section& e2);

/// <e1, e2>- : the skew-symmetric pairing.
Scalar pair_minus(const E1Section& e1, const E1Section& e2);

/// The extended Courant bracket on sections of E1(M).
E1Section extended_bracket(const E1Section& e1, const E1Section& e2);

/// Classical Courant bracket on TM + T*M.
CourantSection courant_bracket(const CourantSection& a, const CourantSection& b);

/// rho(e) h = X . h.
Scalar anchor(const E1Section& e, const Scalar& h);

/// T(e1,e2,e3) = (1/3) <[e1,e2], e3>+ + cyclic.
Scalar jacobiator(const E1Section& e1, const E1Section& e2, const E1Section& e3);

} // namespace e1dirac
