#pragma once

/**
 * @file admissible.hpp
 * @brief Admissible functions of a maximal isotropic sub-bundle and their
 *        induced bracket {f,g} = -<e_f, e_g>-.
 *
 * f is admissible when some (X_f, phi_f) + (df, f) lies in the span of the
 * generators; the witness solve is over the (alpha, g)-components and the
 * (X, phi) parts fall out of the combination. Witnesses are unique up to
 * sections of L /\ (TM x R), whose basis is recorded so that tests can verify
 * the bracket does not depend on the choice.
 */

#include <e1dirac/dirac.hpp>
#include <e1dirac/structures.hpp>

namespace e1dirac {

struct AdmissibleWitness {
    Scalar f;
    MultiVector x_f;
    Scalar phi_f;
    E1Section e_f;                             // (X_f, phi_f) + (df, f)
    std::vector<Scalar> coefficients;          // combination over the generators
    std::vector<E1Section> homogeneous_freedom; // basis of L /\ (TM x R)
    std::vector<Poly> denominators;            // generic caveat from the solve
};

std::optional<AdmissibleWitness> find_admissible(const SubBundle& l, const Scalar& f);

/// {f, g}; throws error when either function is not admissible.
Scalar admissible_bracket(const SubBundle& l, const Scalar& f, const Scalar& g);

struct LeibnizCheck {
    bool holds = false;        // {f,gh} = g{f,h} + {f,g}h - gh phi_f
    Scalar lhs, rhs;
};

LeibnizCheck leibniz_defect(const SubBundle& l, const Scalar& f, const Scalar& g,
                            const Scalar& h);

struct RecoveredJacobi {
    JacobiPair pair;
    bool verified = false;   // pair passes check_jacobi and regenerates l
};

struct RecoverFailure {
    std::string offending;   // which function failed to be admissible
};

/// Rebuilds (pi, E) from a Dirac structure for which 1 and every coordinate
/// function are admissible; E is the witness of the constant function and
/// pi(dx_i, dx_j) = {x_i, x_j}.
std::optional<RecoveredJacobi> recover_jacobi(const SubBundle& l,
                                              RecoverFailure* failure = nullptr);

} // namespace e1dirac
