#pragma once

/**
 * @file dirac.hpp
 * @brief Sub-bundles of E1(M) given by generators, and the exact decision
 *        procedures for isotropy, maximality and the Dirac condition.
 *
 * Sub-bundles are Scalar-modules spanned by finitely many sections, so every
 * verdict is generic: it holds off the vanishing locus of finitely many
 * recorded polynomials (pivot numerators of the solves involved). The Dirac
 * decision uses the triple-pairing criterion <[e1,e2], e3>+ = 0, checked on
 * generators; isotropy of the span makes the generator check sufficient, and
 * the test suite pins that reduction on random Scalar combinations.
 */

#include <e1dirac/linalg.hpp>
#include <e1dirac/section.hpp>

#include <optional>
#include <vector>

namespace e1dirac {

struct SubBundle {
    int n = 0;                          // chart dimension; fibre dim is 2n+2
    std::vector<E1Section> generators;  // nonempty
    std::vector<Scalar> assumptions;    // declared-nonvanishing scalars

    SubBundle(int dim, std::vector<E1Section> gens, std::vector<Scalar> assume = {});
    int fiber_dim() const { return 2 * n + 2; }
};

/// Flattens a section to its 2n+2 components (X, f, alpha, g).
std::vector<Scalar> section_components(const E1Section& e);

struct TripleObstruction {
    int i, j, k;
    Scalar value; // <[g_i, g_j], g_k>+  (nonzero)
};

struct DiracVerdict {
    bool is_isotropic = false;
    int generic_rank = 0;
    bool is_maximal = false;
    std::vector<std::pair<std::pair<int, int>, Scalar>> isotropy_failures;
    std::vector<TripleObstruction> closure_obstructions;
    std::vector<Scalar> assumptions_used;
    std::vector<std::string> caveats;
    bool closure_checked = false;

    bool is_dirac() const {
        return is_isotropic && is_maximal && closure_checked && closure_obstructions.empty();
    }
};

/// Isotropy of all generator pairs plus generic maximality (rank = n+1).
DiracVerdict is_maximal_isotropic(const SubBundle& l);

/// Full Dirac decision: maximal isotropy plus all generator triple pairings.
DiracVerdict is_dirac(const SubBundle& l);

struct MembershipWitness {
    std::vector<Scalar> coefficients;
    std::vector<Poly> denominators;
};

/// Is e a Scalar combination of the generators (generically)?
std::optional<MembershipWitness> contains_section(const SubBundle& l, const E1Section& e);

/// Mutual containment of generators: equality as Scalar-modules (generically).
bool same_module(const SubBundle& a, const SubBundle& b);

/// The lift of a sub-bundle of TM + T*M: generators (X,0)+(alpha,0) plus
/// (0,0)+(0,1).
SubBundle lift_to_e1(const std::vector<CourantSection>& gens, int dim,
                     std::vector<Scalar> assume = {});

// Graph constructors. Each returns n+1 generators, maximally isotropic by
// construction; isotropy is re-verified by the checkers, not assumed.

/// Graph of X -> i_X omega, lifted.
SubBundle graph_of_two_form(const Form& omega, std::vector<Scalar> assume = {});

/// Graph of alpha -> pi(alpha), lifted.
SubBundle graph_of_bivector(const MultiVector& pi, std::vector<Scalar> assume = {});

/// F + F-perp for a distribution spanned by the given fields, lifted.
/// The annihilator is computed generically (constant-rank payloads only).
SubBundle graph_of_distribution(const std::vector<MultiVector>& fields,
                                std::vector<Scalar> assume = {});

/// L_P for P(alpha, g) = (pi alpha + g E, -i_E alpha).
SubBundle graph_of_jacobi(const MultiVector& pi, const MultiVector& e,
                          std::vector<Scalar> assume = {});

/// L_(omega, eta): fibre {(X, -i_X eta) + (i_X omega + f eta, f)}.
SubBundle graph_of_lcps(const Form& omega, const Form& eta,
                        std::vector<Scalar> assume = {});

/// L_(pi, Z): fibre {(pi alpha - f Z, f) + (alpha, i_Z alpha)}.
SubBundle graph_of_homogeneous(const MultiVector& pi, const MultiVector& z,
                               std::vector<Scalar> assume = {});

/// Graph of phi_B(X, f) = (i_X omega + f alpha, -i_X alpha).
SubBundle graph_of_exact_pair(const Form& omega, const Form& alpha,
                              std::vector<Scalar> assume = {});

} // namespace e1dirac
