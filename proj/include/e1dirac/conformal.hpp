#pragma once

/**
 * @file conformal.hpp
 * @brief The a-conformal transform L -> L^a, the conformal bracket, and the
 *        conformal equivalence relation, on a single chart.
 *
 * Given a nonvanishing function a with (Y_a, theta_a) + (da, 0) in Gamma(L),
 * the transform sends (X, phi) + (alpha, f) to
 *
 *     (a X + f Y_a, a phi - i_{Y_a} alpha) + (alpha, f).
 *
 * This is a Scalar-linear bundle map, so the image module is spanned by the
 * transforms of the generators; conformal_transform also re-verifies the
 * rank and records the genericity caveats.
 */

#include <e1dirac/admissible.hpp>

namespace e1dirac {

struct ConformalFactor {
    Scalar a;           // declared nonvanishing
    MultiVector y_a;
    Scalar theta_a;
    E1Section s_a;      // (Y_a, theta_a) + (da, 0), a section of L
    std::vector<Scalar> coefficients;
    std::vector<Poly> denominators;
};

/// Solves for (Y_a, theta_a) + (da, 0) in the span of l's generators.
std::optional<ConformalFactor> find_conformal_section(const SubBundle& l, const Scalar& a);

/// The identity factor (a = 1, Y = 0, theta = 0); valid for every sub-bundle.
ConformalFactor identity_factor(int dim);

/// The defining fibrewise map of L^a applied to one section.
E1Section transform_section(const ConformalFactor& c, const E1Section& e);

/// L^a, generated by the transforms of l's generators; `a` joins the
/// assumption ledger of the result.
SubBundle conformal_transform(const SubBundle& l, const ConformalFactor& c);

struct ConformalBracketResult {
    Scalar via_scaling;    // (1/a) {af, ag} computed in L
    Scalar via_transform;  // -<delta_f, delta_g>- computed in L^a
    bool consistent() const { return via_scaling == via_transform; }
};

/// {f,g}^a along both independent routes.
ConformalBracketResult conformal_bracket(const SubBundle& l, const ConformalFactor& c,
                                         const Scalar& f, const Scalar& g);

struct EfSpanCertificate {
    bool spanned = false;
    std::vector<E1Section> ef_generators; // kernel sections plus witnesses
    std::vector<Scalar> functions;        // the nonzero f's used
};

/// Certifies that Gamma(l) is spanned by sections of the form
/// (X_f, phi_f) + (df, f) (f = 0 giving the L /\ (TM x R) directions). The
/// certificate is sound but not complete: candidates default to 1, the
/// coordinates, the declared-nonvanishing functions and their pairwise
/// products with coordinates.
EfSpanCertificate ef_form_spanning(const SubBundle& l,
                                   std::vector<Scalar> candidates = {});

struct EquivalenceReport {
    bool reflexive = false;   // L^1 = L
    bool symmetric = false;   // (L^a)^{1/a} = L, via (-Y_a/a, -theta_a/a)
    bool transitive = false;  // (L^a)^b = L^{ab}
};

/// Checks the three equivalence-relation axioms on concrete data; b is the
/// second factor used for transitivity.
EquivalenceReport check_equivalence_axioms(const SubBundle& l, const ConformalFactor& c,
                                           const Scalar& b);

} // namespace e1dirac
