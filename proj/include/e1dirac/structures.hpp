#pragma once

/// Direct tensor-condition checkers for the geometric structures the graph
/// constructors encode, the 1-jet bracket, the Phi isomorphism onto the
/// Jacobi graph, and the Nambu / co-Nambu pipeline. Each checker is the
/// other half of an iff whose graph half lives in dirac.hpp; the test suite
/// runs both halves on every instance.

#include <e1dirac/section.hpp>

#include <vector>

namespace e1dirac {

struct JacobiPair {
    MultiVector pi; // bivector
    MultiVector e;  // vector field
};

struct HomogeneousPair {
    MultiVector pi;
    MultiVector z;
};

struct LcpsPair {
    Form omega; // 2-form
    Form eta;   // closed 1-form
};

struct OneJet {
    Form alpha;
    Scalar f;
};

/// [pi, pi]_s = 0.
bool check_poisson(const MultiVector& pi);

/// [E, pi]_s = 0 and [pi, pi]_s = 2 E ^ pi.
bool check_jacobi(const JacobiPair& j);

/// [pi, pi]_s = 0 and [Z, pi]_s = -pi.
bool check_homogeneous(const HomogeneousPair& h);

/// d(eta) = 0 and d(omega) = eta ^ omega.
bool check_lcps(const LcpsPair& l);

/// The two co-Nambu conditions (i_A w) ^ w = 0 and (i_A w) ^ dw = 0 for all
/// multivectors A of degree deg(w) - 1; by Scalar-linearity it is enough to
/// range A over the coordinate basis, which is what this does.
bool check_conambu(const Form& w);

/// {f_1, ..., f_p} = Pi(df_1, ..., df_p).
Scalar nambu_bracket(const MultiVector& pi, const std::vector<Scalar>& fs);

struct FiReport {
    bool passed = true;
    // first failing tuple, when any (indices into the family)
    std::vector<int> failing_fs;
    std::vector<int> failing_gs;
};

/// Verifies the Fundamental Identity for every ordered choice of
/// f_1..f_{p-1}, g_1..g_p from the family. A necessary-condition test only:
/// the verdict means "passed on this family".
FiReport check_fundamental_identity(const MultiVector& pi,
                                    const std::vector<Scalar>& family);

/// w_f = i_Pi Omega for a volume form Omega (degree n, nonvanishing coefficient).
Form nambu_to_form(const MultiVector& pi, const Form& volume);

/// The 1-jet bracket {(alpha,f), (beta,g)}_(pi,E).
OneJet ks_bracket(const JacobiPair& j, const OneJet& u, const OneJet& v);

/// Phi(alpha, f) = (pi alpha + f E, -i_E alpha) + (alpha, f); a Lie algebroid
/// isomorphism onto the Jacobi graph when (pi, E) is a Jacobi pair.
E1Section phi_iso(const JacobiPair& j, const OneJet& u);

} // namespace e1dirac
