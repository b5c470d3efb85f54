#pragma once

/// Gaussian elimination over the rational-function field. Solutions are
/// generic: they are valid off the vanishing locus of the pivot numerators,
/// which every routine reports.

#include <e1dirac/scalar.hpp>

#include <optional>
#include <vector>

namespace e1dirac {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct LinearSystem {
    ScalarMatrix matrix;     // rows x cols
    std::vector<Scalar> rhs; // rows
};

struct LinearSolution {
    std::vector<Scalar> particular;          // cols
    std::vector<std::vector<Scalar>> kernel; // basis of the homogeneous space
    std::vector<Poly> denominators;          // pivot polynomials inverted on the way
};

/// One particular solution plus a kernel basis, or nullopt when the system is
/// inconsistent over the field.
std::optional<LinearSolution> solve_linear(const LinearSystem& sys);

/// Rank over the rational-function field (rank at a generic chart point).
int generic_rank(const ScalarMatrix& m);

} // namespace e1dirac
