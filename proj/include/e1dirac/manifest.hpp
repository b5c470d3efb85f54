#pragma once

/**
 * @file manifest.hpp
 * @brief The manifest file format: a line-based key/value description of a
 *        chart plus one geometric structure. See README.md for the grammar.
 *
 * Parsing is exact: coefficients go through parse_expression and come out in
 * canonical form, so parse -> serialize -> parse is the identity on
 * canonical structures and serialization is byte-stable.
 */

#include <e1dirac/dirac.hpp>
#include <e1dirac/expr.hpp>

#include <optional>
#include <string>
#include <vector>

namespace e1dirac {

enum class StructureKind {
    two_form,
    bivector,
    distribution,
    jacobi,
    lcps,
    homogeneous,
    exact_pair,
    nambu,
    subbundle,
};

std::string kind_name(StructureKind k);

struct Manifest {
    std::vector<std::string> coords;
    StructureKind kind = StructureKind::subbundle;
    std::vector<Scalar> assumptions;

    std::optional<Form> omega;       // two-form, lcps, exact-pair
    std::optional<Form> eta;         // lcps
    std::optional<Form> alpha;       // exact-pair
    std::optional<MultiVector> pi;   // bivector, jacobi, homogeneous, nambu
    std::optional<MultiVector> e;    // jacobi
    std::optional<MultiVector> z;    // homogeneous
    std::vector<MultiVector> fields; // distribution
    std::vector<E1Section> generators; // subbundle
    std::vector<Scalar> test_functions; // nambu FI family
    std::optional<Scalar> volume;    // nambu: coefficient of Omega_f

    int n() const { return static_cast<int>(coords.size()); }
};

/// Throws parse_error (position = line number) on malformed input.
Manifest parse_manifest(const std::string& text);

std::string serialize_manifest(const Manifest& m);

/// The generator presentation of the manifest's structure: the lifted or
/// constructed graph for geometric kinds, the generators themselves for
/// `subbundle`. Throws for `nambu` (no canonical sub-bundle without a volume).
SubBundle manifest_bundle(const Manifest& m);

/// A subbundle-kind manifest presenting the given bundle.
Manifest manifest_from_bundle(const SubBundle& l, std::vector<std::string> coords);

/// Machine-readable report: ordered key/value lines. Deterministic except for
/// the trailing elapsed-ms entry.
struct Report {
    std::vector<std::pair<std::string, std::string>> entries;
    void add(const std::string& key, const std::string& value) {
        entries.emplace_back(key, value);
    }
    std::string to_string() const;
};

} // namespace e1dirac
