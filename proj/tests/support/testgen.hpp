#pragma once

// Deterministic pseudorandom generators for the property tests. Everything is
// seeded explicitly so failures reproduce.

#include <e1dirac/section.hpp>

#include <cstdint>

namespace testgen {

using namespace e1dirac;

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Poly random_poly(Rng& rng, int n, int max_deg, int max_terms, int coeff_range = 3) {
    Poly p(n);
    int terms = rng.range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n, 0);
        int budget = rng.range(0, max_deg);
        for (int step = 0; step < budget; ++step) m[rng.range(0, n - 1)] += 1;
        int c = rng.range(-coeff_range, coeff_range);
        if (c == 0) c = 1;
        p.add_term(m, Rat(c));
    }
    return p;
}

inline Poly random_nonzero_poly(Rng& rng, int n, int max_deg, int max_terms) {
    for (;;) {
        Poly p = random_poly(rng, n, max_deg, max_terms);
        if (!p.is_zero()) return p;
    }
}

inline Scalar random_scalar(Rng& rng, int n, int max_deg = 3, int max_terms = 3) {
    Poly num = random_poly(rng, n, max_deg, max_terms);
    // keep denominators mild: constant, or a small polynomial
    Poly den = (rng.range(0, 3) == 0) ? random_nonzero_poly(rng, n, 2, 2)
                                      : Poly::constant(n, 1);
    return Scalar(std::move(num), std::move(den));
}

inline Scalar random_poly_scalar(Rng& rng, int n, int max_deg = 2, int max_terms = 3) {
    return Scalar::from_poly(random_poly(rng, n, max_deg, max_terms));
}

inline Scalar random_nonzero_scalar(Rng& rng, int n, int max_deg = 2, int max_terms = 2) {
    for (;;) {
        Scalar s = random_scalar(rng, n, max_deg, max_terms);
        if (!s.is_zero()) return s;
    }
}

template <class Tag>
AltTensor<Tag> random_tensor(Rng& rng, int n, int degree, int max_deg = 2, int max_terms = 2) {
    AltTensor<Tag> t(n, degree);
    for (IndexMask m = 0; m < (IndexMask(1) << n); ++m) {
        if (e1dirac::detail::popcount(m) != degree) continue;
        if (rng.range(0, 2) == 0) continue; // keep it sparse
        t.add_term(m, random_poly_scalar(rng, n, max_deg, max_terms));
    }
    return t;
}

inline Form random_form(Rng& rng, int n, int degree, int max_deg = 2, int max_terms = 2) {
    return random_tensor<e1dirac::detail::FormTag>(rng, n, degree, max_deg, max_terms);
}

inline MultiVector random_multivector(Rng& rng, int n, int degree, int max_deg = 2,
                                      int max_terms = 2) {
    return random_tensor<e1dirac::detail::VectorTag>(rng, n, degree, max_deg, max_terms);
}

inline E1Section random_section(Rng& rng, int n, int max_deg = 2) {
    return E1Section(random_multivector(rng, n, 1, max_deg),
                     random_poly_scalar(rng, n, max_deg),
                     random_form(rng, n, 1, max_deg),
                     random_poly_scalar(rng, n, max_deg));
}

} // namespace testgen
