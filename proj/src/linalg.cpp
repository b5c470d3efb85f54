#include <e1dirac/linalg.hpp>

#include <algorithm>

namespace e1dirac {

// Elimination is fraction-free (Bareiss): rows are cleared to polynomials and
// every division during forward elimination is exact, so no gcd normalization
// happens on intermediate entries. Rational arithmetic only returns for the
// final back-substitution, on result-sized data.

namespace {

struct Echelon {
    std::vector<std::vector<Poly>> rows; // forward-eliminated, pivot rows first
    std::vector<int> pivot_col;          // per pivot row
    std::vector<Poly> pivots;            // non-constant pivot polynomials
    int rank = 0;
};

Echelon bareiss(const ScalarMatrix& m, const std::vector<Scalar>* rhs, int n) {
    int nrows = static_cast<int>(m.size());
    int cols = nrows ? static_cast<int>(m[0].size()) : 0;
    int width = cols + (rhs ? 1 : 0);

    Echelon e;
    e.rows.assign(nrows, std::vector<Poly>(width, Poly(n)));
    for (int i = 0; i < nrows; ++i) {
        // clear the row to a common polynomial denominator; row scaling by a
        // nonzero polynomial changes neither the rank nor the solution set
        Poly common = Poly::constant(n, 1);
        auto fold = [&](const Scalar& s) {
            if (!s.den().is_constant()) common = common * divexact(s.den(), poly_gcd(common, s.den()));
        };
        for (const Scalar& s : m[i]) fold(s);
        if (rhs) fold((*rhs)[i]);
        auto clear = [&](const Scalar& s) {
            return s.num() * divexact(common, s.den());
        };
        for (int j = 0; j < cols; ++j) e.rows[i][j] = clear(m[i][j]);
        if (rhs) e.rows[i][cols] = clear((*rhs)[i]);
    }

    Poly prev = Poly::constant(n, 1);
    int r = 0;
    for (int lead = 0; lead < cols && r < nrows; ++lead) {
        int pr = -1;
        for (int i = r; i < nrows; ++i) {
            if (e.rows[i][lead].is_zero()) continue;
            // prefer the sparsest pivot to slow entry growth
            if (pr < 0 || e.rows[i][lead].terms().size() < e.rows[pr][lead].terms().size())
                pr = i;
        }
        if (pr < 0) continue;
        std::swap(e.rows[r], e.rows[pr]);
        const Poly& pivot = e.rows[r][lead];
        for (int i = r + 1; i < nrows; ++i) {
            if (e.rows[i][lead].is_zero()) {
                for (int j = lead + 1; j < width; ++j)
                    e.rows[i][j] = divexact(e.rows[i][j] * pivot, prev);
            } else {
                Poly factor = e.rows[i][lead];
                for (int j = lead + 1; j < width; ++j)
                    e.rows[i][j] =
                        divexact(e.rows[i][j] * pivot - factor * e.rows[r][j], prev);
                e.rows[i][lead] = Poly(n);
            }
        }
        if (!pivot.is_constant()) e.pivots.push_back(pivot);
        e.pivot_col.push_back(lead);
        prev = pivot;
        ++r;
    }
    e.rank = r;
    return e;
}

} // namespace

std::optional<LinearSolution> solve_linear(const LinearSystem& sys) {
    int nrows = static_cast<int>(sys.matrix.size());
    if (nrows != static_cast<int>(sys.rhs.size()))
        throw error("solve_linear: rhs length does not match row count");
    int cols = nrows ? static_cast<int>(sys.matrix[0].size()) : 0;
    for (const auto& row : sys.matrix)
        if (static_cast<int>(row.size()) != cols)
            throw error("solve_linear: ragged matrix");
    int n = nrows ? sys.rhs[0].vars() : 0;

    Echelon e = bareiss(sys.matrix, &sys.rhs, n);

    // inconsistent iff a zero coefficient row keeps a nonzero rhs
    for (int i = e.rank; i < nrows; ++i)
        if (!e.rows[i][cols].is_zero()) return std::nullopt;

    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;

    // back-substitution over the field, for a given assignment of the free
    // variables and a chosen augmented column (rhs or zero)
    auto back_substitute = [&](const std::vector<Scalar>& free_values, bool use_rhs) {
        std::vector<Scalar> x(cols, Scalar(n));
        int fi = 0;
        for (int j = 0; j < cols; ++j)
            if (!is_pivot[j]) x[j] = free_values[fi++];
        for (int r = e.rank - 1; r >= 0; --r) {
            int pc = e.pivot_col[r];
            Scalar acc = use_rhs ? Scalar::from_poly(e.rows[r][cols]) : Scalar(n);
            for (int j = pc + 1; j < cols; ++j) {
                if (e.rows[r][j].is_zero() || x[j].is_zero()) continue;
                acc -= Scalar::from_poly(e.rows[r][j]) * x[j];
            }
            x[pc] = acc / Scalar::from_poly(e.rows[r][pc]);
        }
        return x;
    };

    LinearSolution sol;
    sol.denominators = e.pivots;
    int free_count = cols - e.rank;
    sol.particular = back_substitute(std::vector<Scalar>(free_count, Scalar(n)), true);
    for (int k = 0; k < free_count; ++k) {
        std::vector<Scalar> unit(free_count, Scalar(n));
        unit[k] = Scalar::constant(n, 1);
        sol.kernel.push_back(back_substitute(unit, false));
    }
    return sol;
}

int generic_rank(const ScalarMatrix& m) {
    if (m.empty()) return 0;
    int cols = static_cast<int>(m[0].size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw error("generic_rank: ragged matrix");
    if (cols == 0) return 0;
    return bareiss(m, nullptr, m[0][0].vars()).rank;
}

} // namespace e1dirac
