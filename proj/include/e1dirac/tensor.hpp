#pragma once

/**
 * @file tensor.hpp
 * @brief Differential forms and multivector fields on a coordinate chart.
 *
 * Coefficients live on strictly increasing index sets, encoded as bitmasks
 * (bit i set = coordinate i participates). All graded signs in the library
 * derive from one anchor, pinned by the test suite:
 *
 *     interior_product(Dx^Dy, dx^dy) = +1
 *
 * i.e. contraction by a decomposable multivector applies the lowest-index
 * factor first, and the degree-1 contraction inserts the vector in the first
 * argument slot (the convention under which the Cartan formula
 * L_X = d i_X + i_X d produces the usual Lie derivative).
 */

#include <e1dirac/scalar.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>

namespace e1dirac {

using IndexMask = std::uint32_t;

namespace detail {

int popcount(IndexMask m);

/// Sign of reordering dx_A ^ dx_B into increasing order; 0 when A and B meet.
int wedge_sign(IndexMask a, IndexMask b);

/// Position of index i inside the increasing list of set bits of s.
int position_in(IndexMask s, int i);

struct FormTag {
    static constexpr const char* prefix = "d";
};
struct VectorTag {
    static constexpr const char* prefix = "D";
};

} // namespace detail

template <class Tag>
class AltTensor {
public:
    AltTensor(int dim, int degree) : dim_(dim), degree_(degree) {
        if (dim < 0 || dim > 30) throw degree_error("chart dimension out of range");
        if (degree < 0) throw degree_error("negative tensor degree");
    }

    static AltTensor basis(int dim, std::initializer_list<int> indices) {
        AltTensor t(dim, static_cast<int>(indices.size()));
        IndexMask m = 0;
        int prev = -1;
        for (int i : indices) {
            if (i <= prev) throw degree_error("basis indices must be strictly increasing");
            if (i < 0 || i >= dim) throw degree_error("basis index out of range");
            m |= IndexMask(1) << i;
            prev = i;
        }
        t.coeffs_.emplace(m, Scalar::constant(dim, 1));
        return t;
    }

    static AltTensor from_scalar(const Scalar& s) {
        AltTensor t(s.vars(), 0);
        t.add_term(0, s);
        return t;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<IndexMask, Scalar>& coefficients() const { return coeffs_; }

    Scalar coefficient(IndexMask m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? Scalar(dim_) : it->second;
    }

    void add_term(IndexMask m, const Scalar& c) {
        if (detail::popcount(m) != degree_ || m >= (IndexMask(1) << dim_))
            throw degree_error("coefficient key out of range for this tensor");
        if (c.is_zero()) return;
        auto it = coeffs_.find(m);
        if (it == coeffs_.end()) {
            coeffs_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    AltTensor operator-() const {
        AltTensor r(dim_, degree_);
        for (const auto& [m, c] : coeffs_) r.coeffs_.emplace(m, -c);
        return r;
    }

    AltTensor operator+(const AltTensor& o) const {
        check_compatible(o);
        AltTensor r = *this;
        for (const auto& [m, c] : o.coeffs_) r.add_term(m, c);
        return r;
    }

    AltTensor operator-(const AltTensor& o) const {
        check_compatible(o);
        AltTensor r = *this;
        for (const auto& [m, c] : o.coeffs_) r.add_term(m, -c);
        return r;
    }

    AltTensor operator*(const Scalar& s) const {
        AltTensor r(dim_, degree_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : coeffs_) r.add_term(m, c * s);
        return r;
    }

    AltTensor& operator+=(const AltTensor& o) { return *this = *this + o; }
    AltTensor& operator-=(const AltTensor& o) { return *this = *this - o; }

    bool operator==(const AltTensor& o) const {
        return dim_ == o.dim_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const AltTensor& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (degree_ == 0) return coefficient(0).to_string(names);
        if (coeffs_.empty()) return "0";
        auto name_of = [&](int i) -> std::string {
            if (i < static_cast<int>(names.size())) return names[i];
            return "x" + std::to_string(i);
        };
        std::string out;
        for (const auto& [m, c] : coeffs_) {
            std::string basis;
            for (int i = 0; i < dim_; ++i) {
                if (!(m & (IndexMask(1) << i))) continue;
                if (!basis.empty()) basis += "^";
                basis += std::string(Tag::prefix) + name_of(i);
            }
            if (!out.empty()) out += " + ";
            std::string cs = c.to_string(names);
            if (cs == "1") {
                out += basis;
            } else if (cs == "-1") {
                out += "-" + basis;
            } else {
                bool atomic = !c.is_polynomial() || c.num().terms().size() <= 1;
                out += (atomic ? cs : "(" + cs + ")") + "*" + basis;
            }
        }
        return out;
    }

private:
    int dim_;
    int degree_;
    std::map<IndexMask, Scalar> coeffs_;

    void check_compatible(const AltTensor& o) const {
        if (dim_ != o.dim_) throw chart_mismatch("tensors on different charts");
        if (degree_ != o.degree_) throw degree_error("tensor degrees differ");
    }
};

using Form = AltTensor<detail::FormTag>;
using MultiVector = AltTensor<detail::VectorTag>;

/// Graded-commutative product; returns the zero tensor when degrees exceed dim.
template <class Tag>
AltTensor<Tag> wedge(const AltTensor<Tag>& u, const AltTensor<Tag>& v) {
    if (u.dim() != v.dim()) throw chart_mismatch("wedge across charts");
    AltTensor<Tag> r(u.dim(), u.degree() + v.degree());
    for (const auto& [a, ca] : u.coefficients()) {
        for (const auto& [b, cb] : v.coefficients()) {
            int s = detail::wedge_sign(a, b);
            if (s == 0) continue;
            Scalar c = ca * cb;
            r.add_term(a | b, s > 0 ? c : -c);
        }
    }
    return r;
}

/// d; satisfies d(d(w)) = 0 and the graded Leibniz rule.
Form exterior_derivative(const Form& w);

/// df as a 1-form.
Form differential(const Scalar& f);

/// i_A w for a degree-p multivector into a degree-k form, p <= k.
Form interior_product(const MultiVector& a, const Form& w);

/// Left contraction of a 1-form into a multivector (lowest slot).
MultiVector contract_form(const Form& alpha, const MultiVector& u);

/// The map alpha -> pi(alpha) determined by i_{pi(alpha)} beta = pi(alpha, beta).
MultiVector bivector_apply(const MultiVector& pi, const Form& alpha);

/// U(a1, ..., ap): full evaluation of a p-vector on p one-forms.
Scalar multivector_eval(const MultiVector& u, const std::vector<Form>& alphas);

/// Lie bracket of vector fields (degree-1 multivectors).
MultiVector lie_bracket(const MultiVector& x, const MultiVector& y);

/// X . f  (the vector field acting on a function).
Scalar apply_vector(const MultiVector& x, const Scalar& f);

/// Cartan formula: L_X w = d(i_X w) + i_X(dw).
Form lie_derivative(const MultiVector& x, const Form& w);

/// Schouten-Nijenhuis bracket; extends the Lie bracket, with
/// [Z, pi](alpha) = [Z, pi(alpha)] - pi(L_Z alpha) for vector fields Z.
MultiVector schouten_bracket(const MultiVector& u, const MultiVector& v);

} // namespace e1dirac
