#include <e1dirac/dirac.hpp>
#include <e1dirac/structures.hpp>

#include "doctest.h"
#include "support/testgen.hpp"

using namespace e1dirac;
using testgen::Rng;

namespace {

Scalar sc(int n, long c) { return Scalar::constant(n, c); }
Scalar var(int n, int i) { return Scalar::variable(n, i); }
MultiVector vec(int n, int i) { return MultiVector::basis(n, {i}); }
Form one_form(int n, int i) { return Form::basis(n, {i}); }

// contact R^3 (theta = dz - y dx): pi = (Dx + y Dz) ^ Dy, E = Dz
JacobiPair contact_r3() {
    int n = 3;
    return JacobiPair{wedge(vec(n, 0) + vec(n, 2) * var(n, 1), vec(n, 1)), vec(n, 2)};
}

SubBundle lcps_r4_graph() {
    int n = 4;
    Scalar f = Scalar::constant(n, 1) + var(n, 0) * var(n, 0);
    Form omega = Form::basis(n, {2, 3}) * f;
    Form eta = one_form(n, 0) * (f.derivative(0) / f);
    return graph_of_lcps(omega, eta, {f});
}

// omega = (1+x1^2) dx3^dx4, eta = d ln(1+x1^2) on R^4
LcpsPair lcps_r4() {
    int n = 4;
    Scalar f = sc(n, 1) + var(n, 0) * var(n, 0);
    return LcpsPair{Form::basis(n, {2, 3}) * f, one_form(n, 0) * (f.derivative(0) / f)};
}

E1Section random_combination(Rng& rng, const SubBundle& l) {
    E1Section acc = E1Section::zero(l.n);
    for (const auto& g : l.generators)
        acc = acc + g * testgen::random_poly_scalar(rng, l.n, 1, 2);
    return acc;
}

} // namespace

TEST_CASE("lifted graphs of the three classical examples") {
    int n = 2;
    SubBundle closed = graph_of_two_form(Form::basis(n, {0, 1}));
    DiracVerdict v1 = is_dirac(closed);
    CHECK(v1.is_isotropic);
    CHECK(v1.generic_rank == n + 1);
    CHECK(v1.is_maximal);
    CHECK(v1.is_dirac());

    SubBundle poisson = graph_of_bivector(MultiVector::basis(n, {0, 1}));
    CHECK(is_dirac(poisson).is_dirac());

    // omega = x3 dx1^dx2 on R^3 is not closed: obstructed
    int m = 3;
    SubBundle bad = graph_of_two_form(Form::basis(m, {0, 1}) * var(m, 2));
    DiracVerdict v3 = is_dirac(bad);
    CHECK(v3.is_maximal);
    CHECK(v3.is_isotropic);
    CHECK(!v3.closure_obstructions.empty());
    CHECK(!v3.is_dirac());
}

TEST_CASE("maximal isotropy verdicts") {
    int n = 2;
    // TM x R inside E1: generators (Di, 0)+(0,0) and (0,1)+(0,0)
    std::vector<E1Section> gens;
    for (int i = 0; i < n; ++i)
        gens.emplace_back(vec(n, i), Scalar(n), Form(n, 1), Scalar(n));
    gens.emplace_back(MultiVector(n, 1), sc(n, 1), Form(n, 1), Scalar(n));
    SubBundle tm_r(n, gens);
    DiracVerdict v = is_maximal_isotropic(tm_r);
    CHECK(v.is_isotropic);
    CHECK(v.is_maximal);

    SubBundle thin(n, {gens[0]});
    DiracVerdict w = is_maximal_isotropic(thin);
    CHECK(w.is_isotropic);
    CHECK(w.generic_rank == 1);
    CHECK(!w.is_maximal);

    // a non-isotropic pair reports the offending entry
    SubBundle off(n, {E1Section(vec(n, 0), Scalar(n), one_form(n, 0), Scalar(n))});
    DiracVerdict u = is_maximal_isotropic(off);
    CHECK(!u.is_isotropic);
    REQUIRE(u.isotropy_failures.size() == 1);
    CHECK(u.isotropy_failures[0].second == sc(n, 1));
}

TEST_CASE("membership in the Scalar span") {
    int n = 2;
    SubBundle l = graph_of_bivector(MultiVector::basis(n, {0, 1}));
    for (std::size_t i = 0; i < l.generators.size(); ++i) {
        auto w = contains_section(l, l.generators[i]);
        REQUIRE(w.has_value());
        for (std::size_t j = 0; j < w->coefficients.size(); ++j)
            CHECK(w->coefficients[j] == (i == j ? sc(n, 1) : Scalar(n)));
    }

    SubBundle thin(n, {E1Section(vec(n, 0), Scalar(n), Form(n, 1), Scalar(n))});
    CHECK(!contains_section(thin, E1Section(vec(n, 1), Scalar(n), Form(n, 1), Scalar(n)))
               .has_value());

    E1Section combo = l.generators[0] * var(n, 0) +
                      l.generators[1] * (sc(n, 1) + var(n, 1));
    CHECK(contains_section(l, combo).has_value());
}

TEST_CASE("jacobi graphs: the iff pair") {
    JacobiPair good = contact_r3();
    CHECK(check_jacobi(good));
    SubBundle lp = graph_of_jacobi(good.pi, good.e);
    CHECK(is_dirac(lp).is_dirac());

    // (Dx^Dy, Dz) is not Jacobi: [pi,pi]=0 but 2E^pi != 0
    int n = 3;
    JacobiPair bad{MultiVector::basis(n, {0, 1}), vec(n, 2)};
    CHECK(!check_jacobi(bad));
    SubBundle lbad = graph_of_jacobi(bad.pi, bad.e);
    DiracVerdict v = is_dirac(lbad);
    CHECK(v.is_maximal);
    CHECK(v.is_isotropic);
    CHECK(!v.is_dirac());
}

TEST_CASE("lcps graphs: the iff pair") {
    LcpsPair good = lcps_r4();
    CHECK(check_lcps(good));
    SubBundle l = graph_of_lcps(good.omega, good.eta,
                                {sc(4, 1) + var(4, 0) * var(4, 0)});
    CHECK(is_dirac(l).is_dirac());

    // perturb eta by dx2: still closed, but d omega != eta ^ omega
    LcpsPair bad = good;
    bad.eta += one_form(4, 1);
    CHECK(!check_lcps(bad));
    CHECK(!is_dirac(graph_of_lcps(bad.omega, bad.eta)).is_dirac());
}

TEST_CASE("homogeneous graphs: the iff pair") {
    int n = 2;
    MultiVector pi = MultiVector::basis(n, {0, 1});
    HomogeneousPair good{pi, vec(n, 0) * var(n, 0)};
    CHECK(check_homogeneous(good));
    CHECK(is_dirac(graph_of_homogeneous(good.pi, good.z)).is_dirac());

    HomogeneousPair bad{pi, vec(n, 0)};
    CHECK(!check_homogeneous(bad));
    CHECK(!is_dirac(graph_of_homogeneous(bad.pi, bad.z)).is_dirac());
}

TEST_CASE("exact-pair graphs: the iff pair") {
    int n = 2;
    Form omega = Form::basis(n, {0, 1});
    Form alpha = one_form(n, 1) * var(n, 0); // omega = d(x dy)
    CHECK(exterior_derivative(alpha) == omega);
    CHECK(is_dirac(graph_of_exact_pair(omega, alpha)).is_dirac());

    Form alpha_bad = one_form(n, 0) * var(n, 0); // d(x dx) = 0 != omega
    CHECK(!is_dirac(graph_of_exact_pair(omega, alpha_bad)).is_dirac());
}

TEST_CASE("distribution graphs: involutive vs not") {
    int n = 3;
    // span{Dx, Dy} is involutive
    SubBundle good = graph_of_distribution({vec(n, 0), vec(n, 1)});
    CHECK(is_dirac(good).is_dirac());

    // span{Dx, Dy + x Dz} is not involutive
    SubBundle bad = graph_of_distribution({vec(n, 0), vec(n, 1) + vec(n, 2) * var(n, 0)});
    DiracVerdict v = is_dirac(bad);
    CHECK(v.is_maximal);
    CHECK(v.is_isotropic);
    CHECK(!v.is_dirac());
}

TEST_CASE("every constructor yields a maximally isotropic bundle on random payloads") {
    Rng rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        int n = rng.range(2, 3);
        CHECK(is_maximal_isotropic(graph_of_two_form(testgen::random_form(rng, n, 2))).is_isotropic);
        CHECK(is_maximal_isotropic(graph_of_two_form(testgen::random_form(rng, n, 2))).is_maximal);
        SubBundle b = graph_of_bivector(testgen::random_multivector(rng, n, 2));
        DiracVerdict vb = is_maximal_isotropic(b);
        CHECK(vb.is_isotropic);
        CHECK(vb.is_maximal);
        SubBundle j = graph_of_jacobi(testgen::random_multivector(rng, n, 2),
                                      testgen::random_multivector(rng, n, 1));
        DiracVerdict vj = is_maximal_isotropic(j);
        CHECK(vj.is_isotropic);
        CHECK(vj.is_maximal);
        SubBundle lc = graph_of_lcps(testgen::random_form(rng, n, 2),
                                     testgen::random_form(rng, n, 1));
        DiracVerdict vl = is_maximal_isotropic(lc);
        CHECK(vl.is_isotropic);
        CHECK(vl.is_maximal);
        SubBundle h = graph_of_homogeneous(testgen::random_multivector(rng, n, 2),
                                           testgen::random_multivector(rng, n, 1));
        DiracVerdict vh = is_maximal_isotropic(h);
        CHECK(vh.is_isotropic);
        CHECK(vh.is_maximal);
        SubBundle x = graph_of_exact_pair(testgen::random_form(rng, n, 2),
                                          testgen::random_form(rng, n, 1));
        DiracVerdict vx = is_maximal_isotropic(x);
        CHECK(vx.is_isotropic);
        CHECK(vx.is_maximal);
        SubBundle d = graph_of_distribution(
            {testgen::random_multivector(rng, n, 1), vec(n, rng.range(0, n - 1))});
        DiracVerdict vd = is_maximal_isotropic(d);
        CHECK(vd.is_isotropic);
        CHECK(vd.is_maximal);
    }
}

TEST_CASE("generator reduction is sound: random combinations stay closed") {
    Rng rng(59);
    JacobiPair good = contact_r3();
    SubBundle lp = graph_of_jacobi(good.pi, good.e);
    REQUIRE(is_dirac(lp).is_dirac());
    for (int trial = 0; trial < 50; ++trial) {
        E1Section e1 = random_combination(rng, lp);
        E1Section e2 = random_combination(rng, lp);
        E1Section e3 = random_combination(rng, lp);
        CHECK(pair_plus(extended_bracket(e1, e2), e3).is_zero());
    }
}

TEST_CASE("a Dirac structure is a Lie algebroid on sampled sections") {
    Rng rng(61);
    JacobiPair good = contact_r3();
    std::vector<SubBundle> examples = {
        graph_of_jacobi(good.pi, good.e),
        graph_of_bivector(MultiVector::basis(2, {0, 1})),
        lcps_r4_graph(),
    };
    for (const SubBundle& l : examples) {
        for (int trial = 0; trial < 8; ++trial) {
            E1Section e1 = random_combination(rng, l);
            E1Section e2 = random_combination(rng, l);
            E1Section e3 = random_combination(rng, l);
            // Jacobi identity: T vanishes on an isotropic closed sub-bundle
            E1Section jac = extended_bracket(extended_bracket(e1, e2), e3) +
                            extended_bracket(extended_bracket(e2, e3), e1) +
                            extended_bracket(extended_bracket(e3, e1), e2);
            CHECK(jac.is_zero());
            // the anchor preserves brackets
            Scalar h = testgen::random_poly_scalar(rng, l.n);
            Scalar lhs = anchor(extended_bracket(e1, e2), h);
            Scalar rhs = anchor(e1, anchor(e2, h)) - anchor(e2, anchor(e1, h));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("the lift correspondence: closure below iff closure above") {
    int n = 2;
    // closed omega: Courant brackets of graph sections stay in the graph,
    // and the lift is Dirac
    Form omega = Form::basis(n, {0, 1}) * (sc(n, 1) + var(n, 0));
    CHECK(exterior_derivative(omega).is_zero());
    std::vector<CourantSection> graph;
    for (int i = 0; i < n; ++i)
        graph.emplace_back(MultiVector::basis(n, {i}),
                           interior_product(MultiVector::basis(n, {i}), omega));
    SubBundle lifted = lift_to_e1(graph, n);
    CHECK(is_dirac(lifted).is_dirac());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CourantSection b = courant_bracket(graph[i], graph[j]);
            CHECK(contains_section(lifted, b.lift()).has_value());
        }

    // non-closed omega: some Courant bracket leaves the graph, and the lift
    // has a closure obstruction
    int m = 3;
    Form bad = Form::basis(m, {0, 1}) * var(m, 2);
    std::vector<CourantSection> graph_bad;
    for (int i = 0; i < m; ++i)
        graph_bad.emplace_back(MultiVector::basis(m, {i}),
                               interior_product(MultiVector::basis(m, {i}), bad));
    SubBundle lifted_bad = lift_to_e1(graph_bad, m);
    CHECK(!is_dirac(lifted_bad).is_dirac());
    bool escaped = false;
    for (int i = 0; i < m && !escaped; ++i)
        for (int j = 0; j < m && !escaped; ++j)
            if (!contains_section(lifted_bad, courant_bracket(graph_bad[i], graph_bad[j]).lift()))
                escaped = true;
    CHECK(escaped);
}

TEST_CASE("the homogeneous-graph bracket computation, componentwise") {
    // [(pi a, 0)+(a, i_Z a), (Z,-1)+(0,0)] has components
    //   X = [pi a, Z],  f = 0,  alpha = a - L_Z a,  g = i_Z(a - L_Z a)
    // so membership in L_(pi,Z) reduces to [Z,pi] a = -pi a.
    Rng rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        int n = rng.range(2, 3);
        MultiVector pi = testgen::random_multivector(rng, n, 2);
        MultiVector z = testgen::random_multivector(rng, n, 1);
        Form a = testgen::random_form(rng, n, 1);
        Scalar iza = interior_product(z, a).coefficient(0);
        E1Section e1(bivector_apply(pi, a), Scalar(n), a, iza);
        E1Section e2(z, sc(n, -1), Form(n, 1), Scalar(n));
        E1Section b = extended_bracket(e1, e2);
        Form beta = a - lie_derivative(z, a);
        CHECK(b.x == lie_bracket(bivector_apply(pi, a), z));
        CHECK(b.f.is_zero());
        CHECK(b.alpha == beta);
        CHECK(b.g == interior_product(z, beta).coefficient(0));
    }
}

TEST_CASE("constructor and operation error paths") {
    int n = 2;
    CHECK_THROWS_AS(graph_of_two_form(Form(n, 1)), degree_error);
    CHECK_THROWS_AS(graph_of_bivector(MultiVector(n, 1)), degree_error);
    CHECK_THROWS_AS(graph_of_jacobi(MultiVector(n, 2), MultiVector(n, 2)), degree_error);
    CHECK_THROWS_AS(graph_of_lcps(Form(n, 2), Form(n, 2)), degree_error);
    CHECK_THROWS_AS(graph_of_homogeneous(MultiVector(n, 2), MultiVector(3, 1)),
                    chart_mismatch);
    CHECK_THROWS_AS(graph_of_exact_pair(Form(n, 1), Form(n, 1)), degree_error);
    CHECK_THROWS_AS(SubBundle(n, {}), error);
    CHECK_THROWS_AS(wedge(Form(2, 1), Form(3, 1)), chart_mismatch);
    CHECK_THROWS_AS(lie_bracket(MultiVector(n, 2), MultiVector(n, 1)), degree_error);
    E1Section a = E1Section::zero(2), b = E1Section::zero(3);
    CHECK_THROWS_AS(pair_plus(a, b), chart_mismatch);
    CHECK_THROWS_AS(extended_bracket(a, b), chart_mismatch);
}
