#include <doctest.h>

#include "jetinv/jetpoint.hpp"
#include "jetinv/sampling.hpp"

using namespace jetinv;

namespace {

// x1^2 + 2 x2^2 as a source polynomial
Poly quadric_source() {
    Poly x1 = Poly::x(2, 0), x2 = Poly::x(2, 1);
    return x1 * x1 + x2 * x2 * Rat(2);
}

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

} // namespace

TEST_CASE("jet of a linear source") {
    Poly x1 = Poly::x(2, 0);
    JetPoint j = jet_of_polynomial(x1, {Rat(0), Rat(0)}, 1);
    CHECK(j.u() == Rat(0));
    CHECK(j.coeff(mi({1, 0})) == Rat(1));
    CHECK(j.coeff(mi({0, 1})) == Rat(0));
}

TEST_CASE("jet of x1^2 + 2 x2^2 at (1,1), order 3") {
    JetPoint j = jet_of_polynomial(quadric_source(), {Rat(1), Rat(1)}, 3);
    CHECK(j.u() == Rat(3));
    CHECK(j.grad() == QVec{Rat(2), Rat(4)});
    CHECK(j.coeff(mi({2, 0})) == Rat(2));
    CHECK(j.coeff(mi({0, 2})) == Rat(4));
    CHECK(j.coeff(mi({1, 1})) == Rat(0));
    for (const auto& z : MultiIndex::all_of_order(2, 3)) CHECK(j.coeff(z) == Rat(0));
}

TEST_CASE("jet of a constant") {
    Poly c = Poly::constant(3, rat(7, 3));
    JetPoint j = jet_of_polynomial(c, {Rat(1), Rat(2), Rat(3)}, 2);
    CHECK(j.u() == rat(7, 3));
    for (const auto& z : MultiIndex::all_up_to(3, 2))
        if (z.order() >= 1) CHECK(j.coeff(z) == Rat(0));
}

TEST_CASE("pure jets of the quadric sample") {
    JetPoint j = jet_of_polynomial(quadric_source(), {Rat(1), Rat(1)}, 3);
    auto q = pure_jets(j);
    CHECK(q[0].comp(mi({0, 0})) == Rat(3));
    CHECK(q[1].comp(mi({1, 0})) == Rat(2));
    CHECK(q[1].comp(mi({0, 1})) == Rat(4));
    // Q2 as a quadratic form: Q2(w,w) = 2 w1^2 + 4 w2^2
    QVec w{Rat(1), Rat(2)};
    CHECK(q[2].eval({w, w}) == Rat(2) + Rat(16));
    // zero covector on a constant source
    JetPoint jc = jet_of_polynomial(Poly::constant(2, Rat(5)), {Rat(0), Rat(0)}, 2);
    auto qc = pure_jets(jc);
    CHECK(qc[1].eval({w}) == Rat(0));
}

TEST_CASE("pure jets reproduce analytic partials for monomials up to degree 5") {
    // d^zeta x^a at x0 is prod a_i!/(a_i-z_i)! * x0^(a-z)
    QVec x0{rat(1, 2), rat(-2, 3)};
    for (int a1 = 0; a1 + 0 <= 5; ++a1) {
        for (int a2 = 0; a1 + a2 <= 5; ++a2) {
            Poly mono = Poly::x(2, 0).pow(a1) * Poly::x(2, 1).pow(a2);
            JetPoint j = jet_of_polynomial(mono, x0, 5);
            for (const auto& z : MultiIndex::all_up_to(2, 5)) {
                Rat expect = 0;
                if (z[0] <= a1 && z[1] <= a2) {
                    expect = 1;
                    for (int r = 0; r < z[0]; ++r) expect *= a1 - r;
                    for (int r = 0; r < z[1]; ++r) expect *= a2 - r;
                    for (int r = 0; r < a1 - z[0]; ++r) expect *= x0[0];
                    for (int r = 0; r < a2 - z[1]; ++r) expect *= x0[1];
                }
                CHECK(j.coeff(z) == expect);
            }
        }
    }
}

TEST_CASE("total derivative basics") {
    int n = 2;
    JetExpr u = JetExpr::u(n);
    JetExpr d1u = u.total_derivative(0);
    CHECK(d1u.num() == Poly::p(n, mi({1, 0})));

    JetExpr x1 = JetExpr::x(n, 0);
    CHECK(x1.total_derivative(0).num() == Poly::constant(n, 1));
    CHECK(x1.total_derivative(1).num().is_zero());

    // I1 = sum p_i^2;  D_j I1 = 2 sum_i p_i p_{i j}
    Poly i1(n);
    for (int i = 0; i < n; ++i) {
        Poly pi = Poly::p(n, MultiIndex(n).plus(i));
        i1 += pi * pi;
    }
    for (int j = 0; j < n; ++j) {
        Poly expect(n);
        for (int i = 0; i < n; ++i)
            expect += Poly::p(n, MultiIndex(n).plus(i)) *
                      Poly::p(n, MultiIndex(n).plus(i).plus(j)) * Rat(2);
        CHECK(i1.total_derivative(j) == expect);
    }
}

TEST_CASE("total derivatives commute as operators") {
    int n = 2;
    // basis of monomials in jet variables of order <= 4 (degree <= 2 products)
    std::vector<Poly> basis;
    for (const auto& z : MultiIndex::all_up_to(n, 4)) basis.push_back(Poly::p(n, z));
    basis.push_back(Poly::x(n, 0));
    basis.push_back(Poly::x(n, 1));
    for (std::size_t a = 0; a < basis.size(); a += 3)
        for (std::size_t b = a; b < basis.size(); b += 4) {
            Poly m = basis[a] * basis[b];
            CHECK(m.total_derivative(0).total_derivative(1) ==
                  m.total_derivative(1).total_derivative(0));
        }
}

TEST_CASE("horizontal differential") {
    int n = 3;
    JetExpr u = JetExpr::u(n);
    auto d = u.horizontal_differential();
    REQUIRE(d.size() == 3);
    for (int i = 0; i < n; ++i) CHECK(d[static_cast<std::size_t>(i)].num() ==
                                      Poly::p(n, MultiIndex(n).plus(i)));
    auto dc = JetExpr::constant(n, rat(5, 7)).horizontal_differential();
    for (const auto& e : dc) CHECK(e.is_zero());
}

TEST_CASE("evaluation of D_i e matches the derivative of the evaluation map") {
    // exact chain-rule check on polynomial sources
    Rng rng(2024);
    int n = 2;
    Poly source = Poly::x(n, 0).pow(3) * Rat(2) + Poly::x(n, 0) * Poly::x(n, 1) * rat(1, 3) +
                  Poly::x(n, 1).pow(4);
    // e = u * p_{10} + p_{01}^2
    Poly e = Poly::u(n) * Poly::p(n, mi({1, 0})) + Poly::p(n, mi({0, 1})) * Poly::p(n, mi({0, 1}));
    int k = e.jet_order();

    // compose symbolically: substitute p_zeta -> d^zeta source
    std::map<Var, Poly> partials;
    for (const auto& z : MultiIndex::all_up_to(n, k + 1)) {
        Poly d = source;
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < z[i]; ++r) d = d.derivative(var_x(i));
        partials[var_p(z)] = d;
    }
    for (int dir = 0; dir < n; ++dir) {
        Poly composed(n);
        for (const auto& [mon, c] : e.terms()) {
            Poly term = Poly::constant(n, c);
            for (const auto& [v, exp] : mon)
                for (int r = 0; r < exp; ++r)
                    term = term * (var_is_x(v) ? Poly::x(n, var_x_index(v)) : partials.at(v));
            composed += term;
        }
        Poly composed_dx = composed.derivative(var_x(dir));
        for (int trial = 0; trial < 5; ++trial) {
            QVec x0{rng.rat_small(), rng.rat_small()};
            JetPoint j = jet_of_polynomial(source, x0, k + 1);
            Rat lhs = JetExpr(e).eval_total_derivative(dir, [&](Var v) { return j.value_of(v); });
            Rat rhs = composed_dx.eval([&](Var v) {
                return x0[static_cast<std::size_t>(var_x_index(v))];
            });
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("symbolic and pointwise total derivatives agree") {
    Rng rng(7);
    int n = 3;
    for (int t = 0; t < 10; ++t) {
        JetPoint j = random_jet(rng, n, 3);
        Poly e(n);
        for (const auto& z : MultiIndex::all_up_to(n, 2)) e += Poly::p(n, z) * rng.rat_small();
        e = e * e;
        JetExpr ex(e);
        for (int dir = 0; dir < n; ++dir)
            CHECK(eval_at(ex.total_derivative(dir), j) ==
                  eval_total_derivative_at(ex, dir, j));
    }
}

TEST_CASE("jet JSON round trip is bit exact") {
    Rng rng(99);
    JetPoint j = random_jet(rng, 2, 3);
    std::string s = j.to_json();
    JetPoint back = JetPoint::from_json(s);
    CHECK(back == j);
    CHECK(back.to_json() == s);

    // the documented shape
    JetPoint sample = JetPoint::from_json(
        R"({"n":2,"order":2,"x":["1","1"],"coeffs":{"0,0":"3","1,0":"2","0,1":"4","2,0":"2","1,1":"0","0,2":"4"}})");
    CHECK(sample.u() == Rat(3));
    CHECK(sample.coeff(mi({2, 0})) == Rat(2));
}

TEST_CASE("jet expression quotients") {
    int n = 2;
    JetExpr u = JetExpr::u(n);
    JetExpr p = JetExpr::p(n, mi({1, 0}));
    JetExpr q = u / p;
    CHECK((q * p).equals(u));
    JetPoint j = JetPoint::zero(2, 1); // p_{10} = 0 there
    CHECK_THROWS_AS(eval_at(q, j), Error);
    // quotient rule: D(u/p) = (D(u) p - u D(p)) / p^2
    JetExpr d = q.total_derivative(0);
    JetExpr expect = (u.total_derivative(0) * p - u * p.total_derivative(0)) / (p * p);
    CHECK(d.equals(expect));
}

TEST_CASE("order bookkeeping") {
    int n = 2;
    JetExpr e = JetExpr::p(n, mi({2, 1}));
    CHECK(e.jet_order() == 3);
    CHECK(e.total_derivative(0).jet_order() == 4);
    JetPoint j = JetPoint::zero(2, 2);
    CHECK_THROWS_AS(eval_at(e, j), OrderTooLow);
}
