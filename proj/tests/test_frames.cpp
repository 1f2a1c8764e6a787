#include <doctest.h>

#include <cmath>

#include "jetinv/frames.hpp"
#include "jetinv/sampling.hpp"

using namespace jetinv;

namespace {

JetPoint quadric_jet(int order = 3) {
    Poly x1 = Poly::x(2, 0), x2 = Poly::x(2, 1);
    return jet_of_polynomial(x1 * x1 + x2 * x2 * Rat(2), {Rat(1), Rat(1)}, order);
}

} // namespace

TEST_CASE("v-field coefficients") {
    auto vf = v_fields(2);
    REQUIRE(vf.size() == 2);
    CHECK(vf[0].coeff[0].num() == Poly::p(2, MultiIndex(2).plus(0)));
    CHECK(vf[0].coeff[1].num() == Poly::p(2, MultiIndex(2).plus(1)));

    JetPoint j = quadric_jet();
    CHECK(vf[1].coeff_at(j) == QVec{Rat(4), Rat(16)}); // A v with A=diag(2,4), v=(2,4)

    JetPoint lin = jet_of_polynomial(Poly::x(2, 0), {Rat(0), Rat(0)}, 2);
    CHECK(vf[1].coeff_at(lin) == QVec{Rat(0), Rat(0)});
}

TEST_CASE("apply_derivation identities") {
    Rng rng(41);
    for (int n : {2, 3}) {
        auto vf = v_fields(n);
        JetExpr i0 = invariant_expr(InvariantId::i0(), n);
        JetExpr i1 = invariant_expr(InvariantId::i1(), n);
        for (int t = 0; t < 20; ++t) {
            JetPoint j = random_jet(rng, n, 3);
            CHECK(apply_derivation(vf[0], i0, j) == eval_invariant(InvariantId::i1(), j));
            CHECK(apply_derivation(vf[1], i1, j) ==
                  2 * eval_invariant(InvariantId::i2_pair(2), j));
        }
        // constants are annihilated
        JetPoint j = random_jet(rng, n, 3);
        CHECK(apply_derivation(vf[0], JetExpr::constant(n, rat(3, 7)), j) == Rat(0));
    }
    CHECK_THROWS_AS(apply_derivation(v_fields(2)[0], invariant_expr(InvariantId::i1(), 2),
                                     JetPoint::zero(2, 1)),
                    OrderTooLow);
}

TEST_CASE("eigen frame on diagonal and off-diagonal samples") {
    EigenFrame fr = eigen_frame(quadric_jet(2));
    CHECK(fr.lambda[0] == doctest::Approx(2.0));
    CHECK(fr.lambda[1] == doctest::Approx(4.0));
    CHECK(fr.vectors[0][0] == doctest::Approx(1.0));
    CHECK(fr.vectors[1][1] == doctest::Approx(1.0));

    JetPoint mixed = jet_of_polynomial(Poly::x(2, 0) * Poly::x(2, 1), {Rat(0), Rat(0)}, 2);
    EigenFrame fm = eigen_frame(mixed);
    CHECK(fm.lambda[0] == doctest::Approx(-1.0));
    CHECK(fm.lambda[1] == doctest::Approx(1.0));
    double r = 1.0 / std::sqrt(2.0);
    CHECK(fm.vectors[0][0] == doctest::Approx(r));  // (1,-1)/sqrt2, first entry positive
    CHECK(fm.vectors[1][0] == doctest::Approx(-r));
    CHECK(fm.vectors[0][1] == doctest::Approx(r));
    CHECK(fm.vectors[1][1] == doctest::Approx(r));

    // reconstruction oracle on random symmetric data
    Rng rng(43);
    for (int t = 0; t < 10; ++t) {
        JetPoint j = random_jet_where(rng, 3, 2, [](const JetPoint& cand) {
            try {
                eigen_frame(cand);
                return true;
            } catch (const DegenerateSpectrum&) {
                return false;
            }
        });
        EigenFrame fr3 = eigen_frame(j);
        DMat a = dmat_of(operator_A(j));
        for (int r2 = 0; r2 < 3; ++r2)
            for (int c = 0; c < 3; ++c) {
                double acc = 0;
                for (int k = 0; k < 3; ++k)
                    acc += fr3.lambda[static_cast<std::size_t>(k)] *
                           fr3.vectors[static_cast<std::size_t>(r2)][static_cast<std::size_t>(k)] *
                           fr3.vectors[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
                CHECK(std::fabs(acc - a[static_cast<std::size_t>(r2)]
                                        [static_cast<std::size_t>(c)]) < 1e-9);
            }
    }

    // degenerate spectrum rejected
    Poly iso = Poly::x(2, 0) * Poly::x(2, 0) + Poly::x(2, 1) * Poly::x(2, 1);
    CHECK_THROWS_AS(eigen_frame(jet_of_polynomial(iso, {Rat(0), Rat(0)}, 2)),
                    DegenerateSpectrum);
}

TEST_CASE("eigen frames are orthonormal within 1e-12") {
    Rng rng(211);
    for (int n : {2, 3, 4}) {
        for (int t = 0; t < 5; ++t) {
            JetPoint j = random_jet_where(rng, n, 2, [](const JetPoint& cand) {
                try {
                    eigen_frame(cand);
                    return true;
                } catch (const DegenerateSpectrum&) {
                    return false;
                }
            });
            EigenFrame fr = eigen_frame(j);
            CHECK(fr.gap > 1e-8);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    double dot = 0;
                    for (int i = 0; i < n; ++i)
                        dot += fr.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                               fr.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
                    CHECK(std::fabs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
                }
        }
    }
}

TEST_CASE("Tresse derivatives") {
    int n = 2;
    std::vector<JetExpr> basis{invariant_expr(InvariantId::i1(), n),
                               invariant_expr(InvariantId::i2_pair(1), n)};
    Rng rng(47);
    JetPoint j = random_jet_where(rng, n, 3, [&](const JetPoint& cand) {
        QMat m = qmat_zero(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    eval_total_derivative_at(basis[static_cast<std::size_t>(b)], a, cand);
        return !is_zero(qmat_det(m));
    });
    CHECK(tresse_derivative(basis[0], basis, j) == QVec{Rat(1), Rat(0)});
    CHECK(tresse_derivative(basis[1], basis, j) == QVec{Rat(0), Rat(1)});
    CHECK(tresse_derivative(JetExpr::constant(n, Rat(9)), basis, j) == QVec{Rat(0), Rat(0)});

    // reconstruction identity for several targets
    for (const auto& id : {InvariantId::i2_tr(1), InvariantId::i2_tr(2), InvariantId::i0()}) {
        JetExpr target = invariant_expr(id, n);
        QVec c = tresse_derivative(target, basis, j);
        for (int k = 0; k < n; ++k) {
            Rat lhs = eval_total_derivative_at(target, k, j);
            Rat rhs = 0;
            for (int b = 0; b < n; ++b)
                rhs += c[static_cast<std::size_t>(b)] *
                       eval_total_derivative_at(basis[static_cast<std::size_t>(b)], k, j);
            CHECK(lhs == rhs);
        }
    }

    // dependent basis rejected by the exact determinant test
    std::vector<JetExpr> dep{basis[0], basis[0] * basis[0]};
    CHECK_THROWS_AS(tresse_derivative(basis[1], dep, j), DependentBasis);
}

TEST_CASE("commutators, algebraic") {
    int n = 2;
    auto vf = v_fields(n);
    DerivationField zero_bracket = commutator(vf[0], vf[0]);
    for (const auto& c : zero_bracket.coeff) CHECK(c.is_zero());

    DerivationField flat1{{JetExpr::constant(n, Rat(1)), JetExpr::constant(n, Rat(0))}};
    DerivationField flat2{{JetExpr::constant(n, Rat(0)), JetExpr::constant(n, Rat(1))}};
    for (const auto& c : commutator(flat1, flat2).coeff) CHECK(c.is_zero());
}

TEST_CASE("commutator matches the x-space Jacobian oracle") {
    // On the holonomic section of a polynomial source the v-fields become
    // fields on x-space; check [v1,v2] against J_w2 w1 - J_w1 w2 computed by
    // exact differentiation of the composed coefficient functions.
    int n = 2;
    Poly source = Poly::x(n, 0).pow(3) + Poly::x(n, 1).pow(3) * rat(1, 2) +
                  Poly::x(n, 0) * Poly::x(n, 1) * Poly::x(n, 1) + Poly::x(n, 0) * rat(2, 3);
    auto vf = v_fields(n);
    DerivationField br = commutator(vf[0], vf[1]);

    // compose coefficients with the jet map symbolically (exact oracle)
    int need = 4; // commutator coefficients live on 3-jets; play safe
    std::map<Var, Poly> partials;
    for (const auto& z : MultiIndex::all_up_to(n, need)) {
        Poly d = source;
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < z[i]; ++r) d = d.derivative(var_x(i));
        partials[var_p(z)] = d;
    }
    auto compose = [&](const JetExpr& e) {
        Poly out(n);
        for (const auto& [mon, c] : e.num().terms()) {
            Poly term = Poly::constant(n, c);
            for (const auto& [v, exp] : mon)
                for (int r = 0; r < exp; ++r)
                    term = term * (var_is_x(v) ? Poly::x(n, var_x_index(v)) : partials.at(v));
            out += term;
        }
        return out;
    };
    std::vector<Poly> w1, w2, wb;
    for (int m = 0; m < n; ++m) {
        w1.push_back(compose(vf[0].coeff[static_cast<std::size_t>(m)]));
        w2.push_back(compose(vf[1].coeff[static_cast<std::size_t>(m)]));
        wb.push_back(compose(br.coeff[static_cast<std::size_t>(m)]));
    }
    Rng rng(61);
    for (int t = 0; t < 5; ++t) {
        QVec x0{rng.rat_small(), rng.rat_small()};
        auto at = [&](const Poly& p) {
            return p.eval([&](Var v) { return x0[static_cast<std::size_t>(var_x_index(v))]; });
        };
        for (int m = 0; m < n; ++m) {
            Rat oracle = 0;
            for (int k = 0; k < n; ++k)
                oracle += at(w1[static_cast<std::size_t>(k)]) *
                              at(w2[static_cast<std::size_t>(m)].derivative(var_x(k))) -
                          at(w2[static_cast<std::size_t>(k)]) *
                              at(w1[static_cast<std::size_t>(m)].derivative(var_x(k)));
            CHECK(at(wb[static_cast<std::size_t>(m)]) == oracle);
        }
    }
}

TEST_CASE("structure constants of the v-frame") {
    Rng rng(67);
    int n = 2;
    auto vf = v_fields(n);
    JetPoint j = random_jet_where(rng, n, 4, [&](const JetPoint& cand) {
        QMat m = qmat_zero(n, n);
        for (int k = 0; k < n; ++k) {
            QVec ck = vf[static_cast<std::size_t>(k)].coeff_at(cand);
            for (int r = 0; r < n; ++r)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                    ck[static_cast<std::size_t>(r)];
        }
        return !is_zero(qmat_det(m));
    });
    StructureConstants sc = structure_constants(vf, j);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            for (int k = 0; k < n; ++k) CHECK(sc.at(i, jj, k) == -sc.at(jj, i, k));

    // the defining residual: [v_i,v_j](j) = sum_k c_ij^k v_k(j), exactly
    DerivationField br = commutator(vf[0], vf[1]);
    QVec lhs = br.coeff_at(j);
    QVec rhs(static_cast<std::size_t>(n), Rat(0));
    for (int k = 0; k < n; ++k) {
        QVec vk = vf[static_cast<std::size_t>(k)].coeff_at(j);
        for (int m = 0; m < n; ++m)
            rhs[static_cast<std::size_t>(m)] += sc.at(0, 1, k) * vk[static_cast<std::size_t>(m)];
    }
    CHECK(lhs == rhs);

    // flat constant frame: all zeros
    DerivationField f1{{JetExpr::constant(n, Rat(1)), JetExpr::constant(n, Rat(2))}};
    DerivationField f2{{JetExpr::constant(n, Rat(3)), JetExpr::constant(n, Rat(5))}};
    StructureConstants flat = structure_constants({f1, f2}, j);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            for (int k = 0; k < n; ++k) CHECK(is_zero(flat.at(i, jj, k)));
}

TEST_CASE("eigenframe structure constants are antisymmetric") {
    Rng rng(71);
    JetPoint j = random_jet_where(rng, 2, 3, [](const JetPoint& cand) {
        try {
            eigen_frame(cand);
            return true;
        } catch (const DegenerateSpectrum&) {
            return false;
        }
    });
    auto c = eframe_structure_constants(j);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t jj = 0; jj < 2; ++jj)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(c[i][jj][k] == doctest::Approx(-c[jj][i][k]).epsilon(1e-12));
}
