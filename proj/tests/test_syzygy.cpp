#include <doctest.h>

#include "jetinv/motion.hpp"
#include "jetinv/sampling.hpp"
#include "jetinv/syzygy.hpp"

using namespace jetinv;

namespace {

JetPoint quadric_jet(int order = 3) {
    Poly x1 = Poly::x(2, 0), x2 = Poly::x(2, 1);
    return jet_of_polynomial(x1 * x1 + x2 * x2 * Rat(2), {Rat(1), Rat(1)}, order);
}

bool regular_gram(const JetPoint& j) {
    try {
        gram(j);
        return true;
    } catch (const SingularGram&) {
        return false;
    }
}

} // namespace

TEST_CASE("Gram data at the quadric sample") {
    GramData g = gram(quadric_jet());
    CHECK(g.gamma == QMat{{Rat(20), Rat(72)}, {Rat(72), Rat(272)}});
    CHECK(qmat_det(g.gamma) == Rat(256));
    CHECK(qmat_mul(g.gamma, g.gamma_inv) == qmat_identity(2));
    CHECK(g.unit_corner[0][0] == Rat(1));
    CHECK(g.unit_corner[0][1] == Rat(72));
}

TEST_CASE("isotropic Hessian makes the Gram matrix singular") {
    // A = I: the Krylov frame {v, Av} collapses
    Poly iso = Poly::x(2, 0) * Poly::x(2, 0) * rat(1, 2) +
               Poly::x(2, 1) * Poly::x(2, 1) * rat(1, 2) + Poly::x(2, 0);
    JetPoint j = jet_of_polynomial(iso, {Rat(1), Rat(2)}, 2);
    CHECK_THROWS_AS(gram(j), SingularGram);
}

TEST_CASE("Gram entries are invariants") {
    Rng rng(101);
    JetPoint j = random_jet_where(rng, 2, 2, regular_gram);
    GramData g = gram(j);
    for (int t = 0; t < 20; ++t) {
        Motion mo = random_motion(rng, 2);
        GramData gg = gram(prolong_action(mo, j));
        CHECK(gg.gamma == g.gamma);
    }
}

TEST_CASE("main relation: the Leibniz oracle closes exactly") {
    Rng rng(103);
    for (int n : {2, 3}) {
        for (int s : {2, 3}) {
            for (int t = 0; t < 10; ++t) {
                JetPoint j = random_jet_where(rng, n, s + 2, regular_gram);
                int i0 = static_cast<int>(rng.range(0, n - 1));
                std::vector<int> idx;
                for (int q = 0; q < s; ++q)
                    idx.push_back(static_cast<int>(rng.range(0, n - 1)));
                std::sort(idx.begin(), idx.end());
                SyzygyReport rep = verify_main_syzygy(i0, idx, j);
                CHECK(is_zero(rep.residual_oracle));
                // the Gram-expansion form misses exactly the nabla-v terms
                CHECK(rep.residual_gram == rep.a_term);
            }
        }
    }
}

TEST_CASE("main relation on a jet with vanishing third pure jet") {
    // zero out all order-3 coefficients: the Q3 corrections disappear and the
    // residual against the Gram expansion is purely the nabla-v term
    Rng rng(107);
    JetPoint base = random_jet_where(rng, 2, 4, regular_gram);
    std::map<MultiIndex, Rat> coeffs = base.coeffs();
    for (const auto& z : MultiIndex::all_of_order(2, 3)) coeffs[z] = 0;
    JetPoint j(2, 4, base.x(), std::move(coeffs));
    if (regular_gram(j)) {
        SyzygyReport rep = verify_main_syzygy(0, {0, 0}, j);
        CHECK(is_zero(rep.residual_oracle));
        CHECK(rep.residual_gram == rep.a_term);
    }
}

TEST_CASE("main relation guards") {
    Rng rng(109);
    JetPoint j = random_jet_where(rng, 2, 4, regular_gram);
    CHECK_THROWS_AS(verify_main_syzygy(0, {0, 0}, JetPoint::zero(2, 3)), Error);
    CHECK_THROWS_AS(verify_main_syzygy(0, {0}, j), BadConfig);
    CHECK_THROWS_AS(verify_main_syzygy(5, {0, 0}, j), BadConfig);
    CHECK_THROWS_AS(verify_main_syzygy(0, {1, 0}, j), BadConfig);
    CHECK_THROWS_AS(verify_main_syzygy(0, {0, 0, 0}, JetPoint::zero(2, 4)), OrderTooLow);
}

TEST_CASE("low-order relation table closes exactly") {
    Rng rng(113);
    for (int n : {2, 3}) {
        for (int t = 0; t < 10; ++t) {
            JetPoint j = random_jet(rng, n, 3);
            for (const auto& rel : verify_low_order(j)) {
                INFO(rel.name);
                CHECK(is_zero(rel.residual));
            }
        }
    }
    CHECK_THROWS_AS(verify_low_order(JetPoint::zero(2, 2)), OrderTooLow);
}
