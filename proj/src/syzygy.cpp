#include "jetinv/syzygy.hpp"

namespace jetinv {

GramData gram(const JetPoint& j) {
    int n = j.n();
    QMat a = operator_A(j);
    QVec v = j.grad();
    std::vector<QVec> av{v};
    for (int k = 1; k <= 2 * (n - 1); ++k) av.push_back(qmat_vec(a, av.back()));

    GramData g;
    g.gamma = qmat_zero(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            g.gamma[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                qvec_dot(av[static_cast<std::size_t>(r)], av[static_cast<std::size_t>(c)]);
    g.unit_corner = g.gamma;
    g.unit_corner[0][0] = 1;
    auto inv = qmat_inverse(g.gamma);
    if (!inv) throw SingularGram("Gram matrix of the Krylov frame is singular");
    g.gamma_inv = *inv;
    return g;
}

namespace {

/// Shared evaluation context: A-powers applied to v, pure jet tensors.
struct SyzygyCtx {
    int n;
    QMat a;
    std::vector<QVec> av; // av[k] = A^k v
    std::vector<SymTensor> q;

    explicit SyzygyCtx(const JetPoint& j)
        : n(j.n()), a(operator_A(j)), q(pure_jets(j)) {
        av.push_back(j.grad());
        for (int k = 1; k <= 3 * n; ++k) av.push_back(qmat_vec(a, av.back()));
    }

    Rat qs(int s, const std::vector<QVec>& vecs) const {
        return q[static_cast<std::size_t>(s)].eval(vecs);
    }

    /// I_{s,(tuple)} with arbitrary (possibly >= n) power indices.
    Rat is_pair_raw(const std::vector<int>& tuple) const {
        std::vector<QVec> vecs;
        for (int t : tuple) vecs.push_back(av[static_cast<std::size_t>(t)]);
        return qs(static_cast<int>(tuple.size()), vecs);
    }
};

} // namespace

SyzygyReport verify_main_syzygy(int i0, const std::vector<int>& idx, const JetPoint& j) {
    int n = j.n();
    int s = static_cast<int>(idx.size());
    if (s < 2) throw BadConfig("main relation needs s >= 2");
    if (i0 < 0 || i0 >= n) throw BadConfig("i0 must be in 0..n-1");
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= n) throw BadConfig("indices must be in 0..n-1");
        if (k && idx[k - 1] > idx[k]) throw BadConfig("indices must be non-decreasing");
    }
    if (j.order() < s + 2)
        throw OrderTooLow("main relation at s = " + std::to_string(s) + " needs order " +
                          std::to_string(s + 2));

    GramData g = gram(j);
    SyzygyCtx ctx(j);

    // lhs: differentiate the full contraction expression
    auto vf = v_fields(n);
    JetExpr target = invariant_expr(InvariantId::is_pair(idx), n);
    SyzygyReport rep;
    rep.lhs = apply_derivation(vf[static_cast<std::size_t>(i0)], target, j);

    // Gram-expansion right-hand side: the derivative expressed through
    // third-order invariants contracted with the inverse Gram matrix
    {
        std::vector<int> full{i0};
        full.insert(full.end(), idx.begin(), idx.end());
        Rat acc = ctx.is_pair_raw(full); // I_{s+1,(i0 i1..is)}
        for (int jslot = 0; jslot < s; ++jslot) {
            int ij = idx[static_cast<std::size_t>(jslot)];
            for (int al = 0; al + 1 <= ij; ++al) {
                int be = ij - 1 - al;
                for (int a = 0; a < n; ++a) {
                    std::vector<int> rep_idx = idx;
                    rep_idx[static_cast<std::size_t>(jslot)] = a;
                    Rat is_term = ctx.is_pair_raw(rep_idx);
                    if (is_zero(is_term)) continue;
                    for (int b = 0; b < n; ++b) {
                        const Rat& gab = g.gamma_inv[static_cast<std::size_t>(a)]
                                                    [static_cast<std::size_t>(b)];
                        if (is_zero(gab)) continue;
                        Rat i3 = ctx.qs(3, {ctx.av[static_cast<std::size_t>(i0)],
                                            ctx.av[static_cast<std::size_t>(al)],
                                            ctx.av[static_cast<std::size_t>(b + be)]});
                        acc += is_term * gab * i3;
                    }
                }
            }
        }
        rep.rhs_gram = acc;
    }

    // independent Leibniz oracle: differentiate only the vector legs
    {
        std::vector<int> full{i0};
        full.insert(full.end(), idx.begin(), idx.end());
        Rat acc = ctx.is_pair_raw(full); // Q_{s+1}(w, ...)
        const QVec& w = ctx.av[static_cast<std::size_t>(i0)];

        // component expressions of A^k v, differentiated along w
        for (int jslot = 0; jslot < s; ++jslot) {
            int ij = idx[static_cast<std::size_t>(jslot)];
            // theta_m = sum_l w_l D_l (A^{ij} v)_m evaluated at j
            QVec theta(static_cast<std::size_t>(n), Rat(0));
            auto avec_expr = [&](int k) {
                std::vector<JetExpr> comp;
                auto aexpr = operator_A_expr(n);
                for (int m = 0; m < n; ++m) comp.push_back(JetExpr::p(n, MultiIndex(n).plus(m)));
                for (int r = 0; r < k; ++r) {
                    std::vector<JetExpr> next(static_cast<std::size_t>(n),
                                              JetExpr::constant(n, 0));
                    for (int mm = 0; mm < n; ++mm)
                        for (int cc = 0; cc < n; ++cc)
                            next[static_cast<std::size_t>(mm)] +=
                                aexpr[static_cast<std::size_t>(mm)][static_cast<std::size_t>(cc)] *
                                comp[static_cast<std::size_t>(cc)];
                    comp = std::move(next);
                }
                return comp;
            };
            auto comp = avec_expr(ij);
            for (int m = 0; m < n; ++m)
                for (int l = 0; l < n; ++l) {
                    if (is_zero(w[static_cast<std::size_t>(l)])) continue;
                    theta[static_cast<std::size_t>(m)] +=
                        w[static_cast<std::size_t>(l)] *
                        eval_total_derivative_at(comp[static_cast<std::size_t>(m)], l, j);
                }
            std::vector<QVec> vecs;
            for (int t = 0; t < s; ++t)
                vecs.push_back(t == jslot ? theta
                                          : ctx.av[static_cast<std::size_t>(
                                                idx[static_cast<std::size_t>(t)])]);
            acc += ctx.qs(s, vecs);
        }
        rep.rhs_oracle = acc;
    }

    // the nabla-v contribution that the Gram-expansion form does not carry
    {
        Rat acc = 0;
        for (int jslot = 0; jslot < s; ++jslot) {
            std::vector<QVec> vecs;
            for (int t = 0; t < s; ++t) {
                int power = (t == jslot) ? i0 + idx[static_cast<std::size_t>(t)] + 1
                                         : idx[static_cast<std::size_t>(t)];
                vecs.push_back(ctx.av[static_cast<std::size_t>(power)]);
            }
            acc += ctx.qs(s, vecs);
        }
        rep.a_term = acc;
    }

    rep.residual_gram = rep.lhs - rep.rhs_gram;
    rep.residual_oracle = rep.lhs - rep.rhs_oracle;
    return rep;
}

std::vector<RelationRecord> verify_low_order(const JetPoint& j) {
    int n = j.n();
    if (j.order() < 3) throw OrderTooLow("low-order relation table needs a 3-jet");
    SyzygyCtx ctx(j);
    auto vf = v_fields(n);
    std::vector<RelationRecord> out;

    auto i2_pair_raw = [&](int i) { // <A^i v, v> for any i >= 0
        return qvec_dot(ctx.av[static_cast<std::size_t>(i)], ctx.av[0]);
    };
    auto i3_trace_raw = [&](int a, int b, int k) { // Tr(Q3(A^a ., A^b ., A^k v))
        Rat acc = 0;
        auto apows = qmat_powers(ctx.a, std::max(a, b));
        for (int col = 0; col < n; ++col) {
            QVec ea(static_cast<std::size_t>(n), Rat(0)), eb(static_cast<std::size_t>(n), Rat(0));
            for (int r = 0; r < n; ++r) {
                ea[static_cast<std::size_t>(r)] = apows[static_cast<std::size_t>(a)]
                    [static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                eb[static_cast<std::size_t>(r)] = apows[static_cast<std::size_t>(b)]
                    [static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            }
            acc += ctx.qs(3, {ea, eb, ctx.av[static_cast<std::size_t>(k)]});
        }
        return acc;
    };

    for (int i = 1; i <= n; ++i) {
        Rat lhs = apply_derivation(vf[static_cast<std::size_t>(i - 1)],
                                   invariant_expr(InvariantId::i0(), n), j);
        Rat rhs = i2_pair_raw(i - 1);
        out.push_back({"v" + std::to_string(i) + ".I0", lhs, rhs, lhs - rhs, true});
    }
    for (int i = 1; i <= n; ++i) {
        Rat lhs = apply_derivation(vf[static_cast<std::size_t>(i - 1)],
                                   invariant_expr(InvariantId::i1(), n), j);
        Rat rhs = 2 * i2_pair_raw(i);
        out.push_back({"v" + std::to_string(i) + ".I1", lhs, rhs, lhs - rhs, true});
    }
    for (int k = 0; k < n; ++k) {
        for (int l = 1; l <= n; ++l) {
            // trace family
            Rat lhs = apply_derivation(vf[static_cast<std::size_t>(k)],
                                       invariant_expr(InvariantId::i2_tr(l), n), j);
            Rat rhs = 0;
            for (int al = 0; al + 1 <= l; ++al) rhs += i3_trace_raw(al, l - 1 - al, k);
            out.push_back({"v" + std::to_string(k + 1) + ".I2_tr:" + std::to_string(l), lhs, rhs,
                           lhs - rhs, false});
            // pair family
            JetExpr pair_expr = invariant_expr(InvariantId::i2_pair(l), n);
            Rat lhs2 = apply_derivation(vf[static_cast<std::size_t>(k)], pair_expr, j);
            Rat rhs2 = 2 * i2_pair_raw(k + l + 1);
            for (int al = 0; al + 1 <= l; ++al)
                rhs2 += ctx.qs(3, {ctx.av[static_cast<std::size_t>(al)],
                                   ctx.av[static_cast<std::size_t>(l - 1 - al)],
                                   ctx.av[static_cast<std::size_t>(k)]});
            out.push_back({"v" + std::to_string(k + 1) + ".I2_pair:" + std::to_string(l), lhs2,
                           rhs2, lhs2 - rhs2, false});
        }
    }
    return out;
}

} // namespace jetinv
