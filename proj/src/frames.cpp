#include "jetinv/frames.hpp"

#include <cmath>
#include <limits>

namespace jetinv {

std::vector<DerivationField> v_fields(int n) {
    auto a = operator_A_expr(n);
    std::vector<JetExpr> cur;
    for (int i = 0; i < n; ++i) cur.push_back(JetExpr::p(n, MultiIndex(n).plus(i)));
    std::vector<DerivationField> out;
    out.push_back(DerivationField{cur});
    for (int k = 1; k < n; ++k) {
        std::vector<JetExpr> next(static_cast<std::size_t>(n), JetExpr::constant(n, 0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                next[static_cast<std::size_t>(r)] +=
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                    cur[static_cast<std::size_t>(c)];
        out.push_back(DerivationField{next});
        cur = std::move(next);
    }
    return out;
}

Rat apply_derivation(const DerivationField& f, const JetExpr& e, const JetPoint& j) {
    int need = std::max(e.jet_order() + 1, f.coeff_order());
    if (j.order() < need)
        throw OrderTooLow("derivation needs jet order " + std::to_string(need));
    Rat acc = 0;
    for (int i = 0; i < f.n(); ++i) {
        Rat c = eval_at(f.coeff[static_cast<std::size_t>(i)], j);
        if (is_zero(c)) continue;
        acc += c * eval_total_derivative_at(e, i, j);
    }
    return acc;
}

DerivationField commutator(const DerivationField& f1, const DerivationField& f2) {
    int n = f1.n();
    std::vector<JetExpr> coeff;
    for (int m = 0; m < n; ++m) {
        JetExpr acc = JetExpr::constant(n, 0);
        for (int i = 0; i < n; ++i) {
            acc += f1.coeff[static_cast<std::size_t>(i)] *
                   f2.coeff[static_cast<std::size_t>(m)].total_derivative(i);
            acc -= f2.coeff[static_cast<std::size_t>(i)] *
                   f1.coeff[static_cast<std::size_t>(m)].total_derivative(i);
        }
        coeff.push_back(std::move(acc));
    }
    return DerivationField{std::move(coeff)};
}

static EigenFrame eigen_of_dmat(const DMat& a) {
    EigenSym es = jacobi_eigen(a);
    EigenFrame fr;
    fr.lambda = es.eigenvalues;
    fr.vectors = es.vectors;
    fr.gap = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < fr.lambda.size(); ++k)
        fr.gap = std::min(fr.gap, fr.lambda[k + 1] - fr.lambda[k]);
    return fr;
}

EigenFrame eigen_frame(const JetPoint& j) {
    EigenFrame fr = eigen_of_dmat(dmat_of(operator_A(j)));
    if (!(fr.gap > 1e-8)) throw DegenerateSpectrum("eigenvalue gap below 1e-8");
    return fr;
}

double eval_frame_invariant(const InvariantId& id, const JetPoint& j) {
    id.validate(j.n());
    if (!id.eigen_tagged())
        return rat_double(eval_invariant(id, j));
    EigenFrame fr = eigen_frame(j);
    int i = id.indices()[0] - 1;
    if (id.tag() == InvTag::Lambda) return fr.lambda[static_cast<std::size_t>(i)];
    DVec v = dvec_of(j.grad());
    double s = 0;
    for (std::size_t r = 0; r < v.size(); ++r)
        s += fr.vectors[r][static_cast<std::size_t>(i)] * v[r];
    return s;
}

QVec tresse_derivative(const JetExpr& target, const std::vector<JetExpr>& basis,
                       const JetPoint& j) {
    int n = j.n();
    if (static_cast<int>(basis.size()) != n)
        throw BadConfig("Tresse basis must have n invariants");
    // m[a][b] = (D_a I^b)(j); the coefficients solve m x = (D_a target)_a, so
    // that the horizontal differential of target decomposes over the coframe.
    QMat m = qmat_zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                eval_total_derivative_at(basis[static_cast<std::size_t>(b)], a, j);
    QVec rhs;
    for (int a = 0; a < n; ++a) rhs.push_back(eval_total_derivative_at(target, a, j));
    auto sol = qmat_solve(m, rhs);
    if (!sol) throw DependentBasis("Tresse basis matrix is singular at the point");
    return *sol;
}

StructureConstants structure_constants(const std::vector<DerivationField>& fields,
                                       const JetPoint& j) {
    int n = static_cast<int>(fields.size());
    QMat m = qmat_zero(n, n); // columns: coefficient vectors of the fields
    for (int k = 0; k < n; ++k) {
        QVec ck = fields[static_cast<std::size_t>(k)].coeff_at(j);
        for (int r = 0; r < n; ++r)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                ck[static_cast<std::size_t>(r)];
    }
    if (is_zero(qmat_det(m))) throw DegenerateFrame("frame fields dependent at the point");

    StructureConstants sc;
    sc.n = n;
    sc.c.assign(static_cast<std::size_t>(n),
                std::vector<std::vector<Rat>>(static_cast<std::size_t>(n),
                                              std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))));
    for (int i = 0; i < n; ++i) {
        for (int jj = i + 1; jj < n; ++jj) {
            DerivationField br =
                commutator(fields[static_cast<std::size_t>(i)], fields[static_cast<std::size_t>(jj)]);
            auto sol = qmat_solve(m, br.coeff_at(j));
            if (!sol) throw DegenerateFrame("frame degenerate while expanding a bracket");
            for (int k = 0; k < n; ++k) {
                sc.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]
                    [static_cast<std::size_t>(k)] = (*sol)[static_cast<std::size_t>(k)];
                sc.c[static_cast<std::size_t>(jj)][static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(k)] = -(*sol)[static_cast<std::size_t>(k)];
            }
        }
    }
    return sc;
}

// --------------------------------------------------------------------------
// Finite-difference machinery for the (non-algebraic) eigenframe fields.
// --------------------------------------------------------------------------

/// 2-jet data (A, shifted along direction dir by t using 3-jet data).
static DMat shifted_a(const JetPoint& j, int dir, double t) {
    int n = j.n();
    DMat a(static_cast<std::size_t>(n), DVec(static_cast<std::size_t>(n), 0.0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c) {
            MultiIndex z = MultiIndex(n).plus(r).plus(c);
            double v = rat_double(j.coeff(z)) + t * rat_double(j.coeff(z.plus(dir)));
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            a[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = v;
        }
    return a;
}

/// Aligns the columns of fr against base by sign so finite differences see a
/// continuous frame (the raw first-nonzero-positive convention can jump).
static void align_signs(DMat& vecs, const DMat& base) {
    std::size_t n = vecs.size();
    for (std::size_t k = 0; k < n; ++k) {
        double dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += vecs[i][k] * base[i][k];
        if (dot < 0)
            for (std::size_t i = 0; i < n; ++i) vecs[i][k] = -vecs[i][k];
    }
}

static DMat frame_at_shift(const JetPoint& j, int dir, double t, const DMat& base) {
    EigenSym es = jacobi_eigen(shifted_a(j, dir, t));
    DMat v = es.vectors;
    align_signs(v, base);
    return v;
}

DMat eigenframe_derivative(const JetPoint& j, int dir, double h) {
    if (j.order() < 3) throw OrderTooLow("frame derivative needs a 3-jet");
    int n = j.n();
    DMat base = eigen_frame(j).vectors;
    auto central = [&](double step) {
        DMat plus = frame_at_shift(j, dir, step, base);
        DMat minus = frame_at_shift(j, dir, -step, base);
        DMat d(static_cast<std::size_t>(n), DVec(static_cast<std::size_t>(n), 0.0));
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k)
                d[i][k] = (plus[i][k] - minus[i][k]) / (2 * step);
        return d;
    };
    DMat dh = central(h), dh2 = central(h / 2);
    for (std::size_t i = 0; i < dh.size(); ++i)
        for (std::size_t k = 0; k < dh.size(); ++k)
            dh[i][k] = (4 * dh2[i][k] - dh[i][k]) / 3; // Richardson
    return dh;
}

std::vector<std::vector<std::vector<double>>> eframe_structure_constants(const JetPoint& j,
                                                                         double h) {
    int n = j.n();
    std::size_t un = static_cast<std::size_t>(n);
    EigenFrame fr = eigen_frame(j);

    // d(e_k)/dx_dir for every coordinate direction
    std::vector<DMat> dframe;
    for (int dir = 0; dir < n; ++dir) dframe.push_back(eigenframe_derivative(j, dir, h));

    // bracket coefficients: [e_i,e_j]^m = sum_l (e_i)_l D_l (e_j)_m - (i<->j)
    auto dir_deriv = [&](int field, int comp, int along) {
        return dframe[static_cast<std::size_t>(along)][static_cast<std::size_t>(comp)]
                     [static_cast<std::size_t>(field)];
    };

    // condition guard on the frame matrix (orthonormal, so fine unless the
    // eigen solve itself degenerated)
    std::vector<std::vector<std::vector<double>>> c(
        un, std::vector<std::vector<double>>(un, std::vector<double>(un, 0.0)));
    for (int i = 0; i < n; ++i) {
        for (int jj = i + 1; jj < n; ++jj) {
            DVec w(un, 0.0);
            for (int m = 0; m < n; ++m) {
                double acc = 0;
                for (int l = 0; l < n; ++l) {
                    acc += fr.vectors[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)] *
                           dir_deriv(jj, m, l);
                    acc -= fr.vectors[static_cast<std::size_t>(l)][static_cast<std::size_t>(jj)] *
                           dir_deriv(i, m, l);
                }
                w[static_cast<std::size_t>(m)] = acc;
            }
            // expand over the orthonormal frame: c^k = <w, e_k>
            for (int k = 0; k < n; ++k) {
                double ck = 0;
                for (int m = 0; m < n; ++m)
                    ck += w[static_cast<std::size_t>(m)] *
                          fr.vectors[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]
                 [static_cast<std::size_t>(k)] = ck;
                c[static_cast<std::size_t>(jj)][static_cast<std::size_t>(i)]
                 [static_cast<std::size_t>(k)] = -ck;
            }
        }
    }
    return c;
}

} // namespace jetinv
