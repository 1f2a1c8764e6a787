#include "jetinv/equations.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "jetinv/invariants.hpp"
#include "jetinv/frames.hpp"
#include "jetinv/motion.hpp"
#include "jetinv/syzygy.hpp"

namespace jetinv {

// ---------------------------------------------------------------------------
// Sampling on E
// ---------------------------------------------------------------------------

static QMat random_rotation(Rng& rng, int n) {
    for (;;) {
        QMat s = qmat_zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rat v = rng.rat_small();
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
            }
        try {
            return cayley_rotation(SkewParam(s)).rotation();
        } catch (const SingularCayley&) {
            continue;
        }
    }
}

EikonalSample eikonal_sample(int n, int k, std::uint64_t seed) {
    if (k > 4) throw BadConfig("eikonal sampling supports order <= 4");
    if (k < 1) throw BadConfig("eikonal sampling needs order >= 1");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        QMat w = random_rotation(rng, n);

        // restricted symmetric block M on the complement of v (w-letters >= 1)
        QMat mtil = qmat_zero(n, n);
        for (int a = 1; a < n; ++a)
            for (int b = a; b < n; ++b) {
                Rat v = rng.rat_small();
                mtil[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
                mtil[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
            }

        // spectral-gap guard on the restricted block (regular stratum only)
        if (n > 1 && k >= 2) {
            DMat md(static_cast<std::size_t>(n - 1), DVec(static_cast<std::size_t>(n - 1)));
            for (int a = 1; a < n; ++a)
                for (int b = 1; b < n; ++b)
                    md[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
                        rat_double(mtil[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
            EigenSym es = jacobi_eigen(md);
            bool ok = true;
            for (std::size_t i = 0; i + 1 < es.eigenvalues.size(); ++i)
                if (es.eigenvalues[i + 1] - es.eigenvalues[i] < 1e-6) ok = false;
            if (!ok) continue;
        }

        std::vector<SymTensor> tensors;
        // Q0, Q1
        SymTensor q0(n, 0);
        q0.set(MultiIndex(n), rng.rat_small());
        tensors.push_back(q0);
        SymTensor q1(n, 1);
        for (int i = 0; i < n; ++i)
            q1.set(MultiIndex(n).plus(i), w[static_cast<std::size_t>(i)][0]);
        tensors.push_back(q1);

        QMat mpow2 = qmat_mul(mtil, mtil);
        SymTensor t3w(n, 3); // third pure jet in the w-basis
        if (k >= 2) {
            SymTensor q2w(n, 2);
            for (const auto& z : MultiIndex::all_of_order(n, 2)) {
                auto t = z.tuple();
                q2w.set(z, mtil[static_cast<std::size_t>(t[0])][static_cast<std::size_t>(t[1])]);
            }
            tensors.push_back(sym_transform(q2w, w));
        }
        if (k >= 3) {
            for (const auto& z : MultiIndex::all_of_order(n, 3)) {
                auto t = z.tuple(); // sorted letters
                if (t[0] == 0) {
                    // prolonged constraint: Q3(v, xi, eta) = -<A xi, A eta>
                    t3w.set(z, -mpow2[static_cast<std::size_t>(t[1])][static_cast<std::size_t>(t[2])]);
                } else {
                    t3w.set(z, rng.rat_small());
                }
            }
            tensors.push_back(sym_transform(t3w, w));
        }
        if (k >= 4) {
            SymTensor t4w(n, 4);
            auto t3 = [&](int a, int b, int c) {
                return t3w.comp(MultiIndex::of_tuple(n, {a, b, c}));
            };
            for (const auto& z : MultiIndex::all_of_order(n, 4)) {
                auto t = z.tuple();
                if (t[0] == 0) {
                    // Q4(v,xi,eta,rho) = -[Q3(A xi,eta,rho) + Q3(xi,A eta,rho) + Q3(xi,eta,A rho)]
                    Rat acc = 0;
                    for (int e = 1; e < n; ++e) {
                        acc += mtil[static_cast<std::size_t>(e)][static_cast<std::size_t>(t[1])] *
                               t3(e, t[2], t[3]);
                        acc += mtil[static_cast<std::size_t>(e)][static_cast<std::size_t>(t[2])] *
                               t3(t[1], e, t[3]);
                        acc += mtil[static_cast<std::size_t>(e)][static_cast<std::size_t>(t[3])] *
                               t3(t[1], t[2], e);
                    }
                    t4w.set(z, -acc);
                } else {
                    t4w.set(z, rng.rat_small());
                }
            }
            tensors.push_back(sym_transform(t4w, w));
        }

        QVec x;
        for (int i = 0; i < n; ++i) x.push_back(rng.rat_small());
        return EikonalSample{jet_from_tensors(x, tensors), std::move(w)};
    }
    throw DegenerateSpectrum("eikonal sampling kept hitting degenerate spectra");
}

std::vector<Rat> eikonal_constraint_residuals(const JetPoint& j) {
    int n = j.n();
    Poly h(n); // |grad u|^2 - 1
    for (int i = 0; i < n; ++i) {
        Poly pi = Poly::p(n, MultiIndex(n).plus(i));
        h += pi * pi;
    }
    h -= Poly::constant(n, 1);

    std::vector<Rat> residuals;
    std::map<MultiIndex, Poly> derivs;
    derivs[MultiIndex(n)] = h;
    residuals.push_back(eval_at(h, j));
    for (int t = 1; t + 1 <= j.order(); ++t) {
        for (const auto& z : MultiIndex::all_of_order(n, t)) {
            int i = 0;
            while (z[i] == 0) ++i;
            Poly d = derivs.at(z.minus(i)).total_derivative(i);
            residuals.push_back(eval_at(d, j));
            derivs[z] = std::move(d);
        }
    }
    return residuals;
}

VanishingReport verify_singular_vanishing(const EikonalSample& s) {
    const JetPoint& j = s.jet;
    int n = j.n();
    VanishingReport rep;
    QMat a = operator_A(j);
    rep.det_a_zero = is_zero(qmat_det(a));

    rep.i2_pair_zero = true;
    for (int i = 1; i <= 2 * n - 1; ++i)
        if (!is_zero(eval_invariant(InvariantId::i2_pair(i), j))) rep.i2_pair_zero = false;

    rep.is_pair_zero = true;
    for (const auto& id : invariant_catalog(n, std::min(j.order(), 4))) {
        if (id.tag() != InvTag::IsPair) continue;
        bool positive = std::any_of(id.indices().begin(), id.indices().end(),
                                    [](int v) { return v > 0; });
        if (!positive) continue;
        if (!is_zero(eval_invariant(id, j))) rep.is_pair_zero = false;
    }

    rep.v_fields_zero = true;
    auto vf = v_fields(n);
    for (std::size_t k = 1; k < vf.size(); ++k)
        for (const Rat& c : vf[k].coeff_at(j))
            if (!is_zero(c)) rep.v_fields_zero = false;

    GramData g;
    try {
        g = gram(j);
        rep.gram_singular = false;
    } catch (const SingularGram&) {
        rep.gram_singular = true;
    }

    rep.e1_i0 = apply_derivation(vf[0], invariant_expr(InvariantId::i0(), n), j);
    for (int i = 1; i < n; ++i)
        rep.trace_witness.push_back(eval_invariant(InvariantId::i2_tr(i), j));
    return rep;
}

// ---------------------------------------------------------------------------
// Restricted frame on E (numeric)
// ---------------------------------------------------------------------------

namespace {

struct AdaptedFrame {
    DVec lambda; // restricted eigenvalues (n-1)
    DMat frame;  // n x n; column 0 = v/|v|, columns 1.. adapted eigenvectors
};

/// Frame from shifted first/second jet data; seed is the rational complement
/// basis of the sample (kept fixed along shifts for continuity).
AdaptedFrame adapted_frame(const DVec& v, const DMat& a, const DMat& seed) {
    std::size_t n = v.size();
    AdaptedFrame out;
    out.frame = DMat(n, DVec(n, 0.0));

    double vn = 0;
    for (double c : v) vn += c * c;
    vn = std::sqrt(vn);
    for (std::size_t i = 0; i < n; ++i) out.frame[i][0] = v[i] / vn;

    // orthonormal basis of the complement, Gram-Schmidt from the seed columns
    DMat basis(n, DVec(n - 1, 0.0));
    for (std::size_t col = 0; col + 1 < n; ++col) {
        DVec b(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) b[i] = seed[i][col + 1];
        double dv = 0;
        for (std::size_t i = 0; i < n; ++i) dv += b[i] * out.frame[i][0];
        for (std::size_t i = 0; i < n; ++i) b[i] -= dv * out.frame[i][0];
        for (std::size_t prev = 0; prev < col; ++prev) {
            double d = 0;
            for (std::size_t i = 0; i < n; ++i) d += b[i] * basis[i][prev];
            for (std::size_t i = 0; i < n; ++i) b[i] -= d * basis[i][prev];
        }
        double nb = 0;
        for (double c : b) nb += c * c;
        nb = std::sqrt(nb);
        for (std::size_t i = 0; i < n; ++i) basis[i][col] = b[i] / nb;
    }

    // restricted operator and its spectrum
    DMat restricted(n - 1, DVec(n - 1, 0.0));
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = 0; q + 1 < n; ++q) {
            double acc = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) acc += basis[i][p] * a[i][j] * basis[j][q];
            restricted[p][q] = acc;
        }
    EigenSym es = jacobi_eigen(restricted);
    out.lambda = es.eigenvalues;
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0;
            for (std::size_t p = 0; p + 1 < n; ++p) acc += basis[i][p] * es.vectors[p][k];
            out.frame[i][k + 1] = acc;
        }
    return out;
}

void align_with(DMat& frame, const DMat& base) {
    std::size_t n = frame.size();
    for (std::size_t k = 0; k < n; ++k) {
        double dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += frame[i][k] * base[i][k];
        if (dot < 0)
            for (std::size_t i = 0; i < n; ++i) frame[i][k] = -frame[i][k];
    }
}

struct ShiftedData {
    DVec v;
    DMat a;
};

ShiftedData shifted_data(const JetPoint& j, int dir, double t) {
    int n = j.n();
    ShiftedData d;
    d.v.resize(static_cast<std::size_t>(n));
    d.a = DMat(static_cast<std::size_t>(n), DVec(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        MultiIndex z = MultiIndex(n).plus(i);
        double v = rat_double(j.coeff(z));
        if (t != 0.0) v += t * rat_double(j.coeff(z.plus(dir)));
        d.v[static_cast<std::size_t>(i)] = v;
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c) {
            MultiIndex z = MultiIndex(n).plus(r).plus(c);
            double v = rat_double(j.coeff(z));
            if (t != 0.0) v += t * rat_double(j.coeff(z.plus(dir)));
            d.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            d.a[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = v;
        }
    return d;
}

double sym_eval_d(const SymTensor& q, const std::vector<DVec>& vecs) {
    int n = q.n();
    int t = q.degree();
    double acc = 0;
    std::vector<int> slots(static_cast<std::size_t>(t), 0);
    for (;;) {
        double term = rat_double(q.comp(MultiIndex::of_tuple(n, slots)));
        if (term != 0) {
            for (int l = 0; l < t; ++l)
                term *= vecs[static_cast<std::size_t>(l)]
                            [static_cast<std::size_t>(slots[static_cast<std::size_t>(l)])];
            acc += term;
        }
        int pos = t - 1;
        while (pos >= 0 && slots[static_cast<std::size_t>(pos)] == n - 1)
            slots[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++slots[static_cast<std::size_t>(pos)];
    }
    return acc;
}

} // namespace

EikonalInvariants eikonal_invariants(const EikonalSample& s) {
    const JetPoint& j = s.jet;
    int n = j.n();
    EikonalInvariants out;
    out.i0 = j.u();
    for (int i = 1; i < n; ++i)
        out.traces.push_back(eval_invariant(InvariantId::i2_tr(i), j));

    DMat seed = dmat_of(s.w);
    ShiftedData base = shifted_data(j, 0, 0.0);
    AdaptedFrame fr = adapted_frame(base.v, base.a, seed);
    for (std::size_t i = 0; i + 1 < fr.lambda.size(); ++i)
        if (fr.lambda[i + 1] - fr.lambda[i] < 1e-8)
            throw DegenerateSpectrum("restricted quadric has a near-degenerate spectrum");
    out.lambda = fr.lambda;
    out.frame = fr.frame;

    auto q = pure_jets(j);
    for (int k = 3; k <= j.order(); ++k) {
        int count = 0;
        std::vector<int> tup(static_cast<std::size_t>(k), 1); // frame letters 1..n-1 (0 is v)
        for (;;) {
            std::vector<DVec> vecs;
            std::string key;
            for (int t = 0; t < k; ++t) {
                int letter = tup[static_cast<std::size_t>(t)];
                DVec e(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    e[static_cast<std::size_t>(i)] =
                        fr.frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(letter)];
                vecs.push_back(std::move(e));
                if (t) key += ',';
                key += std::to_string(letter + 1); // adapted-frame letters 2..n (letter 1 is the gradient)
            }
            double val = sym_eval_d(q[static_cast<std::size_t>(k)], vecs);
            out.q[key] = val;
            out.q_squared[key] = val * val;
            ++count;
            int pos = k - 1;
            while (pos >= 0 && tup[static_cast<std::size_t>(pos)] == n - 1) --pos;
            if (pos < 0) break;
            int v = ++tup[static_cast<std::size_t>(pos)];
            for (int qq = pos + 1; qq < k; ++qq) tup[static_cast<std::size_t>(qq)] = v;
        }
        out.count_per_order[k] = count;
    }
    return out;
}

ChristoffelReport christoffel_check(const EikonalSample& s, double h) {
    const JetPoint& j = s.jet;
    if (j.order() < 3) throw OrderTooLow("Christoffel diagnostics need a 3-jet");
    int n = j.n();
    std::size_t un = static_cast<std::size_t>(n);
    DMat seed = dmat_of(s.w);

    ShiftedData base = shifted_data(j, 0, 0.0);
    AdaptedFrame fr0 = adapted_frame(base.v, base.a, seed);
    for (std::size_t i = 0; i + 1 < fr0.lambda.size(); ++i)
        if (fr0.lambda[i + 1] - fr0.lambda[i] < 1e-8)
            throw DegenerateSpectrum("restricted spectrum too close for frame derivatives");

    // full lambda list in frame numbering: lambda_0 = 0 (v direction on E)
    auto lam_full = [&](const AdaptedFrame& fr) {
        DVec l(un, 0.0);
        for (std::size_t k = 0; k + 1 < un; ++k) l[k + 1] = fr.lambda[k];
        return l;
    };

    // finite differences of frame columns and eigenvalues per direction
    std::vector<DMat> dframe(un);
    std::vector<DVec> dlambda(un);
    for (int dir = 0; dir < n; ++dir) {
        auto frame_at = [&](double t) {
            ShiftedData d = shifted_data(j, dir, t);
            AdaptedFrame fr = adapted_frame(d.v, d.a, seed);
            align_with(fr.frame, fr0.frame);
            return fr;
        };
        auto central = [&](double step, DMat& df, DVec& dl) {
            AdaptedFrame p = frame_at(step), m = frame_at(-step);
            df = DMat(un, DVec(un, 0.0));
            dl = DVec(un, 0.0);
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t k = 0; k < un; ++k)
                    df[i][k] = (p.frame[i][k] - m.frame[i][k]) / (2 * step);
            DVec lp = lam_full(p), lm = lam_full(m);
            for (std::size_t k = 0; k < un; ++k) dl[k] = (lp[k] - lm[k]) / (2 * step);
        };
        DMat d1, d2;
        DVec l1, l2;
        central(h, d1, l1);
        central(h / 2, d2, l2);
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t k = 0; k < un; ++k) d1[i][k] = (4 * d2[i][k] - d1[i][k]) / 3;
        for (std::size_t k = 0; k < un; ++k) l1[k] = (4 * l2[k] - l1[k]) / 3;
        dframe[static_cast<std::size_t>(dir)] = std::move(d1);
        dlambda[static_cast<std::size_t>(dir)] = std::move(l1);
    }

    ChristoffelReport rep;
    rep.gamma.assign(un, std::vector<std::vector<double>>(un, std::vector<double>(un, 0.0)));
    // Gamma_ij^k = < sum_m (e_i)_m d_m e_j , e_k >
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t jj = 0; jj < un; ++jj)
            for (std::size_t k = 0; k < un; ++k) {
                double acc = 0;
                for (std::size_t m = 0; m < un; ++m)
                    for (std::size_t comp = 0; comp < un; ++comp)
                        acc += fr0.frame[m][i] * dframe[m][comp][jj] * fr0.frame[comp][k];
                rep.gamma[i][jj][k] = acc;
            }

    // directional eigenvalue derivatives along frame fields
    DMat dlam_frame(un, DVec(un, 0.0)); // dlam_frame[k][i] = e_k . lambda_i
    for (std::size_t k = 0; k < un; ++k)
        for (std::size_t i = 0; i < un; ++i) {
            double acc = 0;
            for (std::size_t m = 0; m < un; ++m) acc += fr0.frame[m][k] * dlambda[m][i];
            dlam_frame[k][i] = acc;
        }

    auto q = pure_jets(j);
    DVec lam0 = lam_full(fr0);
    auto frame_col = [&](std::size_t k) {
        DVec e(un);
        for (std::size_t i = 0; i < un; ++i) e[i] = fr0.frame[i][k];
        return e;
    };
    auto q2 = [&](std::size_t a, std::size_t b) {
        return sym_eval_d(q[2], {frame_col(a), frame_col(b)});
    };
    auto q3 = [&](std::size_t a, std::size_t b, std::size_t c) {
        return sym_eval_d(q[3], {frame_col(a), frame_col(b), frame_col(c)});
    };

    // frame form of the identity nabla Q2 = Q3
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t jj = i; jj < un; ++jj)
            for (std::size_t k = 0; k < un; ++k) {
                // e_k [ Q2(e_i,e_j) ] by finite differences of the scalar
                auto scalar = [&](int dir, double t) {
                    ShiftedData d = shifted_data(j, dir, t);
                    AdaptedFrame fr = adapted_frame(d.v, d.a, seed);
                    align_with(fr.frame, fr0.frame);
                    double acc = 0;
                    for (std::size_t a = 0; a < un; ++a)
                        for (std::size_t b = 0; b < un; ++b)
                            acc += fr.frame[a][i] * d.a[a][b] * fr.frame[b][jj];
                    return acc;
                };
                double lhs = 0;
                for (int dir = 0; dir < n; ++dir) {
                    auto cdiff = [&](double step) {
                        return (scalar(dir, step) - scalar(dir, -step)) / (2 * step);
                    };
                    double d = (4 * cdiff(h / 2) - cdiff(h)) / 3;
                    lhs += fr0.frame[static_cast<std::size_t>(dir)][k] * d;
                }
                double rhs = q3(i, jj, k);
                for (std::size_t l = 0; l < un; ++l) {
                    rhs += rep.gamma[k][i][l] * q2(l, jj);
                    rhs += rep.gamma[k][jj][l] * q2(i, l);
                }
                rep.max_nabla_q2_residual =
                    std::max(rep.max_nabla_q2_residual, std::fabs(lhs - rhs));
            }

    // spectral formula for q_{ijk} from eigenvalue derivatives and Christoffel
    // symbols (frame letters > 1, i.e. indices >= 1 here)
    for (std::size_t i = 1; i < un; ++i)
        for (std::size_t jj = i; jj < un; ++jj)
            for (std::size_t k = jj; k < un; ++k) {
                double delta = 0;
                if (i == jj) delta += dlam_frame[k][i];
                if (jj == k) delta += dlam_frame[i][k];
                if (i == k) delta -= dlam_frame[k][i];
                double perm_sum = 0;
                std::size_t tri[3] = {i, jj, k};
                int order[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                for (auto& p : order)
                    perm_sum += lam0[tri[p[0]]] * rep.gamma[tri[p[1]]][tri[p[2]]][tri[p[0]]];
                double spectral = delta - 2 * perm_sum;
                rep.max_spectral_residual =
                    std::max(rep.max_spectral_residual, std::fabs(spectral - q3(i, jj, k)));
            }

    // torsionless consistency: structure functions vs antisymmetrized Gamma
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t jj = 0; jj < un; ++jj)
            for (std::size_t k = 0; k < un; ++k) {
                // bracket vector assembled from frame derivatives, projected
                double ck = 0;
                for (std::size_t comp = 0; comp < un; ++comp) {
                    double br = 0;
                    for (std::size_t m = 0; m < un; ++m) {
                        br += fr0.frame[m][i] * dframe[m][comp][jj];
                        br -= fr0.frame[m][jj] * dframe[m][comp][i];
                    }
                    ck += br * fr0.frame[comp][k];
                }
                double gdiff = rep.gamma[i][jj][k] - rep.gamma[jj][i][k];
                rep.max_torsion_residual =
                    std::max(rep.max_torsion_residual, std::fabs(ck - gdiff));
            }

    return rep;
}

// ---------------------------------------------------------------------------
// Compatibility ODE and spectrum identities
// ---------------------------------------------------------------------------

void CompatConfig::validate() const {
    if (n < 1) throw BadConfig("compat config needs n >= 1");
    if (static_cast<int>(alphas.size()) > n)
        throw BadConfig("at most n poles allowed");
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            if (alphas[i] == alphas[j]) throw BadConfig("poles must be pairwise distinct");
}

RatFun CompatConfig::f() const {
    RatFun acc;
    for (const Rat& a : alphas) acc += RatFun::simple_pole(a);
    return acc;
}

RatFun dplusf_iterate(const RatFun& f, RatFun g, int k) {
    if (k < 0) throw BadConfig("negative operator power");
    for (int i = 0; i < k; ++i) g = g.derivative() + f * g;
    return g;
}

RatFun dplusf_power(const CompatConfig& cfg, int k) {
    cfg.validate();
    return dplusf_iterate(cfg.f(), RatFun::one(), k);
}

RatFun dplusf_power_conjugation(const CompatConfig& cfg, int k) {
    cfg.validate();
    UniPoly p = UniPoly::constant(1);
    for (const Rat& a : cfg.alphas) p = p * UniPoly({-a, Rat(1)});
    UniPoly dk = p;
    for (int i = 0; i < k; ++i) dk = dk.derivative();
    return RatFun(dk, p);
}

bool verify_ode(const CompatConfig& cfg) {
    cfg.validate();
    int m = static_cast<int>(cfg.alphas.size());
    if (!dplusf_power(cfg, cfg.n + 1).is_zero()) return false;
    if (dplusf_power(cfg, m).is_zero()) return false; // sharpness
    return true;
}

SpectrumReport spectrum_identities(const CompatConfig& cfg, const Rat& u0) {
    cfg.validate();
    for (const Rat& a : cfg.alphas)
        if (a == u0) throw PoleHit("u0 lies on a pole");

    SpectrumReport rep;
    for (const Rat& a : cfg.alphas) rep.lambda.push_back(Rat(1) / (u0 - a));
    while (static_cast<int>(rep.lambda.size()) < cfg.n) rep.lambda.push_back(Rat(0));

    rep.e_direct = elementary_symmetric(rep.lambda, cfg.n);
    Rat kfact = 1;
    for (int k = 1; k <= cfg.n; ++k) {
        kfact *= k;
        rep.e_from_ode.push_back(dplusf_power(cfg, k).eval(u0) / kfact);
    }
    rep.elementary_match = rep.e_direct == rep.e_from_ode;

    RatFun f = cfg.f();
    Rat s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    for (const Rat& l : rep.lambda) {
        s1 += l;
        s2 += l * l;
        s3 += l * l * l;
        s4 += l * l * l * l;
    }
    RatFun f1 = f.derivative(), f2 = f1.derivative(), f3 = f2.derivative();
    rep.power_sums_match = (s1 == f.eval(u0)) && (s2 == -f1.eval(u0)) &&
                           (s3 == f2.eval(u0) / 2) && (s4 == -f3.eval(u0) / 6);

    std::set<Rat> distinct(rep.lambda.begin(), rep.lambda.end());
    rep.distinct_lambda = static_cast<int>(distinct.size());
    std::set<Rat> da(cfg.alphas.begin(), cfg.alphas.end());
    rep.expected_distinct =
        static_cast<int>(da.size()) + (static_cast<int>(cfg.alphas.size()) < cfg.n ? 1 : 0);
    return rep;
}

} // namespace jetinv
