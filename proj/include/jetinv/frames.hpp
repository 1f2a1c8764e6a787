#pragma once

#include "jetinv/invariants.hpp"
#include "jetinv/jetpoint.hpp"
#include "jetinv/linalg.hpp"
#include "jetinv/motion.hpp"

namespace jetinv {

/// Horizontal field sum_i c_i(jet) D_i with exact coefficient expressions.
struct DerivationField {
    std::vector<JetExpr> coeff;

    int n() const { return static_cast<int>(coeff.size()); }
    int coeff_order() const {
        int k = 0;
        for (const auto& c : coeff) k = std::max(k, c.jet_order());
        return k;
    }
    QVec coeff_at(const JetPoint& j) const {
        QVec v;
        for (const auto& c : coeff) v.push_back(eval_at(c, j));
        return v;
    }
};

/// The algebraic frame v_1..v_n; v_{k+1} has coefficients (A^k v)_j.
std::vector<DerivationField> v_fields(int n);

/// (f e)(j) = sum_i c_i(j) (D_i e)(j), exact.
/// Needs j.order >= max(order(e) + 1, coefficient order).
Rat apply_derivation(const DerivationField& f, const JetExpr& e, const JetPoint& j);

/// [f1, f2] as a field: coefficients f1(c2_j) - f2(c1_j), symbolic and exact.
DerivationField commutator(const DerivationField& f1, const DerivationField& f2);

/// Orthonormal eigenframe of the operator A at a jet point.
struct EigenFrame {
    DVec lambda;  // ascending
    DMat vectors; // vectors[i][k]: component i of e_k
    double gap;   // min eigenvalue gap
};

/// Jacobi-rotation eigensolve of A; DegenerateSpectrum when gap <= 1e-8.
EigenFrame eigen_frame(const JetPoint& j);

/// Numeric value of an eigen-tagged invariant: lambda:i -> lambda_i,
/// frame_pair:i -> <e_i, grad u> (sign depends on the eigenvector convention).
double eval_frame_invariant(const InvariantId& id, const JetPoint& j);

/// Tresse derivatives of target with respect to a basis I^1..I^n of
/// invariants: solves with the matrix N_ab = (D_a I^b)(j) and returns
/// N^{-T} (D_1 target, ..., D_n target)(j). Throws DependentBasis when
/// det N = 0 (exact test).
QVec tresse_derivative(const JetExpr& target, const std::vector<JetExpr>& basis,
                       const JetPoint& j);

/// c[i][j][k] of [f_i, f_j] = sum_k c_ij^k f_k at a point.
struct StructureConstants {
    int n = 0;
    std::vector<std::vector<std::vector<Rat>>> c;

    const Rat& at(int i, int j, int k) const {
        return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)];
    }
};

/// Exact structure constants of a field frame whose coefficient vectors are
/// linearly independent at j; DegenerateFrame otherwise.
StructureConstants structure_constants(const std::vector<DerivationField>& fields,
                                       const JetPoint& j);

/// Numeric structure constants of the eigenframe derivations e_1..e_n,
/// via Richardson-extrapolated central differences of the eigenvector
/// coefficients (step h and h/2). Needs a 3-jet.
std::vector<std::vector<std::vector<double>>> eframe_structure_constants(const JetPoint& j,
                                                                         double h = 1e-5);

/// d/dt of the sign-aligned eigenframe along the jet shift in coordinate
/// direction dir (p_zeta(t) = p_zeta + t p_{zeta+e_dir}); used by the
/// finite-difference oracles. Returns d(vectors)/dt with the same layout as
/// EigenFrame::vectors.
DMat eigenframe_derivative(const JetPoint& j, int dir, double h = 1e-5);

} // namespace jetinv
