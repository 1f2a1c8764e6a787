#pragma once

#include "jetinv/frames.hpp"
#include "jetinv/jetpoint.hpp"
#include "jetinv/linalg.hpp"

namespace jetinv {

/// Gram data of the Krylov frame {v, Av, ..., A^{n-1}v}.
/// gamma_ij = <A^i v, A^j v> = I_{2,(i+j)} with gamma_00 = |v|^2 = I_1.
/// `unit_corner` is the variant normalized to 1 in the corner; the exact
/// inverse is taken of the true Gram matrix (metric duality needs it).
struct GramData {
    QMat gamma;
    QMat gamma_inv;
    QMat unit_corner;
};

/// Throws SingularGram when det gamma = 0 (exact test).
GramData gram(const JetPoint& j);

/// One syzygy case: lhs = v_{i0+1} . I_{s,(i1..is)} evaluated exactly;
/// rhs_gram expands the derivative over the Krylov frame through the inverse
/// Gram matrix and third-order invariants; rhs_oracle is the independent
/// Leibniz-rule assembly. a_term is the nabla-v contribution
/// sum_j Q_s(..., A^{i0+i_j+1} v, ...) that the Gram expansion omits.
struct SyzygyReport {
    Rat lhs;
    Rat rhs_gram;
    Rat rhs_oracle;
    Rat residual_gram;  // lhs - rhs_gram (recorded, not asserted)
    Rat residual_oracle; // lhs - rhs_oracle (zero at every regular point)
    Rat a_term;
};

/// Verifies the main relation at a jet point for v_{i0+1} acting on
/// I_{s,(idx)}. Requires order >= s+2 and a nondegenerate Gram matrix.
SyzygyReport verify_main_syzygy(int i0, const std::vector<int>& idx, const JetPoint& j);

/// One relation from the low-order table.
struct RelationRecord {
    std::string name;
    Rat lhs;
    Rat rhs;
    Rat residual;
    bool asserted; // true for the relations the table states without caveat
};

/// Checks the low-order relation table:
///   v_i . I0 = I_{2,(i-1)}            (I_{2,(0)} = I_1)
///   v_i . I1 = 2 I_{2,(i)}
///   v_{k+1} . I_{2,l}   = sum_{a+b=l-1} I_{3,[ab]k}
///   v_{k+1} . I_{2,(l)} = sum_{a+b=l-1} I_{3,(abk)} + 2 I_{2,(k+l+1)}
/// Needs order >= 3.
std::vector<RelationRecord> verify_low_order(const JetPoint& j);

} // namespace jetinv
