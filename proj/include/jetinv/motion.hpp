#pragma once

#include "jetinv/jetpoint.hpp"
#include "jetinv/linalg.hpp"

namespace jetinv {

/// Skew-symmetric Cayley parameter; generates exact rational rotations.
class SkewParam {
  public:
    explicit SkewParam(QMat s);
    static SkewParam zero(int n) { return SkewParam(qmat_zero(n, n)); }
    int n() const { return static_cast<int>(s_.size()); }
    const QMat& matrix() const { return s_; }

  private:
    QMat s_;
};

/// Element (R, b) of SO(n) x R^n with exact rational entries.
/// R'R = I and det R = 1 hold exactly; both are validated at construction.
class Motion {
  public:
    Motion(QMat r, QVec b);

    static Motion identity(int n) {
        return Motion(qmat_identity(n), QVec(static_cast<std::size_t>(n), Rat(0)));
    }
    static Motion translation(QVec b) {
        QMat r = qmat_identity(static_cast<int>(b.size()));
        return Motion(std::move(r), std::move(b));
    }

    int n() const { return static_cast<int>(b_.size()); }
    const QMat& rotation() const { return r_; }
    const QVec& translation_part() const { return b_; }

    Motion compose(const Motion& other) const; // this after other
    Motion inverse() const;
    bool operator==(const Motion&) const = default;

    std::string to_json() const;
    static Motion from_json(const std::string& text);

  private:
    QMat r_;
    QVec b_;
};

/// R = (I+S)(I-S)^{-1}, exactly special-orthogonal over Q; b = 0.
/// Throws SingularCayley when I-S is singular (equivalently det(I+S) = 0,
/// since the two determinants agree for skew S).
Motion cayley_rotation(const SkewParam& s);

/// x -> Rx + b.
QVec act_base(const Motion& g, const QVec& x);

/// Prolonged action on a jet point: base moves by g, u is unchanged, each
/// pure jet transforms tensorially Q'(xi_1,..,xi_t) = Q(R'xi_1,..,R'xi_t).
JetPoint prolong_action(const Motion& g, const JetPoint& j);

/// Floating-point motion; the moving-frame normalization lands here because
/// eigenframes are irrational. Exactness claims apply to Motion only.
struct NumericMotion {
    DMat r;
    DVec b;

    NumericMotion after(const Motion& h) const; // this after exact h
};

/// Moving-frame normalization: the motion sending the eigenframe of Q_2 at j
/// to the standard frame at 0 (rows of R are the eigenvectors; a sign of the
/// last eigenvector is flipped if needed to stay in SO(n)).
/// Throws DegenerateSpectrum when the spectral gap is below 1e-8.
NumericMotion normalize(const JetPoint& j);

} // namespace jetinv
