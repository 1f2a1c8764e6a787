#pragma once

#include "jetinv/poly.hpp"

namespace jetinv {

/// Exact expression in the jet variables {x_i, u, p_zeta}: a polynomial or a
/// quotient of polynomials. Closed under {+,-,*,/}; no transcendental nodes.
/// Stored as num/den with den's leading coefficient normalized to 1; no
/// multivariate gcd reduction is attempted (equality goes through
/// cross-multiplication, which is exact regardless).
class JetExpr {
  public:
    JetExpr() = default;
    explicit JetExpr(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.n(), 1)) {}
    JetExpr(Poly num, Poly den);

    static JetExpr constant(int n, const Rat& c) { return JetExpr(Poly::constant(n, c)); }
    static JetExpr x(int n, int i) { return JetExpr(Poly::x(n, i)); }
    static JetExpr u(int n) { return JetExpr(Poly::u(n)); }
    static JetExpr p(int n, const MultiIndex& z) { return JetExpr(Poly::p(n, z)); }

    int n() const { return num_.n(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_zero() const { return num_.is_zero(); }

    /// Jet order a point must carry for evaluation.
    int jet_order() const { return std::max(num_.jet_order(), den_.jet_order()); }

    JetExpr operator-() const { return JetExpr(-num_, den_); }
    friend JetExpr operator+(const JetExpr& a, const JetExpr& b);
    friend JetExpr operator-(const JetExpr& a, const JetExpr& b);
    friend JetExpr operator*(const JetExpr& a, const JetExpr& b);
    friend JetExpr operator/(const JetExpr& a, const JetExpr& b);
    JetExpr& operator+=(const JetExpr& o) { return *this = *this + o; }
    JetExpr& operator-=(const JetExpr& o) { return *this = *this - o; }
    JetExpr& operator*=(const JetExpr& o) { return *this = *this * o; }
    JetExpr& operator/=(const JetExpr& o) { return *this = *this / o; }

    /// Equality as rational functions (cross-multiplied, exact).
    bool equals(const JetExpr& o) const { return num_ * o.den_ == o.num_ * den_; }

    /// D_i, symbolic. Quotient rule for non-polynomial expressions.
    JetExpr total_derivative(int i) const;

    /// (D_1 e, ..., D_n e).
    std::vector<JetExpr> horizontal_differential() const;

    template <typename F>
    Rat eval(F&& value_of) const {
        Rat d = den_.eval(value_of);
        if (jetinv::is_zero(d)) throw Error("expression denominator vanishes at point");
        return num_.eval(value_of) / d;
    }

    /// (D_i this) evaluated at a point, via the quotient rule on values.
    template <typename F>
    Rat eval_total_derivative(int i, F&& value_of) const {
        Rat d = den_.eval(value_of);
        if (jetinv::is_zero(d)) throw Error("expression denominator vanishes at point");
        Rat ndi = num_.eval_total_derivative(i, value_of);
        if (is_polynomial()) return ndi / d;
        Rat nv = num_.eval(value_of);
        Rat ddi = den_.eval_total_derivative(i, value_of);
        return (ndi * d - nv * ddi) / (d * d);
    }

    std::string str() const {
        return is_polynomial() ? num_.str() : "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void normalize();

    Poly num_, den_;
};

} // namespace jetinv
