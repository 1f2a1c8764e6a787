#include "jetinv/jetexpr.hpp"

namespace jetinv {

JetExpr::JetExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("expression with identically zero denominator");
    normalize();
}

void JetExpr::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.n(), 1);
        return;
    }
    if (den_.is_constant()) {
        Rat c = den_.constant_value();
        num_ *= Rat(1) / c;
        den_ = Poly::constant(num_.n(), 1);
        return;
    }
    // make the leading denominator coefficient 1
    Rat lead = den_.terms().begin()->second;
    Rat inv = Rat(1) / lead;
    num_ *= inv;
    den_ *= inv;
}

JetExpr operator+(const JetExpr& a, const JetExpr& b) {
    if (a.is_polynomial() && b.is_polynomial()) return JetExpr(a.num_ + b.num_);
    return JetExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

JetExpr operator-(const JetExpr& a, const JetExpr& b) {
    if (a.is_polynomial() && b.is_polynomial()) return JetExpr(a.num_ - b.num_);
    return JetExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

JetExpr operator*(const JetExpr& a, const JetExpr& b) {
    if (a.is_polynomial() && b.is_polynomial()) return JetExpr(a.num_ * b.num_);
    return JetExpr(a.num_ * b.num_, a.den_ * b.den_);
}

JetExpr operator/(const JetExpr& a, const JetExpr& b) {
    if (b.is_zero()) throw Error("division by zero expression");
    return JetExpr(a.num_ * b.den_, a.den_ * b.num_);
}

JetExpr JetExpr::total_derivative(int i) const {
    if (is_polynomial()) return JetExpr(num_.total_derivative(i));
    Poly dn = num_.total_derivative(i);
    Poly dd = den_.total_derivative(i);
    return JetExpr(dn * den_ - num_ * dd, den_ * den_);
}

std::vector<JetExpr> JetExpr::horizontal_differential() const {
    std::vector<JetExpr> out;
    out.reserve(static_cast<std::size_t>(n()));
    for (int i = 0; i < n(); ++i) out.push_back(total_derivative(i));
    return out;
}

} // namespace jetinv
