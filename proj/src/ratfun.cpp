#include "jetinv/ratfun.hpp"

#include "jetinv/errors.hpp"

namespace jetinv {

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> c = c_;
    for (auto& v : c) v = -v;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rat& k) const {
    std::vector<Rat> c = c_;
    for (auto& v : c) v *= k;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> c(c_.size() - 1, Rat(0));
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(c));
}

Rat UniPoly::eval(const Rat& u) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * u + c_[i];
    return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw Error("univariate division by zero");
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quo(rem.size() > b.c_.size() - 1 ? rem.size() - b.c_.size() + 1 : 0, Rat(0));
    Rat lead_inv = Rat(1) / b.c_.back();
    for (std::size_t i = rem.size(); i-- > 0 && i + 1 >= b.c_.size();) {
        Rat f = rem[i] * lead_inv;
        if (jetinv::is_zero(f)) continue;
        std::size_t shift = i + 1 - b.c_.size();
        quo[shift] = f;
        for (std::size_t k = 0; k < b.c_.size(); ++k) rem[shift + k] -= f * b.c_[k];
    }
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rat(1) / a.lead()); // monic
}

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UniPoly q, r;
        UniPoly::divmod(num_, g, q, r);
        num_ = q;
        UniPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rat lead_inv = Rat(1) / den_.lead();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw Error("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFun::eval(const Rat& u) const {
    Rat d = den_.eval(u);
    if (jetinv::is_zero(d)) throw PoleHit("rational function evaluated at a pole");
    return num_.eval(u) / d;
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (jetinv::is_zero(c_[i])) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += rat_str(c_[i]);
        } else {
            if (c_[i] == Rat(-1)) s += "-";
            else if (c_[i] != Rat(1)) s += rat_str(c_[i]) + "*";
            s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

std::string RatFun::str(const std::string& var) const {
    if (den_ == UniPoly::constant(1)) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace jetinv
