#pragma once

#include <string>
#include <vector>

#include "jetinv/rational.hpp"

namespace jetinv {

/// Dense univariate polynomial over Q, ascending coefficients.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& c) { return UniPoly({c}); }
    static UniPoly linear(const Rat& a0, const Rat& a1) { return UniPoly({a0, a1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const {
        return k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rat(0);
    }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    UniPoly scaled(const Rat& k) const;

    UniPoly derivative() const;
    Rat eval(const Rat& u) const;

    /// Division with remainder; divisor must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly gcd(UniPoly a, UniPoly b); // monic

    bool operator==(const UniPoly&) const = default;
    std::string str(const std::string& var = "u") const;

  private:
    void trim() {
        while (!c_.empty() && jetinv::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Univariate rational function of u over Q. Always reduced (gcd divided
/// out) with a monic denominator, so equal functions compare equal.
class RatFun {
  public:
    RatFun() : num_(), den_(UniPoly::constant(1)) {}
    RatFun(UniPoly num, UniPoly den);
    explicit RatFun(const Rat& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}
    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Rat(1)); }
    static RatFun var() { return RatFun(UniPoly({Rat(0), Rat(1)}), UniPoly::constant(1)); }
    /// 1/(u - a).
    static RatFun simple_pole(const Rat& a) {
        return RatFun(UniPoly::constant(1), UniPoly({-a, Rat(1)}));
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const { return RatFun(-num_, den_); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    RatFun derivative() const;
    /// Throws PoleHit when the denominator vanishes at u.
    Rat eval(const Rat& u) const;

    bool operator==(const RatFun&) const = default;
    std::string str(const std::string& var = "u") const;

  private:
    UniPoly num_, den_;
};

} // namespace jetinv
