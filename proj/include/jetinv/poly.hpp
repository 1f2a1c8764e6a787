#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetinv/multiindex.hpp"
#include "jetinv/rational.hpp"

namespace jetinv {

/// Jet variable, packed into one integer key.
///   x_i      -> -(i+1)            (base coordinates)
///   p_zeta   -> nibble-packed zeta (entry j in bits 4j); p_0 is u itself.
/// Packing bounds: n <= 16 and every entry <= 15, far beyond desk scale.
using Var = std::int64_t;

inline Var var_x(int i) { return -static_cast<Var>(i) - 1; }

inline Var var_p(const MultiIndex& z) {
    Var v = 0;
    for (int i = 0; i < z.n(); ++i) {
        if (z[i] > 15) throw Error("multi-index entry too large to pack");
        v |= static_cast<Var>(z[i]) << (4 * i);
    }
    return v;
}

inline Var var_u(int /*n*/) { return 0; }

inline bool var_is_x(Var v) { return v < 0; }
inline int var_x_index(Var v) { return static_cast<int>(-v - 1); }

inline MultiIndex var_mi(Var v, int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>((v >> (4 * i)) & 0xF);
    return MultiIndex(std::move(e));
}

/// |zeta| for p-variables, 0 for base variables.
inline int var_jet_order(Var v, int n) {
    if (var_is_x(v)) return 0;
    int s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<int>((v >> (4 * i)) & 0xF);
    return s;
}

/// Sorted (variable, exponent) list; exponents positive.
using Monomial = std::vector<std::pair<Var, int>>;

/// Sparse multivariate polynomial over Q in the jet variables of a fixed
/// dimension n. The term map is ordered, so the representation is canonical
/// and equality is structural.
class Poly {
  public:
    /// Default state is a dimension-agnostic zero; the dimension locks in on
    /// first combination with a sized polynomial.
    Poly() : n_(0) {}
    explicit Poly(int n) : n_(n) {}
    /// Dimension-agnostic constant.
    explicit Poly(const Rat& c) : n_(0) {
        if (!jetinv::is_zero(c)) terms_[{}] = c;
    }

    static Poly constant(int n, const Rat& c);
    static Poly variable(int n, Var v);
    static Poly x(int n, int i) { return variable(n, var_x(i)); }
    static Poly p(int n, const MultiIndex& z) { return variable(n, var_p(z)); }
    static Poly u(int n) { return variable(n, 0); }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()

    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    /// Largest |zeta| among p-variables appearing (0 for p-free expressions):
    /// the jet order a point must carry to evaluate this.
    int jet_order() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    Poly pow(int k) const;

    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Formal partial derivative with respect to one variable.
    Poly derivative(Var v) const;

    /// Total derivative D_i = d/dx_i + sum_zeta p_{zeta+1_i} d/dp_zeta.
    /// Raises the jet order of the expression by exactly one.
    Poly total_derivative(int i) const;

    /// Exact evaluation; value_of maps Var -> Rat.
    template <typename F>
    Rat eval(F&& value_of) const {
        Rat acc = 0;
        for (const auto& [mon, c] : terms_) {
            Rat t = c;
            for (const auto& [v, e] : mon) {
                Rat base = value_of(v);
                for (int r = 0; r < e; ++r) t *= base;
            }
            acc += t;
        }
        return acc;
    }

    /// Value of (D_i this) at a point, without building D_i symbolically.
    /// Same contract as eval composed with total_derivative(i), but linear in
    /// the term count.
    template <typename F>
    Rat eval_total_derivative(int i, F&& value_of) const {
        Rat acc = 0;
        for (const auto& [mon, c] : terms_) {
            for (std::size_t k = 0; k < mon.size(); ++k) {
                auto [v, e] = mon[k];
                Rat dv = total_derivative_of_var(v, i, value_of);
                if (jetinv::is_zero(dv)) continue;
                Rat t = c * e * dv;
                Rat base = value_of(v);
                for (int r = 0; r < e - 1; ++r) t *= base;
                for (std::size_t l = 0; l < mon.size(); ++l) {
                    if (l == k) continue;
                    Rat b = value_of(mon[l].first);
                    for (int r = 0; r < mon[l].second; ++r) t *= b;
                }
                acc += t;
            }
        }
        return acc;
    }

    std::string str() const; // debugging aid

  private:
    template <typename F>
    Rat total_derivative_of_var(Var v, int i, F&& value_of) const {
        if (var_is_x(v)) return var_x_index(v) == i ? Rat(1) : Rat(0);
        return value_of(var_p(var_mi(v, n_).plus(i)));
    }

    void add_term(const Monomial& m, const Rat& c);
    void unify(const Poly& o) {
        if (n_ == 0) n_ = o.n_;
        else if (o.n_ != 0 && o.n_ != n_) throw Error("polynomial dimension mismatch");
    }

    int n_;
    std::map<Monomial, Rat> terms_;
};

} // namespace jetinv
