#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jetinv/equations.hpp"
#include "jetinv/ratfun.hpp"

namespace jetinv {

/// Coefficient ring of the J^1 exterior calculus: polynomials in (x, p) with
/// univariate rational functions of u as scalars. Canonical term map, so
/// equality is structural.
class FormCoeff {
  public:
    /// Variable ids: 0..n-1 are x_i, n..2n-1 are p_i.
    using Mono = std::vector<std::pair<int, int>>; // sorted (var, exp)

    FormCoeff() : n_(0) {}
    explicit FormCoeff(int n) : n_(n) {}

    static FormCoeff constant(int n, RatFun c);
    static FormCoeff xvar(int n, int i);
    static FormCoeff pvar(int n, int i);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, RatFun>& terms() const { return terms_; }

    FormCoeff operator-() const;
    FormCoeff& operator+=(const FormCoeff& o);
    FormCoeff& operator-=(const FormCoeff& o);
    friend FormCoeff operator+(FormCoeff a, const FormCoeff& b) { return a += b; }
    friend FormCoeff operator-(FormCoeff a, const FormCoeff& b) { return a -= b; }
    friend FormCoeff operator*(const FormCoeff& a, const FormCoeff& b);
    FormCoeff& operator*=(const FormCoeff& o) { return *this = *this * o; }

    bool operator==(const FormCoeff&) const = default;

    FormCoeff d_var(int var) const; // partial by x_i or p_i
    FormCoeff d_u() const;

    bool depends_on_x() const;

    /// Evaluation over a ring K (Rat, double, QuadExt): xs/ps give variable
    /// values, scalars enter through ratfun evaluation at u0.
    template <typename K>
    K eval(const std::vector<K>& xs, const std::vector<K>& ps, const Rat& u0) const {
        K acc{};
        for (const auto& [mono, rf] : terms_) {
            K t = K(rf.eval(u0));
            for (const auto& [var, e] : mono) {
                const K& base = var < n_ ? xs[static_cast<std::size_t>(var)]
                                         : ps[static_cast<std::size_t>(var - n_)];
                for (int r = 0; r < e; ++r) t = t * base;
            }
            acc += t;
        }
        return acc;
    }

    std::string str() const;

  private:
    void add_term(const Mono& m, const RatFun& c);
    int n_;
    std::map<Mono, RatFun> terms_;
};

/// Exterior form over an abstract coordinate list with coefficients in R.
/// Keys are strictly increasing covector id lists; the ring only needs
/// default-zero, +=, *, unary minus and is_zero.
template <typename R>
class GForm {
  public:
    GForm() : ncov_(0), deg_(0) {}
    GForm(int ncov, int degree) : ncov_(ncov), deg_(degree) {}

    static GForm covector(int ncov, int id, R coeff) {
        GForm f(ncov, 1);
        f.terms_[{id}] = std::move(coeff);
        f.prune();
        return f;
    }
    static GForm scalar(int ncov, R coeff) {
        GForm f(ncov, 0);
        f.terms_[{}] = std::move(coeff);
        f.prune();
        return f;
    }

    int ncov() const { return ncov_; }
    int degree() const { return deg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, R>& terms() const { return terms_; }

    R coeff(const std::vector<int>& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? R{} : it->second;
    }

    GForm& operator+=(const GForm& o) {
        if (!o.is_zero() && !is_zero() && deg_ != o.deg_)
            throw Error("form degree mismatch in addition");
        if (is_zero()) deg_ = o.deg_;
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    GForm& operator-=(const GForm& o) {
        if (!o.is_zero() && !is_zero() && deg_ != o.deg_)
            throw Error("form degree mismatch in subtraction");
        if (is_zero()) deg_ = o.deg_;
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend GForm operator+(GForm a, const GForm& b) { return a += b; }
    friend GForm operator-(GForm a, const GForm& b) { return a -= b; }

    GForm scaled(const R& c) const {
        GForm out(ncov_, deg_);
        for (const auto& [k, v] : terms_) out.add(k, v * c);
        return out;
    }

    bool operator==(const GForm& o) const {
        if (is_zero() && o.is_zero()) return true;
        return deg_ == o.deg_ && terms_ == o.terms_;
    }

    friend GForm wedge(const GForm& a, const GForm& b) {
        GForm out(a.ncov_, a.deg_ + b.deg_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                auto [key, sign, ok] = merge_keys(ka, kb);
                if (!ok) continue;
                R c = ca * cb;
                out.add(key, sign > 0 ? c : -c);
            }
        return out;
    }

    /// d with coordinate partials supplied per covector id (the coordinate
    /// and covector lists coincide for the charts used here).
    GForm exterior_derivative(const std::vector<std::function<R(const R&)>>& partials) const {
        GForm out(ncov_, deg_ + 1);
        for (const auto& [key, c] : terms_) {
            for (int z = 0; z < ncov_; ++z) {
                R dc = partials[static_cast<std::size_t>(z)](c);
                if (jetinv_is_zero(dc)) continue;
                auto [nk, sign, ok] = merge_keys(std::vector<int>{z}, key);
                if (!ok) continue;
                out.add(nk, sign > 0 ? dc : -dc);
            }
        }
        return out;
    }

    /// Contraction with a field given by components per covector id.
    GForm interior_product(const std::vector<R>& field) const {
        GForm out(ncov_, deg_ - 1);
        for (const auto& [key, c] : terms_) {
            for (std::size_t pos = 0; pos < key.size(); ++pos) {
                const R& comp = field[static_cast<std::size_t>(key[pos])];
                if (jetinv_is_zero(comp)) continue;
                std::vector<int> rest;
                for (std::size_t q = 0; q < key.size(); ++q)
                    if (q != pos) rest.push_back(key[q]);
                R term = c * comp;
                out.add(rest, (pos % 2 == 0) ? term : -term);
            }
        }
        return out;
    }

    GForm lie_derivative(const std::vector<R>& field,
                         const std::vector<std::function<R(const R&)>>& partials) const {
        return interior_product(field).exterior_derivative(partials) +
               exterior_derivative(partials).interior_product(field);
    }

  private:
    static bool jetinv_is_zero(const R& r) { return r.is_zero(); }

    static std::tuple<std::vector<int>, int, bool> merge_keys(const std::vector<int>& a,
                                                              const std::vector<int>& b) {
        std::vector<int> out;
        out.reserve(a.size() + b.size());
        int sign = 1;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return {{}, 0, false};
            if (a[i] < b[j]) {
                out.push_back(a[i++]);
            } else {
                // b[j] hops over the remaining entries of a
                if ((a.size() - i) % 2 == 1) sign = -sign;
                out.push_back(b[j++]);
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back(b[j]);
        return {out, sign, true};
    }

    void add(const std::vector<int>& key, const R& c) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!jetinv_is_zero(c)) terms_.emplace(key, c);
            return;
        }
        it->second += c;
        if (jetinv_is_zero(it->second)) terms_.erase(it);
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    int ncov_, deg_;
    std::map<std::vector<int>, R> terms_;
};

using ExtForm = GForm<FormCoeff>;

/// Exterior calculus on J^1(R^n): coordinates x_1..x_n, u, p_1..p_n with
/// covector ids 0..n-1 = dx_i, n = du, n+1..2n = dp_i.
class J1Algebra {
  public:
    explicit J1Algebra(int n) : n_(n) {}

    int n() const { return n_; }
    int ncov() const { return 2 * n_ + 1; }

    ExtForm dx(int i) const {
        return ExtForm::covector(ncov(), i, FormCoeff::constant(n_, RatFun::one()));
    }
    ExtForm du() const {
        return ExtForm::covector(ncov(), n_, FormCoeff::constant(n_, RatFun::one()));
    }
    ExtForm dp(int i) const {
        return ExtForm::covector(ncov(), n_ + 1 + i, FormCoeff::constant(n_, RatFun::one()));
    }
    ExtForm scalar(const FormCoeff& c) const { return ExtForm::scalar(ncov(), c); }

    std::vector<std::function<FormCoeff(const FormCoeff&)>> partials() const;

    /// Cauchy characteristic X = sum p_i d/dx_i + d/du on {H = 0}; components
    /// indexed by covector id.
    std::vector<FormCoeff> char_field() const;

    ExtForm d(const ExtForm& a) const { return a.exterior_derivative(partials()); }
    ExtForm i_x(const ExtForm& a) const { return a.interior_product(char_field()); }
    ExtForm lie_x(const ExtForm& a) const {
        return a.lie_derivative(char_field(), partials());
    }

    /// sum_i dx_1 ^ .. ^ dp_i ^ .. ^ dx_n  -  f(u) dx_1 ^ .. ^ dx_n.
    ExtForm omega1(const RatFun& f) const;

    /// k! sum_{|S|=k} (dp on S slots, dx elsewhere) - g dx_1^..^dx_n.
    ExtForm closed_form(int k, const RatFun& g) const;

    ExtForm top_dx(const RatFun& g) const; // g dx_1 ^ ... ^ dx_n

    std::string to_json(const ExtForm& a) const;

  private:
    int n_;
};

/// Recursion of the n-forms Omega_1..Omega_{n+1} with affine corrections, and
/// the comparison against the expected closed forms.
struct OmegaReport {
    std::vector<ExtForm> omegas;        // Omega_1 .. Omega_{n+1}
    std::vector<bool> matches_closed;  // per k = 1..n+1
    bool omega_np1_zero = false;        // exact vanishing for the family f
    RatFun top_coefficient;             // dx-coefficient of Omega_{n+1}
};

OmegaReport omega_recursion(int n, const std::vector<Rat>& alphas);

/// Quadratic extension Q[sqrt(s)] with s a fixed positive rational; exact
/// arithmetic for the p3 = sqrt(1-p1^2-p2^2) section checks.
struct QuadExt {
    Rat a, b, s; // value a + b sqrt(s)

    QuadExt() : a(0), b(0), s(0) {}
    explicit QuadExt(Rat value) : a(std::move(value)), b(0), s(0) {}
    QuadExt(Rat av, Rat bv, Rat sv) : a(std::move(av)), b(std::move(bv)), s(std::move(sv)) {}

    bool is_zero() const { return jetinv::is_zero(a) && jetinv::is_zero(b); }
    QuadExt operator-() const { return {-a, -b, s}; }
    QuadExt& operator+=(const QuadExt& o) {
        unify(o);
        a += o.a;
        b += o.b;
        return *this;
    }
    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        QuadExt r = x;
        r.unify(y);
        Rat sv = r.s;
        return {x.a * y.a + x.b * y.b * sv, x.a * y.b + x.b * y.a, sv};
    }
    QuadExt inverse() const {
        Rat denom = a * a - b * b * s;
        if (jetinv::is_zero(denom)) throw Error("non-invertible quadratic extension value");
        return {a / denom, -b / denom, s};
    }
    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }

  private:
    void unify(const QuadExt& o) {
        if (jetinv::is_zero(s)) s = o.s;
    }
};

/// Contact reduction for n = 2 on the rational circle chart
/// p = ((1-t^2)/(1+t^2), 2t/(1+t^2)); chart coordinates (x1, x2, t) with
/// covector ids 0, 1, 2 and coefficients rational in t.
struct ContactReport {
    Rat u0;
    GForm<RatFun> theta;            // the contact form in the chart
    RatFun theta_wedge_dtheta;      // coefficient of dx1^dx2^dt
    std::vector<std::pair<Rat, Rat>> certificate; // (t, coefficient value)
    bool certificate_nonzero = false;
    bool theta0_vanishes = false;   // i_X Omega_0 dies in the chart
    bool matches_pullback = false;  // chart pullback of i_X Omega_1 equals theta
};

ContactReport contact_reduction_n2(const Rat& u0, const std::vector<Rat>& sample_ts);

/// n = 3 section forms of the digression and their certification against the
/// p3-weighted pullbacks of i_X Omega_1, (1/2) i_X Omega_2.
struct SectionReport {
    ExtForm theta1, theta2;        // on J^1(R^2) coordinates
    bool pullback_match1 = false;  // exact QuadExt agreement at all samples
    bool pullback_match2 = false;
    int samples_checked = 0;
    // Monge-Ampere payload of the two forms on a solution graph:
    //   theta'_1: a uxx + b uxy + c uyy = rhs1
    //   theta'_2: det Hess = rhs2
    FormCoeff ma1_uxx, ma1_uxy, ma1_uyy, ma1_rhs;
    FormCoeff ma2_rhs;
};

SectionReport section_forms_n3(const Rat& alpha);

} // namespace jetinv
