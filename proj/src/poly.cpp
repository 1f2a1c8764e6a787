#include "jetinv/poly.hpp"

#include <algorithm>

namespace jetinv {

Poly Poly::constant(int n, const Rat& c) {
    Poly p(n);
    if (!jetinv::is_zero(c)) p.terms_[{}] = c;
    return p;
}

Poly Poly::variable(int n, Var v) {
    Poly p(n);
    p.terms_[{{v, 1}}] = 1;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.begin()->second;
}

int Poly::jet_order() const {
    int k = 0;
    for (const auto& [mon, c] : terms_)
        for (const auto& [v, e] : mon) k = std::max(k, var_jet_order(v, n_));
    return k;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!jetinv::is_zero(c)) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (jetinv::is_zero(it->second)) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    unify(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    unify(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (jetinv::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

static Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        } else if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else {
            r.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.n_ ? a.n_ : b.n_);
    if (a.n_ && b.n_ && a.n_ != b.n_) throw Error("polynomial dimension mismatch");
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mon_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw Error("negative polynomial power");
    Poly r = constant(n_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative(Var v) const {
    Poly r(n_);
    for (const auto& [mon, c] : terms_) {
        for (std::size_t k = 0; k < mon.size(); ++k) {
            if (mon[k].first != v) continue;
            Monomial m = mon;
            Rat coef = c * mon[k].second;
            if (--m[k].second == 0) m.erase(m.begin() + static_cast<long>(k));
            r.add_term(m, coef);
        }
    }
    return r;
}

Poly Poly::total_derivative(int i) const {
    if (i < 0 || i >= n_) throw Error("total derivative direction out of range");
    Poly r(n_);
    for (const auto& [mon, c] : terms_) {
        for (std::size_t k = 0; k < mon.size(); ++k) {
            auto [v, e] = mon[k];
            // d(mon)/d(v) * D_i(v)
            Monomial m = mon;
            Rat coef = c * e;
            if (--m[k].second == 0) m.erase(m.begin() + static_cast<long>(k));
            if (var_is_x(v)) {
                if (var_x_index(v) == i) r.add_term(m, coef);
            } else {
                Var vnext = var_p(var_mi(v, n_).plus(i));
                Monomial mm = mon_mul(m, {{vnext, 1}});
                r.add_term(mm, coef);
            }
        }
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mon, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += rat_str(c);
        for (const auto& [v, e] : mon) {
            s += var_is_x(v) ? "*x" + std::to_string(var_x_index(v) + 1)
                             : "*p[" + var_mi(v, n_).key() + "]";
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace jetinv
