#include "jetinv/jetpoint.hpp"

#include <json.hpp>

namespace jetinv {

JetPoint::JetPoint(int n, int order, std::vector<Rat> x, std::map<MultiIndex, Rat> coeffs)
    : n_(n), order_(order), x_(std::move(x)), coeffs_(std::move(coeffs)) {
    if (n_ < 1) throw Error("jet dimension must be positive");
    if (order_ < 0) throw Error("jet order must be non-negative");
    if (static_cast<int>(x_.size()) != n_) throw Error("base point arity mismatch");
    std::size_t expected = 0;
    for (int t = 0; t <= order_; ++t) expected += MultiIndex::all_of_order(n_, t).size();
    if (coeffs_.size() != expected) throw Error("jet coefficient table incomplete");
    for (const auto& [z, v] : coeffs_) {
        if (z.n() != n_) throw Error("jet coefficient with wrong arity");
        if (z.order() > order_) throw Error("jet coefficient beyond stated order");
    }
}

JetPoint JetPoint::zero(int n, int order) {
    std::map<MultiIndex, Rat> coeffs;
    for (const auto& z : MultiIndex::all_up_to(n, order)) coeffs[z] = 0;
    return JetPoint(n, order, std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)),
                    std::move(coeffs));
}

const Rat& JetPoint::coeff(const MultiIndex& z) const {
    auto it = coeffs_.find(z);
    if (it == coeffs_.end())
        throw OrderTooLow("jet order " + std::to_string(order_) +
                          " too low for coefficient p[" + z.key() + "]");
    return it->second;
}

std::vector<Rat> JetPoint::grad() const {
    std::vector<Rat> g;
    g.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) g.push_back(coeff(MultiIndex(n_).plus(i)));
    return g;
}

std::string JetPoint::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["order"] = order_;
    auto xs = nlohmann::json::array();
    for (const auto& v : x_) xs.push_back(rat_str(v));
    j["x"] = xs;
    nlohmann::json cs = nlohmann::json::object();
    for (const auto& [z, v] : coeffs_) cs[z.key()] = rat_str(v);
    j["coeffs"] = cs;
    return j.dump();
}

JetPoint JetPoint::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    int order = j.at("order").get<int>();
    std::vector<Rat> x;
    for (const auto& s : j.at("x")) x.push_back(rat_parse(s.get<std::string>()));
    std::map<MultiIndex, Rat> coeffs;
    for (const auto& [key, val] : j.at("coeffs").items())
        coeffs[MultiIndex::parse(key, n)] = rat_parse(val.get<std::string>());
    return JetPoint(n, order, std::move(x), std::move(coeffs));
}

SymTensor::SymTensor(int n, int degree) : n_(n), deg_(degree) {
    for (const auto& z : MultiIndex::all_of_order(n, degree)) comp_[z] = 0;
}

const Rat& SymTensor::comp(const MultiIndex& z) const {
    auto it = comp_.find(z);
    if (it == comp_.end()) throw Error("tensor component of wrong order");
    return it->second;
}

void SymTensor::set(const MultiIndex& z, Rat v) {
    auto it = comp_.find(z);
    if (it == comp_.end()) throw Error("tensor component of wrong order");
    it->second = std::move(v);
}

Rat SymTensor::eval(const std::vector<std::vector<Rat>>& vecs) const {
    if (static_cast<int>(vecs.size()) != deg_) throw Error("tensor arity mismatch");
    if (deg_ == 0) return comp_.begin()->second;
    // sum over all n^t ordered slot tuples
    Rat acc = 0;
    std::vector<int> slots(static_cast<std::size_t>(deg_), 0);
    for (;;) {
        Rat t = comp(MultiIndex::of_tuple(n_, slots));
        if (!jetinv::is_zero(t)) {
            for (int s = 0; s < deg_; ++s)
                t *= vecs[static_cast<std::size_t>(s)][static_cast<std::size_t>(slots[static_cast<std::size_t>(s)])];
            acc += t;
        }
        int pos = deg_ - 1;
        while (pos >= 0 && slots[static_cast<std::size_t>(pos)] == n_ - 1)
            slots[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++slots[static_cast<std::size_t>(pos)];
    }
    return acc;
}

SymTensor sym_transform(const SymTensor& q, const std::vector<std::vector<Rat>>& m) {
    int n = q.n();
    int t = q.degree();
    SymTensor out(n, t);
    if (t == 0) {
        out.set(MultiIndex(n), q.comp(MultiIndex(n)));
        return out;
    }
    for (const auto& z : MultiIndex::all_of_order(n, t)) {
        std::vector<int> target = z.tuple();
        Rat acc = 0;
        std::vector<int> slots(static_cast<std::size_t>(t), 0);
        for (;;) {
            Rat term = q.comp(MultiIndex::of_tuple(n, slots));
            if (!is_zero(term)) {
                for (int l = 0; l < t; ++l)
                    term *= m[static_cast<std::size_t>(target[static_cast<std::size_t>(l)])]
                             [static_cast<std::size_t>(slots[static_cast<std::size_t>(l)])];
                acc += term;
            }
            int pos = t - 1;
            while (pos >= 0 && slots[static_cast<std::size_t>(pos)] == n - 1)
                slots[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++slots[static_cast<std::size_t>(pos)];
        }
        out.set(z, acc);
    }
    return out;
}

std::vector<SymTensor> pure_jets(const JetPoint& j) {
    std::vector<SymTensor> out;
    for (int t = 0; t <= j.order(); ++t) {
        SymTensor q(j.n(), t);
        for (const auto& z : MultiIndex::all_of_order(j.n(), t)) q.set(z, j.coeff(z));
        out.push_back(std::move(q));
    }
    return out;
}

JetPoint jet_from_tensors(const std::vector<Rat>& x, const std::vector<SymTensor>& q) {
    if (q.empty()) throw Error("tensor list empty");
    int n = q.front().n();
    int order = static_cast<int>(q.size()) - 1;
    std::map<MultiIndex, Rat> coeffs;
    for (int t = 0; t <= order; ++t) {
        if (q[static_cast<std::size_t>(t)].degree() != t) throw Error("tensor degree mismatch");
        for (const auto& [z, v] : q[static_cast<std::size_t>(t)].comps()) coeffs[z] = v;
    }
    return JetPoint(n, order, x, std::move(coeffs));
}

JetPoint jet_of_polynomial(const Poly& source, const std::vector<Rat>& x0, int k) {
    if (k < 0) throw Error("jet order must be non-negative");
    int n = source.n();
    for (const auto& [mon, c] : source.terms())
        for (const auto& [v, e] : mon)
            if (!var_is_x(v)) throw Error("jet source must be a polynomial in x only");

    auto at_x0 = [&](Var v) { return x0[static_cast<std::size_t>(var_x_index(v))]; };

    std::map<MultiIndex, Rat> coeffs;
    std::map<MultiIndex, Poly> partials;
    partials[MultiIndex(n)] = source;
    coeffs[MultiIndex(n)] = source.eval(at_x0);
    for (int t = 1; t <= k; ++t) {
        for (const auto& z : MultiIndex::all_of_order(n, t)) {
            int i = 0;
            while (z[i] == 0) ++i;
            const Poly& parent = partials.at(z.minus(i));
            Poly dz = parent.derivative(var_x(i));
            coeffs[z] = dz.eval(at_x0);
            partials[z] = std::move(dz);
        }
    }
    return JetPoint(n, k, x0, std::move(coeffs));
}

} // namespace jetinv
