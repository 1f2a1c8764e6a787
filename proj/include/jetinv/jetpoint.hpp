#pragma once

#include <map>
#include <vector>

#include "jetinv/jetexpr.hpp"
#include "jetinv/multiindex.hpp"
#include "jetinv/poly.hpp"
#include "jetinv/rational.hpp"

namespace jetinv {

/// A point of J^k(R^n): base point, value and all raw partials p_zeta up to
/// order k, as exact rationals. Every multi-index of order <= k is present
/// exactly once; symmetry of the higher derivatives is structural.
class JetPoint {
  public:
    JetPoint(int n, int order, std::vector<Rat> x, std::map<MultiIndex, Rat> coeffs);

    static JetPoint zero(int n, int order);

    int n() const { return n_; }
    int order() const { return order_; }
    const std::vector<Rat>& x() const { return x_; }
    const std::map<MultiIndex, Rat>& coeffs() const { return coeffs_; }

    /// p_zeta; throws OrderTooLow when |zeta| exceeds the stored order.
    const Rat& coeff(const MultiIndex& z) const;

    Rat u() const { return coeff(MultiIndex(n_)); }
    std::vector<Rat> grad() const;

    /// Value of a jet variable (base coordinate or jet coefficient).
    Rat value_of(Var v) const {
        if (var_is_x(v)) return x_[static_cast<std::size_t>(var_x_index(v))];
        return coeff(var_mi(v, n_));
    }

    bool operator==(const JetPoint&) const = default;

    std::string to_json() const;
    static JetPoint from_json(const std::string& text);

  private:
    int n_, order_;
    std::vector<Rat> x_;
    std::map<MultiIndex, Rat> coeffs_;
};

/// Symmetric t-linear form on R^n, components stored once per sorted
/// multi-index of order t.
class SymTensor {
  public:
    SymTensor(int n, int degree);

    int n() const { return n_; }
    int degree() const { return deg_; }

    const Rat& comp(const MultiIndex& z) const;
    void set(const MultiIndex& z, Rat v);
    const std::map<MultiIndex, Rat>& comps() const { return comp_; }

    /// Full symmetric evaluation Q(xi_1, ..., xi_t).
    Rat eval(const std::vector<std::vector<Rat>>& vecs) const;

    bool operator==(const SymTensor&) const = default;

  private:
    int n_, deg_;
    std::map<MultiIndex, Rat> comp_;
};

/// Pure jets Q_0..Q_k of a jet point (flat-connection splitting; Q_t carries
/// the order-t partials, Q_1 is identified with grad u).
std::vector<SymTensor> pure_jets(const JetPoint& j);

/// Tensorial change of components: Q'(eps_{i_1},...,eps_{i_t}) =
/// sum_j m[i_1][j_1] ... m[i_t][j_t] Q(eps_{j_1},...,eps_{j_t}).
SymTensor sym_transform(const SymTensor& q, const std::vector<std::vector<Rat>>& m);

/// Reassembles a jet point from its base point and pure jets.
JetPoint jet_from_tensors(const std::vector<Rat>& x, const std::vector<SymTensor>& q);

/// Exact k-jet of a polynomial source at x0; coefficients are raw partials
/// (no factorial normalization).
JetPoint jet_of_polynomial(const Poly& source, const std::vector<Rat>& x0, int k);

inline Rat eval_at(const Poly& p, const JetPoint& j) {
    return p.eval([&](Var v) { return j.value_of(v); });
}

inline Rat eval_at(const JetExpr& e, const JetPoint& j) {
    return e.eval([&](Var v) { return j.value_of(v); });
}

/// (D_i e)(j) without symbolic expansion.
inline Rat eval_total_derivative_at(const JetExpr& e, int i, const JetPoint& j) {
    return e.eval_total_derivative(i, [&](Var v) { return j.value_of(v); });
}

} // namespace jetinv
