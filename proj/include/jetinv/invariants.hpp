#pragma once

#include <string>
#include <vector>

#include "jetinv/jetpoint.hpp"
#include "jetinv/linalg.hpp"

namespace jetinv {

/// Tags for the scalar invariant catalog. Eigen-based invariants (lambda,
/// frame_pair) are numeric-only and evaluated by the frames module.
enum class InvTag { I0, I1, I2Tr, I2Pair, IsPair, I3Mixed, Lambda, FramePair };

class InvariantId {
  public:
    static InvariantId i0() { return {InvTag::I0, {}}; }
    static InvariantId i1() { return {InvTag::I1, {}}; }
    static InvariantId i2_tr(int i) { return {InvTag::I2Tr, {i}}; }
    static InvariantId i2_pair(int i) { return {InvTag::I2Pair, {i}}; }
    static InvariantId is_pair(std::vector<int> tuple) { return {InvTag::IsPair, std::move(tuple)}; }
    static InvariantId i3_mixed(int i, int j, int l) { return {InvTag::I3Mixed, {i, j, l}}; }
    static InvariantId lambda(int i) { return {InvTag::Lambda, {i}}; }
    static InvariantId frame_pair(int i) { return {InvTag::FramePair, {i}}; }

    InvTag tag() const { return tag_; }
    const std::vector<int>& indices() const { return idx_; }

    /// Bounds-checks indices against the dimension; throws BadConfig.
    void validate(int n) const;

    /// Minimal jet order needed to evaluate.
    int required_order() const;

    bool eigen_tagged() const { return tag_ == InvTag::Lambda || tag_ == InvTag::FramePair; }

    std::string name() const;
    static InvariantId parse(const std::string& text);

    bool operator==(const InvariantId&) const = default;
    auto operator<=>(const InvariantId&) const = default;

  private:
    InvariantId(InvTag tag, std::vector<int> idx) : tag_(tag), idx_(std::move(idx)) {}
    InvTag tag_;
    std::vector<int> idx_;
};

/// A_ij = p_{e_i+e_j} at the point; symmetric by construction.
QMat operator_A(const JetPoint& j);

/// Symbolic operator A as a matrix of jet expressions.
std::vector<std::vector<JetExpr>> operator_A_expr(int n);

/// Exact value of a catalog invariant at a jet point.
/// Throws OrderTooLow when the jet is too short, Error for eigen-tagged ids.
Rat eval_invariant(const InvariantId& id, const JetPoint& j);

/// Closed-form expression of an algebraic catalog invariant (polynomial in
/// the jet variables). Intended for the derivation/syzygy machinery; mind the
/// expansion size for high s and large n.
JetExpr invariant_expr(const InvariantId& id, int n);

/// Newton-Girard chain: power sums S_1..S_n -> elementary symmetric E_1..E_n.
std::vector<Rat> newton_girard(const std::vector<Rat>& power_sums);

/// Elementary symmetric functions of an explicit value list (independent
/// oracle for the Newton-Girard chain).
std::vector<Rat> elementary_symmetric(const std::vector<Rat>& values, int upto);

/// Cayley-Hamilton reduction of I_{2,(n)} through lower pair invariants:
/// sum_{i=1..n} (-1)^{i-1} E_i(A) I_{2,(n-i)} with I_{2,(0)} = I_1.
Rat cayley_hamilton_reduce(const JetPoint& j);

/// Exact rank over Q of the Jacobian of the listed invariants with respect to
/// all jet coordinates of j's order.
int independence_rank(const std::vector<InvariantId>& ids, const JetPoint& j);

/// The algebraic catalog at a given dimension and jet order (pair tensors up
/// to degree max_s).
std::vector<InvariantId> invariant_catalog(int n, int order, int max_s = 4);

} // namespace jetinv
