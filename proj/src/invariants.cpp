#include "jetinv/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace jetinv {

void InvariantId::validate(int n) const {
    auto bad = [&](const std::string& why) { throw BadConfig("invariant " + name() + ": " + why); };
    switch (tag_) {
        case InvTag::I0:
        case InvTag::I1:
            if (!idx_.empty()) bad("takes no indices");
            break;
        case InvTag::I2Tr:
            if (idx_.size() != 1 || idx_[0] < 1 || idx_[0] > n) bad("index must be in 1..n");
            break;
        case InvTag::I2Pair:
            if (idx_.size() != 1 || idx_[0] < 1 || idx_[0] > 2 * n - 1)
                bad("index must be in 1..2n-1");
            break;
        case InvTag::IsPair: {
            if (idx_.size() < 2) bad("needs s >= 2 indices");
            for (std::size_t k = 0; k < idx_.size(); ++k) {
                if (idx_[k] < 0 || idx_[k] >= n) bad("indices must be in 0..n-1");
                if (k && idx_[k - 1] > idx_[k]) bad("indices must be non-decreasing");
            }
            break;
        }
        case InvTag::I3Mixed:
            if (idx_.size() != 3) bad("needs (i,j,l)");
            for (int v : idx_)
                if (v < 0 || v >= n) bad("indices must be in 0..n-1");
            break;
        case InvTag::Lambda:
        case InvTag::FramePair:
            if (idx_.size() != 1 || idx_[0] < 1 || idx_[0] > n) bad("index must be in 1..n");
            break;
    }
}

int InvariantId::required_order() const {
    switch (tag_) {
        case InvTag::I0: return 0;
        case InvTag::I1: return 1;
        case InvTag::I2Tr:
        case InvTag::I2Pair:
        case InvTag::Lambda:
        case InvTag::FramePair: return 2;
        case InvTag::IsPair: {
            int s = static_cast<int>(idx_.size());
            bool needs_a = std::any_of(idx_.begin(), idx_.end(), [](int v) { return v > 0; });
            return std::max(needs_a ? 2 : 0, s);
        }
        case InvTag::I3Mixed: return 3;
    }
    return 0;
}

std::string InvariantId::name() const {
    auto join = [&] {
        std::string s;
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(idx_[k]);
        }
        return s;
    };
    switch (tag_) {
        case InvTag::I0: return "I0";
        case InvTag::I1: return "I1";
        case InvTag::I2Tr: return "I2_tr:" + join();
        case InvTag::I2Pair: return "I2_pair:" + join();
        case InvTag::IsPair: return "Is_pair:" + join();
        case InvTag::I3Mixed: return "I3_mixed:" + join();
        case InvTag::Lambda: return "lambda:" + join();
        case InvTag::FramePair: return "frame_pair:" + join();
    }
    return "?";
}

InvariantId InvariantId::parse(const std::string& text) {
    std::string head = text, args;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        head = text.substr(0, pos);
        args = text.substr(pos + 1);
    }
    std::vector<int> idx;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) idx.push_back(std::stoi(tok));

    if (head == "I0") return i0();
    if (head == "I1") return i1();
    if (head == "I2_tr") return {InvTag::I2Tr, idx};
    if (head == "I2_pair") return {InvTag::I2Pair, idx};
    if (head == "Is_pair") return {InvTag::IsPair, idx};
    if (head == "I3_mixed") return {InvTag::I3Mixed, idx};
    if (head == "lambda") return {InvTag::Lambda, idx};
    if (head == "frame_pair") return {InvTag::FramePair, idx};
    throw BadConfig("unknown invariant '" + text + "'");
}

QMat operator_A(const JetPoint& j) {
    int n = j.n();
    if (j.order() < 2) throw OrderTooLow("operator A needs a 2-jet");
    QMat a = qmat_zero(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                j.coeff(MultiIndex(n).plus(r).plus(c));
    return a;
}

std::vector<std::vector<JetExpr>> operator_A_expr(int n) {
    std::vector<std::vector<JetExpr>> a;
    for (int r = 0; r < n; ++r) {
        std::vector<JetExpr> row;
        for (int c = 0; c < n; ++c) row.push_back(JetExpr::p(n, MultiIndex(n).plus(r).plus(c)));
        a.push_back(std::move(row));
    }
    return a;
}

// ---------------------------------------------------------------------------
// Generic evaluation core. K is the scalar ring: Rat for plain values, DualRat
// for exact forward-mode derivatives (Jacobian ranks).
// ---------------------------------------------------------------------------

namespace {

struct DualRat {
    Rat a; // value
    Rat b; // derivative
    DualRat() : a(0), b(0) {}
    DualRat(Rat v) : a(std::move(v)), b(0) {}
    DualRat(Rat v, Rat d) : a(std::move(v)), b(std::move(d)) {}
    DualRat& operator+=(const DualRat& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    friend DualRat operator+(DualRat x, const DualRat& y) { return x += y; }
    friend DualRat operator*(const DualRat& x, const DualRat& y) {
        return DualRat(x.a * y.a, x.a * y.b + x.b * y.a);
    }
};

template <typename K, typename ValF>
std::vector<K> mat_vec_k(int n, ValF&& entry, const std::vector<K>& v) {
    std::vector<K> r(static_cast<std::size_t>(n), K());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[static_cast<std::size_t>(i)] += entry(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

/// Evaluates a catalog invariant over the ring K given jet variable values.
template <typename K, typename ValF>
K eval_invariant_k(const InvariantId& id, int n, ValF&& val) {
    auto pvar = [&](const MultiIndex& z) { return val(var_p(z)); };
    auto a_entry = [&](int r, int c) { return pvar(MultiIndex(n).plus(r).plus(c)); };
    auto grad = [&] {
        std::vector<K> v;
        for (int i = 0; i < n; ++i) v.push_back(pvar(MultiIndex(n).plus(i)));
        return v;
    };
    auto apow_vec = [&](std::vector<K> v, int k) {
        for (int r = 0; r < k; ++r) v = mat_vec_k(n, a_entry, v);
        return v;
    };
    auto dot = [&](const std::vector<K>& x, const std::vector<K>& y) {
        K s;
        for (int i = 0; i < n; ++i)
            s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        return s;
    };
    // Q_s evaluated on s vectors, summing over all ordered slot tuples.
    auto tensor_eval = [&](int s, const std::vector<std::vector<K>>& vecs) {
        K acc;
        std::vector<int> slots(static_cast<std::size_t>(s), 0);
        for (;;) {
            K t = pvar(MultiIndex::of_tuple(n, slots));
            for (int l = 0; l < s; ++l)
                t = t * vecs[static_cast<std::size_t>(l)][static_cast<std::size_t>(
                        slots[static_cast<std::size_t>(l)])];
            acc += t;
            int pos = s - 1;
            while (pos >= 0 && slots[static_cast<std::size_t>(pos)] == n - 1)
                slots[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++slots[static_cast<std::size_t>(pos)];
        }
        return acc;
    };

    switch (id.tag()) {
        case InvTag::I0: return pvar(MultiIndex(n));
        case InvTag::I1: {
            auto v = grad();
            return dot(v, v);
        }
        case InvTag::I2Tr: {
            int k = id.indices()[0];
            K tr;
            for (int a = 0; a < n; ++a) {
                std::vector<K> e(static_cast<std::size_t>(n), K());
                e[static_cast<std::size_t>(a)] = K(Rat(1));
                auto col = apow_vec(std::move(e), k);
                tr += col[static_cast<std::size_t>(a)];
            }
            return tr;
        }
        case InvTag::I2Pair: {
            auto v = grad();
            return dot(apow_vec(v, id.indices()[0]), v);
        }
        case InvTag::IsPair: {
            int s = static_cast<int>(id.indices().size());
            auto v = grad();
            std::vector<std::vector<K>> vecs;
            for (int t = 0; t < s; ++t) vecs.push_back(apow_vec(v, id.indices()[static_cast<std::size_t>(t)]));
            return tensor_eval(s, vecs);
        }
        case InvTag::I3Mixed: {
            auto [i, jj, l] = std::tuple{id.indices()[0], id.indices()[1], id.indices()[2]};
            auto v = grad();
            auto alv = apow_vec(v, l);
            K tr;
            for (int a = 0; a < n; ++a) {
                std::vector<K> e(static_cast<std::size_t>(n), K());
                e[static_cast<std::size_t>(a)] = K(Rat(1));
                auto ai = apow_vec(e, i);
                auto aj = apow_vec(e, jj);
                tr += tensor_eval(3, {ai, aj, alv});
            }
            return tr;
        }
        case InvTag::Lambda:
        case InvTag::FramePair:
            throw Error("eigen-tagged invariant " + id.name() +
                        " is numeric-only; use the frames module");
    }
    return K();
}

} // namespace

Rat eval_invariant(const InvariantId& id, const JetPoint& j) {
    id.validate(j.n());
    if (id.required_order() > j.order())
        throw OrderTooLow("invariant " + id.name() + " needs order " +
                          std::to_string(id.required_order()));
    return eval_invariant_k<Rat>(id, j.n(), [&](Var v) { return j.value_of(v); });
}

JetExpr invariant_expr(const InvariantId& id, int n) {
    id.validate(n);
    if (id.eigen_tagged())
        throw Error("eigen-tagged invariant " + id.name() + " has no closed form");
    Poly p = eval_invariant_k<Poly>(id, n, [&](Var v) { return Poly::variable(n, v); });
    return JetExpr(std::move(p));
}

std::vector<Rat> newton_girard(const std::vector<Rat>& power_sums) {
    int n = static_cast<int>(power_sums.size());
    std::vector<Rat> e(static_cast<std::size_t>(n) + 1, Rat(0));
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (int i = 1; i <= k; ++i) {
            Rat term = power_sums[static_cast<std::size_t>(i - 1)] *
                       e[static_cast<std::size_t>(k - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    return {e.begin() + 1, e.end()};
}

std::vector<Rat> elementary_symmetric(const std::vector<Rat>& values, int upto) {
    std::vector<Rat> e(static_cast<std::size_t>(upto) + 1, Rat(0));
    e[0] = 1;
    for (const Rat& x : values)
        for (int k = upto; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += x * e[static_cast<std::size_t>(k - 1)];
    return {e.begin() + 1, e.end()};
}

Rat cayley_hamilton_reduce(const JetPoint& j) {
    int n = j.n();
    std::vector<Rat> s;
    for (int i = 1; i <= n; ++i) s.push_back(eval_invariant(InvariantId::i2_tr(i), j));
    std::vector<Rat> e = newton_girard(s);
    Rat acc = 0;
    for (int i = 1; i <= n; ++i) {
        Rat pair = (n - i == 0) ? eval_invariant(InvariantId::i1(), j)
                                : eval_invariant(InvariantId::i2_pair(n - i), j);
        Rat term = e[static_cast<std::size_t>(i - 1)] * pair;
        acc += (i % 2 == 1) ? term : -term;
    }
    return acc;
}

int independence_rank(const std::vector<InvariantId>& ids, const JetPoint& j) {
    int n = j.n();
    std::vector<Var> cols;
    for (int i = 0; i < n; ++i) cols.push_back(var_x(i));
    for (const auto& z : MultiIndex::all_up_to(n, j.order())) cols.push_back(var_p(z));

    QMat jac = qmat_zero(static_cast<int>(ids.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < ids.size(); ++r) {
        ids[r].validate(n);
        if (ids[r].required_order() > j.order())
            throw OrderTooLow("invariant " + ids[r].name() + " exceeds jet order");
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Var seed = cols[c];
            DualRat d = eval_invariant_k<DualRat>(ids[r], n, [&](Var v) {
                return DualRat(j.value_of(v), v == seed ? Rat(1) : Rat(0));
            });
            jac[r][c] = d.b;
        }
    }
    return qmat_rank(std::move(jac));
}

std::vector<InvariantId> invariant_catalog(int n, int order, int max_s) {
    std::vector<InvariantId> ids;
    ids.push_back(InvariantId::i0());
    if (order >= 1) ids.push_back(InvariantId::i1());
    if (order >= 2) {
        for (int i = 1; i <= n; ++i) ids.push_back(InvariantId::i2_tr(i));
        for (int i = 1; i <= 2 * n - 1; ++i) ids.push_back(InvariantId::i2_pair(i));
    }
    for (int s = 2; s <= std::min(order, max_s); ++s) {
        // all non-decreasing tuples 0 <= i_1 <= ... <= i_s < n
        std::vector<int> tup(static_cast<std::size_t>(s), 0);
        for (;;) {
            ids.push_back(InvariantId::is_pair(tup));
            int pos = s - 1;
            while (pos >= 0 && tup[static_cast<std::size_t>(pos)] == n - 1) --pos;
            if (pos < 0) break;
            int v = ++tup[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < s; ++q) tup[static_cast<std::size_t>(q)] = v;
        }
    }
    if (order >= 3)
        for (int i = 0; i < n; ++i)
            for (int jj = i; jj < n; ++jj)
                for (int l = 0; l < n; ++l) ids.push_back(InvariantId::i3_mixed(i, jj, l));
    return ids;
}

} // namespace jetinv
