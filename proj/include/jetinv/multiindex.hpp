#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "jetinv/errors.hpp"

namespace jetinv {

/// Multi-index (i_1,...,i_n) of non-negative integers; |zeta| = sum of entries.
/// Jet coordinates p_zeta are keyed by these; the zero multi-index keys u.
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(int n) : e_(n, 0) {}
    explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
        for (int v : e_)
            if (v < 0) throw Error("multi-index with negative entry");
    }

    int n() const { return static_cast<int>(e_.size()); }
    int order() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    int operator[](int i) const { return e_[i]; }

    /// zeta + 1_i (one more derivative in direction i, 0-based).
    MultiIndex plus(int i) const {
        MultiIndex r = *this;
        ++r.e_[i];
        return r;
    }

    /// zeta - 1_i; entry must be positive.
    MultiIndex minus(int i) const {
        MultiIndex r = *this;
        if (r.e_[i] == 0) throw Error("multi-index entry underflow");
        --r.e_[i];
        return r;
    }

    const std::vector<int>& entries() const { return e_; }

    auto operator<=>(const MultiIndex&) const = default;

    /// Comma-separated key, e.g. "2,0" (the JSON map key format).
    std::string key() const {
        std::string s;
        for (int i = 0; i < n(); ++i) {
            if (i) s += ',';
            s += std::to_string(e_[i]);
        }
        return s;
    }

    static MultiIndex parse(const std::string& key, int n);

    /// All multi-indices on n letters with |zeta| == t, lexicographic order.
    static std::vector<MultiIndex> all_of_order(int n, int t);

    /// All multi-indices with |zeta| <= k, grouped by increasing order.
    static std::vector<MultiIndex> all_up_to(int n, int k);

    /// Multi-index of the sorted slot tuple (j_1..j_t), entries counted:
    /// zeta_j = #{ l : j_l == j }.
    static MultiIndex of_tuple(int n, const std::vector<int>& slots);

    /// One representative sorted slot tuple (i_1 <= ... <= i_t) for zeta.
    std::vector<int> tuple() const;

  private:
    std::vector<int> e_;
};

} // namespace jetinv
