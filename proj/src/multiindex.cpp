#include "jetinv/multiindex.hpp"

namespace jetinv {

MultiIndex MultiIndex::parse(const std::string& key, int n) {
    std::vector<int> e;
    std::string cur;
    for (char c : key) {
        if (c == ',') {
            e.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) e.push_back(std::stoi(cur));
    if (static_cast<int>(e.size()) != n)
        throw Error("multi-index key '" + key + "' has wrong arity");
    return MultiIndex(std::move(e));
}

static void rec_of_order(int n, int t, int pos, std::vector<int>& cur,
                         std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[pos] = t;
        out.emplace_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int v = t; v >= 0; --v) {
        cur[pos] = v;
        rec_of_order(n, t - v, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

std::vector<MultiIndex> MultiIndex::all_of_order(int n, int t) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(n, 0);
    rec_of_order(n, t, 0, cur, out);
    return out;
}

std::vector<MultiIndex> MultiIndex::all_up_to(int n, int k) {
    std::vector<MultiIndex> out;
    for (int t = 0; t <= k; ++t)
        for (auto& z : all_of_order(n, t)) out.push_back(z);
    return out;
}

MultiIndex MultiIndex::of_tuple(int n, const std::vector<int>& slots) {
    MultiIndex z(n);
    for (int j : slots) {
        if (j < 0 || j >= n) throw Error("tuple slot out of range");
        ++z.e_[j];
    }
    return z;
}

std::vector<int> MultiIndex::tuple() const {
    std::vector<int> t;
    for (int i = 0; i < n(); ++i)
        for (int r = 0; r < e_[i]; ++r) t.push_back(i);
    return t;
}

} // namespace jetinv
