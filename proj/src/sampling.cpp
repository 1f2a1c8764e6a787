#include "jetinv/sampling.hpp"

namespace jetinv {

JetPoint random_jet(Rng& rng, int n, int order) {
    QVec x;
    for (int i = 0; i < n; ++i) x.push_back(rng.rat_small());
    std::map<MultiIndex, Rat> coeffs;
    for (const auto& z : MultiIndex::all_up_to(n, order)) coeffs[z] = rng.rat_small();
    return JetPoint(n, order, std::move(x), std::move(coeffs));
}

Motion random_motion(Rng& rng, int n) {
    for (;;) {
        QMat s = qmat_zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rat v = rng.rat_small();
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
            }
        try {
            Motion rot = cayley_rotation(SkewParam(s));
            QVec b;
            for (int i = 0; i < n; ++i) b.push_back(rng.rat_small());
            return Motion(rot.rotation(), std::move(b));
        } catch (const SingularCayley&) {
            continue;
        }
    }
}

JetPoint random_jet_where(Rng& rng, int n, int order,
                          const std::function<bool(const JetPoint&)>& pred, int max_attempts) {
    for (int a = 0; a < max_attempts; ++a) {
        JetPoint j = random_jet(rng, n, order);
        if (pred(j)) return j;
    }
    throw Error("sampling failed to reach the regular stratum");
}

} // namespace jetinv
