#include "jetinv/motion.hpp"

#include <json.hpp>

namespace jetinv {

SkewParam::SkewParam(QMat s) : s_(std::move(s)) {
    std::size_t n = s_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (s_[i].size() != n) throw Error("skew parameter not square");
        for (std::size_t j = 0; j < n; ++j)
            if (s_[i][j] != -s_[j][i]) throw Error("skew parameter not antisymmetric");
    }
}

Motion::Motion(QMat r, QVec b) : r_(std::move(r)), b_(std::move(b)) {
    std::size_t n = b_.size();
    if (r_.size() != n) throw Error("motion rotation/translation size mismatch");
    if (!qmat_equal(qmat_mul(qmat_transpose(r_), r_), qmat_identity(static_cast<int>(n))))
        throw Error("motion rotation is not orthogonal");
    if (qmat_det(r_) != Rat(1)) throw Error("motion rotation has det != 1");
}

Motion Motion::compose(const Motion& other) const {
    QMat r = qmat_mul(r_, other.r_);
    QVec b = qmat_vec(r_, other.b_);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += b_[i];
    return Motion(std::move(r), std::move(b));
}

Motion Motion::inverse() const {
    QMat rt = qmat_transpose(r_);
    QVec b = qmat_vec(rt, b_);
    for (auto& v : b) v = -v;
    return Motion(std::move(rt), std::move(b));
}

std::string Motion::to_json() const {
    nlohmann::json j;
    auto rows = nlohmann::json::array();
    for (const auto& row : r_) {
        auto r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(rat_str(v));
        rows.push_back(r);
    }
    j["R"] = rows;
    auto bs = nlohmann::json::array();
    for (const auto& v : b_) bs.push_back(rat_str(v));
    j["b"] = bs;
    return j.dump();
}

Motion Motion::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    QMat r;
    for (const auto& row : j.at("R")) {
        QVec rv;
        for (const auto& v : row) rv.push_back(rat_parse(v.get<std::string>()));
        r.push_back(std::move(rv));
    }
    QVec b;
    for (const auto& v : j.at("b")) b.push_back(rat_parse(v.get<std::string>()));
    return Motion(std::move(r), std::move(b));
}

Motion cayley_rotation(const SkewParam& s) {
    int n = s.n();
    QMat i_plus = qmat_add(qmat_identity(n), s.matrix());
    QMat i_minus = qmat_sub(qmat_identity(n), s.matrix());
    auto inv = qmat_inverse(i_minus);
    if (!inv) throw SingularCayley("Cayley parameter with det(I+S) = 0");
    return Motion(qmat_mul(i_plus, *inv), QVec(static_cast<std::size_t>(n), Rat(0)));
}

QVec act_base(const Motion& g, const QVec& x) {
    QVec y = qmat_vec(g.rotation(), x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += g.translation_part()[i];
    return y;
}

JetPoint prolong_action(const Motion& g, const JetPoint& j) {
    std::vector<SymTensor> q = pure_jets(j);
    std::vector<SymTensor> out;
    out.reserve(q.size());
    for (const auto& qt : q) out.push_back(sym_transform(qt, g.rotation()));
    return jet_from_tensors(act_base(g, j.x()), out);
}

NumericMotion NumericMotion::after(const Motion& h) const {
    std::size_t n = b.size();
    DMat rh = dmat_of(h.rotation());
    DVec bh = dvec_of(h.translation_part());
    NumericMotion out;
    out.r = DMat(n, DVec(n, 0.0));
    out.b = DVec(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out.r[i][j] += r[i][k] * rh[k][j];
        }
    for (std::size_t i = 0; i < n; ++i) {
        out.b[i] = b[i];
        for (std::size_t k = 0; k < n; ++k) out.b[i] += r[i][k] * bh[k];
    }
    return out;
}

NumericMotion normalize(const JetPoint& j) {
    int n = j.n();
    if (j.order() < 2) throw OrderTooLow("normalization needs a 2-jet");
    QMat a = qmat_zero(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                j.coeff(MultiIndex(n).plus(r).plus(c));
    EigenSym es = jacobi_eigen(dmat_of(a));
    for (std::size_t k = 0; k + 1 < es.eigenvalues.size(); ++k)
        if (es.eigenvalues[k + 1] - es.eigenvalues[k] < 1e-8)
            throw DegenerateSpectrum("spectral gap below 1e-8 in normalization");

    // rows of R are the eigenvectors: R e_i = standard basis vector i
    std::size_t un = static_cast<std::size_t>(n);
    DMat r(un, DVec(un, 0.0));
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t k = 0; k < un; ++k) r[i][k] = es.vectors[k][i];

    double det = 1.0;
    {
        DMat tmp = r;
        for (std::size_t col = 0; col < un; ++col) {
            std::size_t piv = col;
            for (std::size_t rr = col; rr < un; ++rr)
                if (std::fabs(tmp[rr][col]) > std::fabs(tmp[piv][col])) piv = rr;
            if (piv != col) {
                std::swap(tmp[piv], tmp[col]);
                det = -det;
            }
            det *= tmp[col][col];
            for (std::size_t rr = col + 1; rr < un; ++rr) {
                double f = tmp[rr][col] / tmp[col][col];
                for (std::size_t cc = col; cc < un; ++cc) tmp[rr][cc] -= f * tmp[col][cc];
            }
        }
    }
    if (det < 0)
        for (std::size_t k = 0; k < un; ++k) r[un - 1][k] = -r[un - 1][k];

    DVec x = dvec_of(j.x());
    DVec b(un, 0.0);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t k = 0; k < un; ++k) b[i] -= r[i][k] * x[k];
    return NumericMotion{std::move(r), std::move(b)};
}

} // namespace jetinv
