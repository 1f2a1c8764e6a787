#include "jetinv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jetinv/errors.hpp"

namespace jetinv {

QMat qmat_zero(int rows, int cols) {
    return QMat(static_cast<std::size_t>(rows), QVec(static_cast<std::size_t>(cols), Rat(0)));
}

QMat qmat_identity(int n) {
    QMat a = qmat_zero(n, n);
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

QMat qmat_transpose(const QMat& a) {
    QMat r = qmat_zero(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    QMat r = qmat_zero(static_cast<int>(rows), static_cast<int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

QVec qmat_vec(const QMat& a, const QVec& v) {
    QVec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

QMat qmat_add(const QMat& a, const QMat& b) {
    QMat r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[i][j] += b[i][j];
    return r;
}

QMat qmat_sub(const QMat& a, const QMat& b) {
    QMat r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

QMat qmat_scale(const QMat& a, const Rat& c) {
    QMat r = a;
    for (auto& row : r)
        for (auto& v : row) v *= c;
    return r;
}

bool qmat_equal(const QMat& a, const QMat& b) { return a == b; }

Rat qvec_dot(const QVec& a, const QVec& b) {
    Rat r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

Rat qmat_det(QMat a) {
    std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(a[r][col])) continue;
            Rat f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::optional<QMat> qmat_inverse(QMat a) {
    std::size_t n = a.size();
    QMat inv = qmat_identity(static_cast<int>(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat f = Rat(1) / a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] *= f;
            inv[col][c] *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            Rat g = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= g * a[col][c];
                inv[r][c] -= g * inv[col][c];
            }
        }
    }
    return inv;
}

int qmat_rank(QMat a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && is_zero(a[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (is_zero(a[r][col])) continue;
            Rat f = a[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::optional<QVec> qmat_solve(QMat a, QVec b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat f = Rat(1) / a[col][col];
        for (std::size_t c = 0; c < n; ++c) a[col][c] *= f;
        b[col] *= f;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            Rat g = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= g * a[col][c];
            b[r] -= g * b[col];
        }
    }
    return b;
}

std::vector<QMat> qmat_powers(const QMat& a, int k) {
    std::vector<QMat> pw;
    pw.push_back(qmat_identity(static_cast<int>(a.size())));
    for (int i = 1; i <= k; ++i) pw.push_back(qmat_mul(pw.back(), a));
    return pw;
}

DMat dmat_of(const QMat& a) {
    DMat r(a.size(), DVec(a[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[i][j] = rat_double(a[i][j]);
    return r;
}

DVec dvec_of(const QVec& v) {
    DVec r(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = rat_double(v[i]);
    return r;
}

EigenSym jacobi_eigen(DMat a, double tol, int max_sweeps) {
    std::size_t n = a.size();
    DMat v(n, DVec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p][q]));
        if (off < tol) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < tol * 1e-3) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });

    EigenSym out;
    out.eigenvalues.resize(n);
    out.vectors = DMat(n, DVec(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a[idx[k]][idx[k]];
        double sign = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::fabs(v[i][idx[k]]) > 1e-12) {
                sign = v[i][idx[k]] > 0 ? 1.0 : -1.0;
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) out.vectors[i][k] = sign * v[i][idx[k]];
    }
    return out;
}

} // namespace jetinv
