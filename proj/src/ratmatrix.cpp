#include "galdist/ratmatrix.hpp"

namespace galdist {

RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMatrix diagonal_matrix(const std::vector<Q>& d) {
    RatMatrix m(d.size(), std::vector<Q>(d.size(), Q(0)));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

bool is_square_matrix(const RatMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

bool is_symmetric(const RatMatrix& m) {
    if (!is_square_matrix(m)) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

RatMatrix transpose(const RatMatrix& m) {
    if (m.empty()) return {};
    RatMatrix t(m[0].size(), std::vector<Q>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = a[0].size();
    if (inner != b.size()) throw DomainError("matrix dimension mismatch");
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    RatMatrix r(a.size(), std::vector<Q>(cols, Q(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!is_square_matrix(m)) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.size();
    RatMatrix a = m, inv = identity_matrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw DomainError("singular matrix");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Q s = 1 / a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Q f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Q determinant(const RatMatrix& m) {
    if (!is_square_matrix(m)) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.size();
    RatMatrix a = m;
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Q f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

RatMatrix congruence(const RatMatrix& g, const RatMatrix& p) { return multiply(transpose(p), multiply(g, p)); }

}  // namespace galdist
