#include "galdist/numfield.hpp"

namespace galdist {

std::string case_name(Case c) {
    switch (c) {
        case Case::Symplectic: return "symplectic";
        case Case::Orthogonal: return "orthogonal";
        case Case::Unitary: return "unitary";
    }
    return "unknown";
}

Case parse_case(const std::string& name) {
    if (name == "symplectic") return Case::Symplectic;
    if (name == "orthogonal") return Case::Orthogonal;
    if (name == "unitary") return Case::Unitary;
    throw InputError("unknown case '" + name + "'");
}

namespace {

bool squarefree(std::int64_t n) {
    if (n == 0) return false;
    std::int64_t m = n < 0 ? -n : n;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % (d * d) == 0) return false;
    return true;
}

}  // namespace

BiquadField BiquadField::klein(std::int64_t a, std::int64_t b) {
    if (!squarefree(a) || !squarefree(b) || a == 1 || b == 1 || a == b)
        throw DomainError("biquadratic model needs distinct square-free a, b other than 1");
    if (is_rational_square(Q(Z(static_cast<long>(a)) * Z(static_cast<long>(b)))))
        throw DomainError("biquadratic model: ab is a square");
    return {a, b};
}

BiquadField BiquadField::quadratic(std::int64_t a) {
    if (!squarefree(a) || a == 1) throw DomainError("quadratic model needs square-free a other than 1");
    return {a, 0};
}

BiquadElement::BiquadElement(const BiquadField& f, Q c0, Q c1, Q c2, Q c3)
    : a_(f.a), b_(f.b), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    if (f.degenerate() && (c_[2] != 0 || c_[3] != 0))
        throw DomainError("sqrt b component in a quadratic model");
}

void BiquadElement::check_same(const BiquadElement& o) const {
    if (a_ != o.a_ || b_ != o.b_) throw DomainError("elements of different fields");
}

bool BiquadElement::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool BiquadElement::fixed_by(Involution w) const { return apply_involution(*this, w) == *this; }

BiquadElement BiquadElement::operator+(const BiquadElement& o) const {
    check_same(o);
    BiquadElement r(field());
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

BiquadElement BiquadElement::operator-(const BiquadElement& o) const {
    check_same(o);
    BiquadElement r(field());
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

BiquadElement BiquadElement::operator-() const {
    BiquadElement r(field());
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
}

BiquadElement BiquadElement::operator*(const BiquadElement& o) const {
    check_same(o);
    const auto& x = c_;
    const auto& y = o.c_;
    const Q a(static_cast<long>(a_)), b(static_cast<long>(b_));
    BiquadElement r(field());
    r.c_[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] + a * b * x[3] * y[3];
    r.c_[1] = x[0] * y[1] + x[1] * y[0] + b * (x[2] * y[3] + x[3] * y[2]);
    r.c_[2] = x[0] * y[2] + x[2] * y[0] + a * (x[1] * y[3] + x[3] * y[1]);
    r.c_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    return r;
}

BiquadElement BiquadElement::operator*(const Q& s) const {
    BiquadElement r(field());
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = c_[i] * s;
    return r;
}

BiquadElement BiquadElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    BiquadElement s = apply_involution(*this, Involution::Sigma);
    BiquadElement t = apply_involution(*this, Involution::Tau);
    BiquadElement st = apply_involution(*this, Involution::SigmaTau);
    BiquadElement conj = s * t * st;
    BiquadElement n = *this * conj;
    return conj * Q(1 / n.c_[0]);
}

BiquadElement BiquadElement::operator/(const BiquadElement& o) const { return *this * o.inverse(); }

bool BiquadElement::operator==(const BiquadElement& o) const {
    check_same(o);
    return c_ == o.c_;
}

BiquadElement apply_involution(const BiquadElement& x, Involution w) {
    const auto& c = x.coeffs();
    switch (w) {
        case Involution::Sigma: return {x.field(), c[0], -c[1], c[2], -c[3]};
        case Involution::Tau: return {x.field(), c[0], c[1], -c[2], -c[3]};
        case Involution::SigmaTau: return {x.field(), c[0], -c[1], -c[2], c[3]};
    }
    return x;
}

BiquadElement norm_to_E(const BiquadElement& x) { return x * apply_involution(x, Involution::Tau); }
BiquadElement norm_to_Fprime(const BiquadElement& x) { return x * apply_involution(x, Involution::Sigma); }
BiquadElement norm_to_Fsecond(const BiquadElement& x) {
    return x * apply_involution(x, Involution::SigmaTau);
}
Q norm_to_Q(const BiquadElement& x) {
    BiquadElement n = norm_to_Fprime(norm_to_E(x));
    if (x.field().degenerate()) {
        // tau is trivial, so N_{E'/E} squared the element; take N_{E/F} once.
        return norm_to_Fprime(x).coeff(0);
    }
    return n.coeff(0);
}

Q norm_E_to_F(const BiquadElement& x) {
    if (x.coeff(2) != 0 || x.coeff(3) != 0) throw DomainError("element not in E");
    return norm_to_Fprime(x).coeff(0);
}

BiquadElement recover_hilbert90(const BiquadElement& x, Involution w) {
    const BiquadField f = x.field();
    if (x * apply_involution(x, w) != BiquadElement(f, 1))
        throw DomainError("recover_hilbert90: element does not have norm one");
    if (x == BiquadElement(f, -1)) {
        switch (w) {
            case Involution::Sigma: return BiquadElement::sqrt_a(f);
            case Involution::Tau:
                if (f.degenerate()) throw DomainError("tau is trivial in a quadratic model");
                return BiquadElement::sqrt_b(f);
            case Involution::SigmaTau: return BiquadElement::sqrt_a(f);
        }
    }
    return BiquadElement(f, 1) + x;
}

BiquadMatrix::BiquadMatrix(const BiquadField& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, BiquadElement(f)) {}

BiquadMatrix BiquadMatrix::identity(const BiquadField& f, std::size_t n) {
    BiquadMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = BiquadElement(f, 1);
    return m;
}

BiquadMatrix BiquadMatrix::from_rational(const BiquadField& f, const std::vector<std::vector<Q>>& m) {
    std::size_t r = m.size(), c = r ? m[0].size() : 0;
    BiquadMatrix out(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (m[i].size() != c) throw InputError("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) out(i, j) = BiquadElement(f, m[i][j]);
    }
    return out;
}

BiquadMatrix BiquadMatrix::operator*(const BiquadMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch");
    BiquadMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BiquadElement& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const BiquadElement& y = o(k, j);
                if (y.is_zero()) continue;
                r(i, j) += x * y;
            }
        }
    return r;
}

BiquadMatrix BiquadMatrix::operator+(const BiquadMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
    BiquadMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

BiquadMatrix BiquadMatrix::operator-(const BiquadMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
    BiquadMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

BiquadMatrix BiquadMatrix::operator*(const BiquadElement& s) const {
    BiquadMatrix r = *this;
    for (auto& e : r.data_) e = e * s;
    return r;
}

bool BiquadMatrix::operator==(const BiquadMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

BiquadMatrix BiquadMatrix::transpose() const {
    BiquadMatrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

BiquadMatrix BiquadMatrix::inverse() const {
    if (!is_square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    BiquadMatrix a = *this;
    BiquadMatrix inv = identity(field_, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw DomainError("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        BiquadElement s = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * s;
            inv(col, j) = inv(col, j) * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            BiquadElement f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
                if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

BiquadElement BiquadMatrix::det() const {
    if (!is_square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    BiquadMatrix a = *this;
    BiquadElement d(field_, 1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return BiquadElement(field_);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        BiquadElement s = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            BiquadElement f = a(i, col) * s;
            for (std::size_t j = col; j < n; ++j)
                if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

bool BiquadMatrix::is_identity() const { return is_square() && *this == identity(field_, rows_); }

bool BiquadMatrix::is_rational() const {
    for (const auto& e : data_)
        if (!e.is_rational()) return false;
    return true;
}

bool BiquadMatrix::fixed_by(Involution w) const { return apply_involution(*this, w) == *this; }

std::vector<std::vector<Q>> BiquadMatrix::to_rational() const {
    if (!is_rational()) throw DomainError("matrix has irrational entries");
    std::vector<std::vector<Q>> out(rows_, std::vector<Q>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).coeff(0);
    return out;
}

BiquadMatrix BiquadMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("block out of range");
    BiquadMatrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void BiquadMatrix::set_block(std::size_t r0, std::size_t c0, const BiquadMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DomainError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

BiquadMatrix apply_involution(const BiquadMatrix& m, Involution w) {
    BiquadMatrix r(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = apply_involution(m(i, j), w);
    return r;
}

BiquadMatrix block_diag(const std::vector<BiquadMatrix>& blocks) {
    if (blocks.empty()) throw DomainError("block_diag of nothing");
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    BiquadMatrix r(blocks.front().field(), n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        r.set_block(off, off, b);
        off += b.rows();
    }
    return r;
}

BiquadMatrix star(const BiquadMatrix& y, const BiquadMatrix& g) {
    return apply_involution(g, Involution::Tau).transpose() * y * g;
}

bool is_eps_hermitian(const BiquadMatrix& j, Case c) {
    BiquadMatrix t = apply_involution(j, Involution::Tau).transpose();
    return t == j * BiquadElement(j.field(), epsilon(c));
}

namespace {

void check_shapes(const BiquadMatrix& g, const BiquadMatrix& j) {
    if (!g.is_square() || !j.is_square() || g.rows() != j.rows())
        throw DomainError("dimension mismatch between matrix and form");
}

}  // namespace

bool in_isometry_group(const BiquadMatrix& g, const BiquadMatrix& j, Case) {
    check_shapes(g, j);
    return star(j, g) == j;
}

bool in_symmetric_space(const BiquadMatrix& x, const BiquadMatrix& j, Case c) {
    check_shapes(x, j);
    if (!in_isometry_group(x, j, c)) return false;
    return (x * apply_involution(x, Involution::Sigma)).is_identity();
}

}  // namespace galdist
