#ifndef GALDIST_NUMFIELD_HPP
#define GALDIST_NUMFIELD_HPP

#include "galdist/case.hpp"
#include "galdist/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace galdist {

// Q(sqrt a, sqrt b) with sigma negating sqrt a and tau negating sqrt b.
// With b == 0 the model degenerates to Q(sqrt a) and tau is the identity.
struct BiquadField {
    std::int64_t a = -1;
    std::int64_t b = 0;

    static BiquadField klein(std::int64_t a, std::int64_t b);
    static BiquadField quadratic(std::int64_t a);

    bool degenerate() const { return b == 0; }
    bool operator==(const BiquadField& o) const { return a == o.a && b == o.b; }
};

enum class Involution { Sigma, Tau, SigmaTau };

class BiquadElement {
public:
    BiquadElement() = default;
    explicit BiquadElement(const BiquadField& f) : a_(f.a), b_(f.b) {}
    BiquadElement(const BiquadField& f, Q c0, Q c1 = 0, Q c2 = 0, Q c3 = 0);

    static BiquadElement sqrt_a(const BiquadField& f) { return {f, 0, 1}; }
    static BiquadElement sqrt_b(const BiquadField& f) { return {f, 0, 0, 1}; }
    static BiquadElement sqrt_ab(const BiquadField& f) { return {f, 0, 0, 0, 1}; }

    BiquadField field() const { return {a_, b_}; }
    const Q& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<Q, 4>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    // True when the element lies in the subfield fixed by the involution.
    bool fixed_by(Involution w) const;

    BiquadElement operator+(const BiquadElement& o) const;
    BiquadElement operator-(const BiquadElement& o) const;
    BiquadElement operator-() const;
    BiquadElement operator*(const BiquadElement& o) const;
    BiquadElement operator*(const Q& s) const;
    BiquadElement operator/(const BiquadElement& o) const;
    BiquadElement inverse() const;
    BiquadElement& operator+=(const BiquadElement& o) { return *this = *this + o; }
    BiquadElement& operator-=(const BiquadElement& o) { return *this = *this - o; }
    BiquadElement& operator*=(const BiquadElement& o) { return *this = *this * o; }
    bool operator==(const BiquadElement& o) const;
    bool operator!=(const BiquadElement& o) const { return !(*this == o); }

private:
    void check_same(const BiquadElement& o) const;

    std::int64_t a_ = -1;
    std::int64_t b_ = 0;
    std::array<Q, 4> c_{};
};

BiquadElement apply_involution(const BiquadElement& x, Involution w);

// Relative norms: to E = fixed field of tau, to F' = fixed field of sigma,
// to F'' = fixed field of sigma tau, and the absolute norm to Q.
BiquadElement norm_to_E(const BiquadElement& x);
BiquadElement norm_to_Fprime(const BiquadElement& x);
BiquadElement norm_to_Fsecond(const BiquadElement& x);
Q norm_to_Q(const BiquadElement& x);
// N_{E/F} of an element of E = Q(sqrt a).
Q norm_E_to_F(const BiquadElement& x);

// Given x with x * w(x) = 1 returns c with c / w(c) = x.
BiquadElement recover_hilbert90(const BiquadElement& x, Involution w = Involution::Tau);

class BiquadMatrix {
public:
    BiquadMatrix() = default;
    BiquadMatrix(const BiquadField& f, std::size_t rows, std::size_t cols);

    static BiquadMatrix identity(const BiquadField& f, std::size_t n);
    static BiquadMatrix from_rational(const BiquadField& f, const std::vector<std::vector<Q>>& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const BiquadField& field() const { return field_; }

    BiquadElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BiquadElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    BiquadMatrix operator*(const BiquadMatrix& o) const;
    BiquadMatrix operator+(const BiquadMatrix& o) const;
    BiquadMatrix operator-(const BiquadMatrix& o) const;
    BiquadMatrix operator*(const BiquadElement& s) const;
    bool operator==(const BiquadMatrix& o) const;
    bool operator!=(const BiquadMatrix& o) const { return !(*this == o); }

    BiquadMatrix transpose() const;
    BiquadMatrix inverse() const;  // throws DomainError when singular
    BiquadElement det() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_identity() const;
    bool is_rational() const;
    bool fixed_by(Involution w) const;
    std::vector<std::vector<Q>> to_rational() const;  // requires is_rational()

    BiquadMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const BiquadMatrix& b);

private:
    BiquadField field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BiquadElement> data_;
};

BiquadMatrix apply_involution(const BiquadMatrix& m, Involution w);
BiquadMatrix block_diag(const std::vector<BiquadMatrix>& blocks);

// Tests {}^t g^tau j g = j.
bool in_isometry_group(const BiquadMatrix& g, const BiquadMatrix& j, Case c);
// Tests isometry together with x * sigma(x) = I.
bool in_symmetric_space(const BiquadMatrix& x, const BiquadMatrix& j, Case c);
// Tests {}^t j^tau = epsilon j.
bool is_eps_hermitian(const BiquadMatrix& j, Case c);

// y * g = {}^t g^tau y g.
BiquadMatrix star(const BiquadMatrix& y, const BiquadMatrix& g);

}  // namespace galdist

#endif
