#ifndef GALDIST_TESTS_SUPPORT_HPP
#define GALDIST_TESTS_SUPPORT_HPP

#include "galdist/distinction.hpp"
#include "galdist/forms.hpp"
#include "galdist/invgraph.hpp"
#include "galdist/prasad.hpp"

#include <random>
#include <string>
#include <vector>

namespace galdist::testing {

inline Q random_rational(std::mt19937& rng, int bound, bool nonzero = true) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    Q q(n, den(rng));
    q.canonicalize();
    return q;
}

inline RatMatrix random_invertible(std::mt19937& rng, std::size_t n, int bound = 5) {
    for (;;) {
        RatMatrix m(n, std::vector<Q>(n));
        for (auto& row : m)
            for (auto& x : row) x = random_rational(rng, bound, false);
        if (determinant(m) != 0) return m;
    }
}

inline RatMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> small(-3, 3);
    RatMatrix upper = identity_matrix(n), lower = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            upper[i][j] = small(rng);
            lower[j][i] = small(rng);
        }
    return multiply(lower, upper);
}

inline BiquadElement random_element(std::mt19937& rng, const BiquadField& f, int bound = 4) {
    const int used = f.degenerate() ? 2 : 4;
    std::array<Q, 4> c{};
    for (int i = 0; i < used; ++i) c[static_cast<std::size_t>(i)] = random_rational(rng, bound, false);
    return BiquadElement(f, c[0], c[1], c[2], c[3]);
}

inline BiquadMatrix random_biquad_invertible(std::mt19937& rng, const BiquadField& f, std::size_t n) {
    for (;;) {
        BiquadMatrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(rng, f);
        if (!m.det().is_zero()) return m;
    }
}

// The field models shipped with the library, with the kernels exercised.
struct BundledModel {
    std::string name;
    Case kind;
    std::int64_t p;
    std::int64_t a;
    std::int64_t b;
    std::vector<Q> kernel;

    ClassicalPair pair(int n) const {
        const BiquadField f = b == 0 ? BiquadField::quadratic(a) : BiquadField::klein(a, b);
        return ClassicalPair::make(kind, f, Prime(p), kernel, n);
    }
};

inline std::vector<BundledModel> bundled_models() {
    return {
        {"sp p3", Case::Symplectic, 3, -1, 0, {}},
        {"sp p5", Case::Symplectic, 5, 2, 0, {}},
        {"o p3 split", Case::Orthogonal, 3, -1, 0, {}},
        {"o p3 k1", Case::Orthogonal, 3, -1, 0, {Q(1)}},
        {"o p3 k3", Case::Orthogonal, 3, -1, 0, {Q(3)}},
        {"o p3 k11", Case::Orthogonal, 3, -1, 0, {Q(1), Q(1)}},
        {"o p3 k13", Case::Orthogonal, 3, -1, 0, {Q(1), Q(3)}},
        {"o p5 split", Case::Orthogonal, 5, 2, 0, {}},
        {"o p5 k1", Case::Orthogonal, 5, 2, 0, {Q(1)}},
        {"o p5 k12", Case::Orthogonal, 5, 2, 0, {Q(1), Q(2)}},
        {"o p5 k15", Case::Orthogonal, 5, 2, 0, {Q(1), Q(5)}},
        {"u p3 a-1 b3", Case::Unitary, 3, -1, 3, {}},
        {"u p3 a-1 b3 k1", Case::Unitary, 3, -1, 3, {Q(1)}},
        {"u p5 a2 b5", Case::Unitary, 5, 2, 5, {}},
        {"u p5 a2 b5 k1", Case::Unitary, 5, 2, 5, {Q(1)}},
        {"u p3 a3 b6", Case::Unitary, 3, 3, 6, {}},
        {"u p3 a3 b6 k1", Case::Unitary, 3, 3, 6, {Q(1)}},
    };
}

// Compositions with at most two parts, each of size at most two.
inline std::vector<Composition> small_compositions(bool split_even, int max_r) {
    const std::vector<std::vector<int>> shapes{{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    std::vector<Composition> out;
    for (int r = 0; r <= max_r; ++r)
        for (const auto& parts : shapes) {
            if (split_even && r == 1) continue;
            Composition c{parts, r, 1};
            out.push_back(c);
            if (split_even && r == 0 && parts.back() != 1) {
                c.split_even_sign = -1;
                out.push_back(c);
            }
        }
    return out;
}

// Solvability of z^2 = a x^2 + b y^2 with (x, y, z) primitive, decided by
// exhaustive search modulo p^e for e large enough that Hensel lifting
// applies.  Independent of the library's symbol formulas and oracle.
inline int hilbert_by_search(std::int64_t a, std::int64_t b, std::int64_t p) {
    auto val = [p](std::int64_t x) {
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    const int e = val(a) + val(b) + (p == 2 ? 4 : 2);
    std::int64_t m = 1;
    for (int i = 0; i < e; ++i) m *= p;
    auto md = [m](std::int64_t x) { return ((x % m) + m) % m; };
    // unit_root[c] / any_root[c]: c is a square of a unit / of any residue.
    std::vector<char> unit_root(static_cast<std::size_t>(m), 0), any_root(static_cast<std::size_t>(m), 0);
    for (std::int64_t z = 0; z < m; ++z) {
        any_root[static_cast<std::size_t>(md(z * z))] = 1;
        if (z % p != 0) unit_root[static_cast<std::size_t>(md(z * z))] = 1;
    }
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y) {
            const auto c = static_cast<std::size_t>(md(a * x * x + b * y * y));
            const bool primitive_xy = x % p != 0 || y % p != 0;
            if (primitive_xy ? any_root[c] : unit_root[c]) return 1;
        }
    return -1;
}

}  // namespace galdist::testing

#endif
