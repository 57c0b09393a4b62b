#include <doctest.h>

#include "support.hpp"

using namespace galdist;

TEST_CASE("Galois action on the biquadratic model") {
    const BiquadField f = BiquadField::klein(-1, 3);
    const auto ra = BiquadElement::sqrt_a(f), rb = BiquadElement::sqrt_b(f), rab = BiquadElement::sqrt_ab(f);
    CHECK(apply_involution(ra, Involution::Sigma) == -ra);
    CHECK(apply_involution(ra, Involution::Tau) == ra);
    CHECK(apply_involution(rb, Involution::Tau) == -rb);
    CHECK(apply_involution(rab, Involution::SigmaTau) == rab);
    CHECK(ra * ra == BiquadElement(f, -1));
    CHECK(ra * rb == rab);
    CHECK(rab * rab == BiquadElement(f, -3));
}

TEST_CASE("field arithmetic and norms") {
    std::mt19937 rng(8);
    for (const auto& f : {BiquadField::klein(2, 5), BiquadField::klein(3, 6), BiquadField::quadratic(-1)}) {
        for (int i = 0; i < 50; ++i) {
            const auto x = galdist::testing::random_element(rng, f);
            const auto y = galdist::testing::random_element(rng, f);
            if (x.is_zero() || y.is_zero()) continue;
            CHECK(x * x.inverse() == BiquadElement(f, 1));
            CHECK((x * y) / y == x);
            CHECK(norm_to_Q(x * y) == norm_to_Q(x) * norm_to_Q(y));
            for (auto w : {Involution::Sigma, Involution::Tau, Involution::SigmaTau}) {
                if (f.degenerate() && w != Involution::Sigma) continue;
                CHECK(apply_involution(x * y, w) == apply_involution(x, w) * apply_involution(y, w));
                CHECK(apply_involution(apply_involution(x, w), w) == x);
            }
            if (!f.degenerate()) {
                CHECK(norm_to_E(x).fixed_by(Involution::Tau));
                CHECK(norm_to_Fprime(x).fixed_by(Involution::Sigma));
            }
        }
    }
    CHECK_THROWS(BiquadElement(BiquadField::klein(2, 5), 1) + BiquadElement(BiquadField::klein(3, 6), 1));
    CHECK_THROWS_AS(BiquadElement(BiquadField::quadratic(2)).inverse(), DomainError);
}

TEST_CASE("Hilbert 90 solutions") {
    std::mt19937 rng(90);
    const BiquadField f = BiquadField::klein(-1, 3);
    int solved = 0;
    for (int i = 0; i < 100; ++i) {
        const auto c = galdist::testing::random_element(rng, f);
        if (c.is_zero()) continue;
        const auto x = c / apply_involution(c, Involution::Tau);
        const auto c2 = recover_hilbert90(x, Involution::Tau);
        CHECK(c2 / apply_involution(c2, Involution::Tau) == x);
        ++solved;
    }
    CHECK(solved > 90);
    const auto minus = recover_hilbert90(BiquadElement(f, -1), Involution::Tau);
    CHECK(minus / apply_involution(minus, Involution::Tau) == BiquadElement(f, -1));
}

TEST_CASE("isometry group membership") {
    for (Case kind : {Case::Orthogonal, Case::Unitary}) {
        const BiquadField f = BiquadField::klein(2, 5);
        const BiquadMatrix j = BiquadMatrix::from_rational(f, {{0, 1}, {1, 0}});
        CHECK(in_isometry_group(BiquadMatrix::identity(f, 2), j, kind));
        BiquadMatrix t = BiquadMatrix::identity(f, 2);
        t(0, 0) = BiquadElement::sqrt_a(f);
        t(1, 1) = apply_involution(BiquadElement::sqrt_a(f), Involution::Tau).inverse();
        CHECK(in_isometry_group(t, j, kind));
        BiquadMatrix bad = BiquadMatrix::identity(f, 2);
        bad(0, 0) = BiquadElement(f, 2);
        CHECK_FALSE(in_isometry_group(bad, j, kind));
    }
    const BiquadField q = BiquadField::quadratic(-1);
    const BiquadMatrix symp = BiquadMatrix::from_rational(q, {{0, 1}, {-1, 0}});
    CHECK(is_eps_hermitian(symp, Case::Symplectic));
    CHECK_FALSE(is_eps_hermitian(symp, Case::Orthogonal));
    CHECK(in_isometry_group(BiquadMatrix::from_rational(q, {{1, 3}, {0, 1}}), symp, Case::Symplectic));
}

TEST_CASE("symmetric space membership") {
    const BiquadField f = BiquadField::quadratic(-1);
    const BiquadMatrix j = BiquadMatrix::from_rational(f, {{0, 1}, {1, 0}});
    CHECK(in_symmetric_space(BiquadMatrix::identity(f, 2), j, Case::Orthogonal));
    CHECK_FALSE(in_symmetric_space(BiquadMatrix::identity(f, 2) * BiquadElement(f, 2), j, Case::Orthogonal));
    BiquadMatrix x = BiquadMatrix::identity(f, 2);
    x(0, 0) = BiquadElement::sqrt_a(f);
    x(1, 1) = -BiquadElement::sqrt_a(f);
    CHECK(x * apply_involution(x, Involution::Sigma) == BiquadMatrix::identity(f, 2));
}

TEST_CASE("matrix algebra") {
    std::mt19937 rng(4);
    const BiquadField f = BiquadField::klein(3, 6);
    for (int i = 0; i < 10; ++i) {
        const auto a = galdist::testing::random_biquad_invertible(rng, f, 3);
        const auto b = galdist::testing::random_biquad_invertible(rng, f, 3);
        CHECK((a * a.inverse()).is_identity());
        CHECK((a * b).det() == a.det() * b.det());
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
    }
    const BiquadMatrix d = block_diag({BiquadMatrix::identity(f, 1), BiquadMatrix::identity(f, 2) * BiquadElement(f, 5)});
    CHECK(d.det() == BiquadElement(f, 25));
    CHECK(d.block(1, 1, 2, 2) == BiquadMatrix::identity(f, 2) * BiquadElement(f, 5));
    CHECK_THROWS_AS(BiquadMatrix(f, 2, 2).inverse(), DomainError);
}
