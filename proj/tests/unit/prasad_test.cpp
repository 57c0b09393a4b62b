#include <doctest.h>

#include "support.hpp"

using namespace galdist;

namespace {

const Prime kThree(3);

QuadExtension gaussian() { return QuadExtension(reduce(Q(-1), kThree)); }

RatMatrix random_so_element(std::mt19937& rng, const RatMatrix& gram) {
    RatMatrix g = identity_matrix(gram.size());
    int used = 0;
    while (used < 2) {
        std::vector<Q> v(gram.size());
        for (auto& x : v) x = galdist::testing::random_rational(rng, 5, false);
        Q q = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) q += v[i] * gram[i][j] * v[j];
        if (q == 0) continue;
        g = multiply(g, reflection_matrix(gram, v));
        ++used;
    }
    return g;
}

BiquadMatrix random_unitary(std::mt19937& rng, const BiquadField& k) {
    BiquadMatrix g = BiquadMatrix::identity(k, 3);
    BiquadElement c;
    do {
        c = galdist::testing::random_element(rng, k);
    } while (c.is_zero());
    g(0, 0) = c;
    g(2, 2) = apply_involution(c, Involution::Sigma).inverse();
    BiquadMatrix u = BiquadMatrix::identity(k, 3);
    u(0, 2) = BiquadElement(k, 0, galdist::testing::random_rational(rng, 4, false));
    return g * u;
}

}  // namespace

TEST_CASE("character table examples") {
    const auto gl3 = prasad_character(make_descriptor(GroupFamily::GL, 3, kThree), gaussian());
    CHECK(gl3.kind == "eta_det");
    CHECK(gl3.exponent == 2);
    CHECK(gl3.reduced_exponent == 0);
    CHECK(gl3.is_trivial());
    CHECK(prasad_character(make_descriptor(GroupFamily::GL, 2, kThree), gaussian()).reduced_exponent == 1);
    CHECK(prasad_character(make_descriptor(GroupFamily::Sp, 2, kThree), gaussian()).kind == "trivial");
    CHECK(prasad_character(make_descriptor(GroupFamily::U, 2, kThree, -1), gaussian()).kind == "trivial");
    const auto so5 = prasad_character(make_descriptor(GroupFamily::SO, 5, kThree), gaussian());
    CHECK(so5.kind == "eta_sn");
    CHECK(so5.reduced_exponent == 1);
    const auto u3 = prasad_character(make_descriptor(GroupFamily::U, 3, kThree, 3), gaussian());
    CHECK(u3.kind == "eta_wsn");
    CHECK(u3.extension == "EK/K");
    CHECK_THROWS_AS(prasad_character(make_descriptor(GroupFamily::GL, 2, Prime(5)), gaussian()), DomainError);
}

TEST_CASE("opposition groups") {
    const auto gl = make_descriptor(GroupFamily::GL, 4, kThree);
    const auto op = opposition_group(gl, gaussian());
    CHECK(op.family == GroupFamily::U);
    CHECK(op == make_descriptor(GroupFamily::U, 4, kThree, -1));
    CHECK(opposition_group(op, gaussian()) == gl);
    const auto sp = make_descriptor(GroupFamily::Sp, 3, kThree);
    CHECK(opposition_group(sp, gaussian()) == sp);
    const auto uk = make_descriptor(GroupFamily::U, 2, kThree, 3);
    CHECK(opposition_group(uk, gaussian()) == make_descriptor(GroupFamily::U, 2, kThree, -3));
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(make_descriptor(GroupFamily::U, 2, kThree, 4), DomainError);
    CHECK_THROWS_AS(make_descriptor(GroupFamily::SO, 4, kThree, std::nullopt, std::vector<Q>{Q(1), Q(-1)}), DomainError);
    CHECK_THROWS_AS(make_descriptor(GroupFamily::SO, 5, kThree, std::nullopt, std::vector<Q>{Q(1), Q(1)}), DomainError);
    CHECK_THROWS_AS(make_descriptor(GroupFamily::GL, 0, kThree), DomainError);
    CHECK(make_descriptor(GroupFamily::SO, 5, kThree).so_kernel.size() == 1);
    CHECK(parse_family("SO") == GroupFamily::SO);
    CHECK_THROWS(parse_family("E8"));
}

TEST_CASE("spinor norm examples") {
    const RatMatrix w2{{0, 1}, {1, 0}};
    CHECK(spinor_norm(identity_matrix(2), w2, kThree).is_trivial());
    for (long t : {2L, 3L, -5L, 7L}) {
        const RatMatrix g{{Q(t), 0}, {0, 1 / Q(t)}};
        CHECK(spinor_norm(g, w2, kThree) == reduce(Q(t), kThree));
    }
    const RatMatrix gram{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    const RatMatrix siegel{{2, 1, 0, 0}, {0, 3, 0, 0}, {0, 0, Q(1, 3), Q(-1, 6)}, {0, 0, 0, Q(1, 2)}};
    REQUIRE(congruence(gram, siegel) == gram);
    CHECK(spinor_norm(siegel, gram, kThree) == reduce(Q(6), kThree));
    const auto dec = cartan_dieudonne(siegel, gram);
    CHECK(dec.vectors.size() % 2 == 0);
    RatMatrix rebuilt = identity_matrix(4);
    for (const auto& v : dec.vectors) rebuilt = multiply(rebuilt, reflection_matrix(gram, v));
    CHECK(rebuilt == siegel);
    CHECK_THROWS_AS(cartan_dieudonne(RatMatrix{{2, 0}, {0, 2}}, w2), DomainError);
    CHECK_THROWS_AS(cartan_dieudonne(w2, w2), DomainError);
}

TEST_CASE("unitary spinor norm analogue") {
    const BiquadField k = BiquadField::quadratic(2);
    const BiquadMatrix id = BiquadMatrix::identity(k, 3);
    CHECK(wsn(id) == BiquadElement(k, 1));
    BiquadMatrix flip = id;
    flip(1, 1) = BiquadElement(k, -1);
    CHECK(wsn(flip) == BiquadElement::sqrt_a(k));
    std::mt19937 rng(44);
    for (int i = 0; i < 40; ++i) {
        const BiquadMatrix g = random_unitary(rng, k);
        const BiquadElement z = wsn(g);
        CHECK(z / apply_involution(z, Involution::Sigma) == g.det());
    }
    CHECK_THROWS_AS(wsn(id * BiquadElement(k, 2)), DomainError);
}

TEST_CASE("characters are quadratic and multiplicative") {
    std::mt19937 rng(45);
    const QuadExtension e = gaussian();
    const auto gl = make_descriptor(GroupFamily::GL, 2, kThree);
    const auto chi_gl = prasad_character(gl, e);
    const auto so = make_descriptor(GroupFamily::SO, 3, kThree, std::nullopt, std::vector<Q>{Q(3)});
    const auto chi_so = prasad_character(so, e);
    const RatMatrix so_form = so_gram(so);
    const auto u = make_descriptor(GroupFamily::U, 3, kThree, 3);
    const auto chi_u = prasad_character(u, e);
    const BiquadField k = BiquadField::quadratic(3);
    int nontrivial_gl = 0, nontrivial_so = 0;
    for (int i = 0; i < 100; ++i) {
        const RatMatrix a = galdist::testing::random_invertible(rng, 2), b = galdist::testing::random_invertible(rng, 2);
        const int ca = evaluate_character(chi_gl, gl, e, a);
        CHECK(ca * ca == 1);
        CHECK(evaluate_character(chi_gl, gl, e, multiply(a, b)) == ca * evaluate_character(chi_gl, gl, e, b));
        nontrivial_gl += ca == -1 ? 1 : 0;

        const RatMatrix s = random_so_element(rng, so_form), t = random_so_element(rng, so_form);
        const int cs = evaluate_character(chi_so, so, e, s);
        CHECK(cs * cs == 1);
        CHECK(evaluate_character(chi_so, so, e, multiply(s, t)) == cs * evaluate_character(chi_so, so, e, t));
        nontrivial_so += cs == -1 ? 1 : 0;

        const BiquadMatrix g = random_unitary(rng, k), h = random_unitary(rng, k);
        const int cu = evaluate_character(chi_u, u, e, g);
        CHECK(cu * cu == 1);
        CHECK(evaluate_character(chi_u, u, e, g * h) == cu * evaluate_character(chi_u, u, e, h));
    }
    CHECK(nontrivial_gl > 0);
    CHECK(nontrivial_so > 0);
    const auto gl3 = make_descriptor(GroupFamily::GL, 3, kThree);
    for (int i = 0; i < 20; ++i)
        CHECK(evaluate_character(prasad_character(gl3, e), gl3, e, galdist::testing::random_invertible(rng, 3)) == 1);
}
