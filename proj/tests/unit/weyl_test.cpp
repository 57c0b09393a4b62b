#include <doctest.h>

#include "support.hpp"

using namespace galdist;
using galdist::testing::bundled_models;

namespace {

SignedPerm make_w(std::vector<int> rho, std::vector<bool> c) { return SignedPerm{std::move(rho), std::move(c)}; }

int pow2(int e) { return 1 << e; }

}  // namespace

TEST_CASE("signed permutation group") {
    const auto all = all_signed_perms(3);
    CHECK(all.size() == 48);
    for (const auto& a : all) {
        CHECK(a * a.inverse() == SignedPerm::identity(3));
        for (const auto& b : {all[5], all[17], all[40]}) CHECK((a * b).inverse() == b.inverse() * a.inverse());
    }
    CHECK_THROWS_AS(SignedPerm::identity(2) * SignedPerm::identity(3), DomainError);
}

TEST_CASE("involution enumeration examples") {
    CHECK(enumerate_involutions(Composition{{3}, 0, 1}, false).size() == 2);
    CHECK(enumerate_involutions(Composition{{2, 2}, 0, 1}, false).size() == 6);
    CHECK(enumerate_involutions(Composition{{1, 2}, 0, 1}, false).size() == 4);
    const auto filtered = enumerate_involutions(Composition{{1, 1}, 0, 1}, true);
    for (const auto& w : filtered) CHECK(odd_count(w, Composition{{1, 1}, 0, 1}) % 2 == 0);
    CHECK(filtered.size() == 4);
}

TEST_CASE("fixed signed indices and odd counts") {
    const Composition comp{{1, 2, 1}, 1, 1};
    const SignedPerm w = make_w({2, 1, 0}, {true, true, true});
    CHECK(fixed_signed(w) == std::vector<int>{1});
    CHECK(odd_count(w, comp) == 2);
    CHECK(fixed_signed_size(w, comp) == 2);
    CHECK(compatible(w, comp));
    CHECK_FALSE(compatible(make_w({1, 0, 2}, {false, false, false}), comp));
}

TEST_CASE("Weyl representatives") {
    const ClassicalPair sp = bundled_models()[0].pair(1);
    const Composition one{{1}, 0, 1};
    CHECK(build_tw(one, SignedPerm::identity(1), sp).is_identity());
    const BiquadMatrix t = build_tw(one, make_w({0}, {true}), sp);
    const BiquadField f = sp.model();
    CHECK(t == BiquadMatrix::from_rational(f, {{0, 1}, {-1, 0}}));
    CHECK(t * t == BiquadMatrix::identity(f, 2) * BiquadElement(f, -1));

    const ClassicalPair sp2 = bundled_models()[0].pair(2);
    const Composition two{{2}, 0, 1};
    const BiquadMatrix t2 = build_tw(two, make_w({0}, {true}), sp2);
    CHECK(t2 * t2 == BiquadMatrix::identity(f, 4) * BiquadElement(f, -1));
    CHECK_THROWS_AS(build_tw(Composition{{1, 2}, 0, 1}, make_w({1, 0}, {false, false}), sp.with_n(3)), DomainError);
}

TEST_CASE("conjugation by a Weyl representative permutes Levi blocks") {
    std::mt19937 rng(2);
    const ClassicalPair pair = bundled_models()[11].pair(3);
    const Composition comp{{1, 1}, 1, 1};
    const BiquadField f = pair.model();
    const SignedPerm w = make_w({1, 0}, {true, true});
    const BiquadMatrix t = build_tw(comp, w, pair);
    const auto g1 = galdist::testing::random_biquad_invertible(rng, f, 1);
    const auto g2 = galdist::testing::random_biquad_invertible(rng, f, 1);
    const BiquadMatrix h = embed_levi({galdist::testing::random_biquad_invertible(rng, f, 1)}, BiquadMatrix(f, 0, 0));
    const BiquadMatrix m = embed_levi({g1, g2}, h);
    CHECK(t * m * t.inverse() == embed_levi({dual_block(g2), dual_block(g1)}, h));
}

TEST_CASE("base point representative") {
    for (const auto& model : bundled_models()) {
        const ClassicalPair pair = model.pair(2);
        const Composition comp{{1}, 1, 1};
        if (pair.split_even()) continue;
        const auto zreps = realize_orbits(pair.with_n(1));
        const XRepresentative* base = nullptr;
        for (const auto& z : zreps)
            if (z.x.is_identity()) base = &z;
        REQUIRE(base != nullptr);
        const auto res = build_xw(comp, SignedPerm::identity(1), {}, *base, pair);
        CHECK(res.x.is_identity());
    }
}

TEST_CASE("unitary orbit bit of x_w") {
    for (const auto& model : bundled_models()) {
        if (model.kind != Case::Unitary) continue;
        const ClassicalPair pair = model.pair(3);
        const ParityMap parity = gamma_parity_map(pair);
        const GammaIndexData gamma = gamma_index_data(pair);
        for (const auto& comp : {Composition{{1, 1}, 1, 1}, Composition{{2}, 1, 1}, Composition{{1, 2}, 0, 1}}) {
            if (comp.total() != 3) continue;
            for (const auto& w : involutions_for(comp, pair))
                for (const auto& z : realize_orbits(pair.with_n(comp.r), z_component(comp, w, pair)))
                    for (int bit : {0, 1}) {
                        std::map<int, int> bits;
                        for (int i : fixed_signed(w)) bits[i] = bit;
                        const auto res = build_xw(comp, w, bits, z, pair);
                        int expected = (odd_count(w, comp) % 2) * gamma.minus_one_bit;
                        for (const auto& [i, b] : bits) expected ^= parity == ParityMap::Iso ? b : 0;
                        if (pair.n0() + 2 * comp.r > 0) expected ^= z.invariant.gamma_bit;
                        CAPTURE(model.name);
                        CHECK(res.predicted.gamma_bit == expected);
                        CHECK(classify_x(res.x, hilbert90_matrix(res.x), pair).gamma_bit == expected);
                    }
        }
    }
}

TEST_CASE("orthogonal x_w lands in the predicted orbit") {
    const auto model = bundled_models()[4];
    const ClassicalPair pair = model.pair(2);
    const Composition comp{{1}, 1, 1};
    for (const auto& w : involutions_for(comp, pair))
        for (const auto& z : realize_orbits(pair.with_n(1), z_component(comp, w, pair))) {
            std::map<int, int> bits;
            for (int i : fixed_signed(w)) bits[i] = 0;
            const auto res = build_xw(comp, w, bits, z, pair);
            const auto got = classify_x(res.x, hilbert90_matrix(res.x), pair);
            CHECK(got == res.predicted);
            CHECK(got.special);
        }
}

TEST_CASE("admissible orbit counts") {
    for (int n = 1; n <= 3; ++n) {
        const ClassicalPair sp = bundled_models()[0].pair(n);
        const Composition comp{{n}, 0, 1};
        for (const auto& w : involutions_for(comp, sp))
            CHECK(admissible_orbit_count(comp, w, sp) == pow2(static_cast<int>(fixed_signed(w).size())));
    }
    const ClassicalPair u = bundled_models()[11].pair(2);
    for (const auto& w : involutions_for(Composition{{1, 1}, 0, 1}, u))
        CHECK(admissible_orbit_count(Composition{{1, 1}, 0, 1}, w, u) == pow2(static_cast<int>(fixed_signed(w).size())));
    // The z part lives on the kernel <1, 1>, where -det is not a square at 3.
    const ClassicalPair o = bundled_models()[5].pair(1);
    REQUIRE_FALSE(reduce(-determinant(o.with_n(0).gram_rational()), o.prime()).is_trivial());
    const Composition one{{1}, 0, 1};
    const SignedPerm id = SignedPerm::identity(1);
    CHECK(odd_count(id, one) == 0);
    CHECK(admissible_orbit_count(one, id, o) == 2);
}

TEST_CASE("stabilizer shapes") {
    const Composition comp{{2, 1}, 1, 1};
    const auto id_shape = stabilizer_shape(comp, SignedPerm::identity(2), {}, std::nullopt);
    REQUIRE(id_shape.size() == 3);
    CHECK(id_shape[0].kind == "GL_F'");
    CHECK(id_shape[1].kind == "GL_F'");
    CHECK(id_shape[2].kind == "fixed");
    CHECK(id_shape[2].size == 1);

    const Composition pair_comp{{2, 2}, 0, 1};
    const auto swapped = stabilizer_shape(pair_comp, make_w({1, 0}, {false, false}), {}, std::nullopt);
    REQUIRE(swapped.size() == 2);
    CHECK(swapped[0].kind == "GL_E'");
    CHECK(swapped[0].indices == std::vector<int>{0, 1});

    const auto unitary = stabilizer_shape(Composition{{3}, 0, 1}, make_w({0}, {true}), {{0, 1}}, std::nullopt);
    REQUIRE(unitary.size() == 2);
    CHECK(unitary[0].kind == "U");
    CHECK(unitary[0].orbit_bit == 1);
}

TEST_CASE("compositions are validated against the pair") {
    const ClassicalPair pair = bundled_models()[2].pair(3);
    CHECK_NOTHROW(validate_composition(Composition{{1, 2}, 0, 1}, pair));
    CHECK_THROWS(validate_composition(Composition{{1, 1}, 0, 1}, pair));
    CHECK_THROWS(validate_composition(Composition{{2}, 1, 1}, pair));
    CHECK_THROWS(validate_composition(Composition{{0, 3}, 0, 1}, pair));
}
