#include <doctest.h>

#include "support.hpp"

using namespace galdist;
using galdist::testing::bundled_models;

namespace {

XOrbitInvariant symplectic_target() {
    XOrbitInvariant t;
    t.kind = Case::Symplectic;
    return t;
}

CuspidalDatum labelled(int k) {
    CuspidalDatum d;
    for (int i = 0; i < k; ++i) d.labels.push_back("pi" + std::to_string(i + 1));
    return d;
}

}  // namespace

TEST_CASE("isomorphism oracle closure") {
    IsoOracle oracle(2);
    oracle.assert_iso({0, 0}, {1, OpSigma});
    CHECK(oracle.iso({0, 0}, {1, OpSigma}));
    CHECK(oracle.iso({0, OpTau}, {1, OpSigma | OpTau}));
    CHECK(oracle.iso({1, OpSigma | OpDual}, {0, OpDual}));
    CHECK_FALSE(oracle.iso({0, 0}, {1, 0}));
    CHECK(oracle.iso({1, OpDual}, {1, OpDual}));
}

TEST_CASE("decide examples") {
    const ClassicalPair sp1 = bundled_models()[0].pair(1);
    CuspidalDatum one = labelled(1);
    one.linear_dist = {0};
    const Verdict v1 = decide(sp1, Composition{{1}, 0, 1}, one, symplectic_target());
    REQUIRE(v1.distinguished);
    CHECK(v1.witness->w == SignedPerm::identity(1));

    const ClassicalPair sp2 = bundled_models()[0].pair(2);
    CuspidalDatum two = labelled(2);
    two.conj_dual = {{0, 1}};
    const Verdict v2 = decide(sp2, Composition{{1, 1}, 0, 1}, two, symplectic_target());
    REQUIRE(v2.distinguished);
    CHECK(v2.witness->w == SignedPerm{{1, 0}, {false, false}});

    const Verdict v3 = decide(sp2, Composition{{1, 1}, 0, 1}, labelled(2), symplectic_target());
    CHECK_FALSE(v3.distinguished);
    CHECK_FALSE(v3.witness.has_value());
    CHECK_FALSE(v3.failure_log.empty());
}

TEST_CASE("necessary condition") {
    CuspidalDatum d = labelled(2);
    d.sigma_tau = {{0, 1}};
    CHECK(necessary_condition(d, SignedPerm{{1, 0}, {true, true}}));
    CHECK_FALSE(necessary_condition(labelled(2), SignedPerm::identity(2)));
    CHECK_FALSE(necessary_condition(d, SignedPerm{{1, 0}, {false, false}}));
}

TEST_CASE("datum validation") {
    const Composition comp{{1, 2}, 0, 1};
    CuspidalDatum bad_index = labelled(2);
    bad_index.linear_dist = {4};
    CHECK_THROWS_AS(validate_datum(bad_index, comp), InputError);
    CuspidalDatum bad_size = labelled(2);
    bad_size.conj_dual = {{0, 1}};
    CHECK_THROWS_AS(validate_datum(bad_size, comp), DomainError);
    CHECK_NOTHROW(validate_datum(labelled(2), comp));
}

TEST_CASE("decide is equivariant under relabelling blocks") {
    std::mt19937 rng(17);
    for (const auto& model : bundled_models()) {
        const ClassicalPair pair = model.pair(2);
        const Composition comp{{1, 1}, 0, 1};
        if (pair.split_even()) continue;
        for (int trial = 0; trial < 4; ++trial) {
            CuspidalDatum d = labelled(2), swapped = labelled(2);
            for (int i = 0; i < 2; ++i) {
                if (rng() % 2) {
                    d.linear_dist.insert(i);
                    swapped.linear_dist.insert(1 - i);
                }
                if (rng() % 2) {
                    d.unitary_dist[i] = {0, 1};
                    swapped.unitary_dist[1 - i] = {0, 1};
                }
            }
            if (rng() % 2) {
                d.sigma_tau = {{0, 1}};
                swapped.sigma_tau = {{1, 0}};
            }
            for (const auto& target : realize_orbits(pair)) {
                if (pair.kind() == Case::Orthogonal && !target.invariant.special) continue;
                CAPTURE(model.name);
                CHECK(decide(pair, comp, d, target.invariant).distinguished ==
                      decide(pair, comp, swapped, target.invariant).distinguished);
            }
        }
    }
}

TEST_CASE("arithmetic orbit agrees with the exact representative") {
    for (const auto& model : bundled_models()) {
        const ClassicalPair base = model.pair(0);
        const ParityMap parity = base.kind() == Case::Unitary ? gamma_parity_map(base) : ParityMap::Iso;
        for (const auto& comp : galdist::testing::small_compositions(base.split_even(), 1)) {
            const ClassicalPair pair = base.with_n(comp.total());
            for (const auto& w : involutions_for(comp, pair))
                for (const auto& z : realize_orbits(pair.with_n(comp.r), z_component(comp, w, pair))) {
                    std::map<int, int> bits;
                    for (int i : fixed_signed(w)) bits[i] = (i + comp.r) % 2;
                    const auto res = build_xw(comp, w, bits, z, pair);
                    CAPTURE(model.name);
                    CHECK(arithmetic_orbit(comp, w, bits, z.invariant, pair, parity) == res.predicted);
                }
        }
    }
}

TEST_CASE("GL product distinction") {
    const unsigned star = OpDual | OpTau;
    GLProductDatum closed;
    closed.labels = {"pi"};
    closed.blocks = {{{0, 0}, 2}, {{0, star}, 2}};
    closed.distinguished = {{{0, 0}, GLCharacter::Trivial}, {{0, star}, GLCharacter::Trivial}};
    const auto c = gl_product_check(closed, GLCharacter::Trivial);
    REQUIRE(c.distinguished);
    REQUIRE(c.decomposition.size() == 2);
    CHECK(c.decomposition[0].kind == "closed");
    CHECK_FALSE(gl_product_check(closed, GLCharacter::Eta).distinguished);

    GLProductDatum open;
    open.labels = {"pi"};
    open.blocks = {{{0, 0}, 1}, {{0, OpSigma | OpDual}, 1}};
    open.isomorphisms = {{{0, OpSigma}, {0, OpTau}}};
    const auto o = gl_product_check(open, GLCharacter::Trivial);
    REQUIRE(o.distinguished);
    REQUIRE(o.decomposition.size() == 1);
    CHECK(o.decomposition[0].kind == "open");
    CHECK(o.decomposition[0].blocks == std::vector<int>{0, 1});

    GLProductDatum none;
    none.labels = {"pi"};
    none.blocks = {{{0, 0}, 1}, {{0, star}, 1}};
    CHECK_FALSE(gl_product_check(none, GLCharacter::Trivial).distinguished);

    GLProductDatum malformed;
    malformed.labels = {"pi", "rho"};
    malformed.blocks = {{{0, 0}, 1}, {{1, 0}, 1}};
    CHECK_THROWS_AS(gl_product_check(malformed, GLCharacter::Trivial), InputError);
}
