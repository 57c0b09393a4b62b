#include <doctest.h>

#include "support.hpp"

#include "galdist/json_io.hpp"

using namespace galdist;

TEST_CASE("rationals round trip") {
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Q q = galdist::testing::random_rational(rng, 40, false);
        CHECK(io::rational(io::to_json(q)) == q);
        CHECK(io::rational(io::parse(io::to_json(q).dump())) == q);
    }
    CHECK(io::rational(io::parse("\"-6/4\"")) == Q(-3, 2));
    CHECK(io::rational(io::parse("7")) == Q(7));
    CHECK_THROWS_AS(io::rational(io::parse("\"1/0\"")), InputError);
    CHECK_THROWS_AS(io::rational(io::parse("\"one\"")), InputError);
    CHECK_THROWS_AS(io::rational(io::parse("[1]")), InputError);
    CHECK_THROWS_AS(io::parse("{\"a\": "), InputError);
}

TEST_CASE("square classes round trip") {
    for (std::int64_t p : {2, 3, 5}) {
        const Prime pr(p);
        for (const auto& c : all_classes(pr)) CHECK(io::square_class(io::to_json(c), pr) == c);
    }
}

TEST_CASE("structured values round trip") {
    const Composition comp{{2, 1, 2}, 1, 1};
    CHECK(io::composition(io::to_json(comp)) == comp);
    CHECK(io::composition(io::parse(R"({"parts":[1,2]})")) == Composition{{1, 2}, 0, 1});
    CHECK_THROWS_AS(io::composition(io::parse(R"({"parts":3})")), InputError);
    CHECK_THROWS_AS(io::composition(io::parse(R"({"r":1})")), InputError);

    SignedPerm w;
    w.rho = {2, 1, 0};
    w.c = {true, false, true};
    CHECK(io::signed_perm(io::to_json(w)) == w);
    CHECK(io::to_json(w).at("rho") == io::parse("[3,2,1]"));
    CHECK_THROWS_AS(io::signed_perm(io::parse(R"({"rho":[0,1],"c":[false,false]})")), InputError);

    for (const auto& model : galdist::testing::bundled_models()) {
        const ClassicalPair pair = model.pair(2);
        CHECK(io::classical_pair(io::to_json(pair)) == pair);
        for (const auto& rep : realize_orbits(pair))
            CHECK(io::orbit_invariant(io::to_json(rep.invariant), pair.prime()) == rep.invariant);
    }
    CHECK_THROWS_AS(io::classical_pair(io::parse(R"({"case":"exotic","p":3,"a":-1})")), InputError);
    CHECK_THROWS_AS(io::classical_pair(io::parse(R"({"case":"orthogonal","a":-1})")), InputError);
}

TEST_CASE("cuspidal data round trip") {
    CuspidalDatum d;
    d.labels = {"pi1", "pi2"};
    d.conj_dual = {{0, 1}};
    d.linear_dist = {1};
    d.unitary_dist[0] = {0, 1};
    const Prime p(3);
    const auto back = io::cuspidal_datum(io::to_json(d), p);
    CHECK(back.labels == d.labels);
    CHECK(back.conj_dual == d.conj_dual);
    CHECK(back.sigma_tau == d.sigma_tau);
    CHECK(back.linear_dist == d.linear_dist);
    CHECK(back.unitary_dist == d.unitary_dist);
    CHECK(back.pi0_dist == d.pi0_dist);
}

TEST_CASE("group descriptors round trip") {
    const Prime p(3);
    const std::vector<GroupDescriptor> groups{
        make_descriptor(GroupFamily::GL, 3, p), make_descriptor(GroupFamily::Sp, 2, p),
        make_descriptor(GroupFamily::U, 2, p, 3),
        make_descriptor(GroupFamily::SO, 4, p, std::nullopt, std::vector<Q>{Q(1), Q(1)})};
    for (const auto& y : groups) CHECK(io::group_descriptor(io::to_json(y), p) == y);
    CHECK_THROWS_AS(io::group_descriptor(io::parse(R"({"family":"GL"})"), p), InputError);
    const QuadExtension e = io::quad_extension(io::parse(R"({"p":3,"d":-1})"));
    CHECK(e.base == p);
    CHECK(io::formula_text(prasad_character(groups[0], e)).size() > 0);
}
