#include <doctest.h>

#include "support.hpp"

using namespace galdist;

TEST_CASE("root systems") {
    for (int k = 1; k <= 4; ++k)
        for (int scale : {1, 2}) {
            const RootSystem roots{k, scale};
            CHECK(roots.positive().size() == static_cast<std::size_t>(k * k));
            CHECK(roots.all().size() == static_cast<std::size_t>(2 * k * k));
            CHECK(roots.simple().size() == static_cast<std::size_t>(k));
            for (const auto& a : roots.positive()) CHECK(is_positive(a));
        }
    const ClassicalPair split = galdist::testing::bundled_models()[2].pair(2);
    CHECK(root_system_for(Composition{{1, 1}, 0, 1}, split).last_scale == 2);
    const ClassicalPair sp = galdist::testing::bundled_models()[0].pair(2);
    CHECK(root_system_for(Composition{{1, 1}, 0, 1}, sp).last_scale == 1);
}

TEST_CASE("edges of the graph of involutions") {
    const RootSystem roots{2, 1};
    const ThetaAction identity = ThetaAction::from(SignedPerm::identity(2));
    for (const auto& a : roots.simple()) CHECK_FALSE(is_descent_root(identity, a));

    const ThetaAction flip_first = ThetaAction::from(SignedPerm{{0, 1}, {true, false}});
    const Root alpha{1, -1};
    const auto image = theta_on_root(flip_first, alpha);
    CHECK(image.image == Root{-1, -1});
    CHECK_FALSE(image.positive);
    CHECK(is_descent_root(flip_first, alpha));

    const ThetaAction swap = ThetaAction::from(SignedPerm{{1, 0}, {false, false}});
    CHECK(theta_on_root(swap, alpha).image == Root{-1, 1});
    CHECK_FALSE(is_descent_root(swap, alpha));
    CHECK_THROWS_AS(theta_on_root(swap, Root{0, 0}), DomainError);
}

TEST_CASE("reflecting twice returns to the start") {
    for (int k = 1; k <= 3; ++k) {
        const Composition comp{std::vector<int>(static_cast<std::size_t>(k), 1), 0, 1};
        for (const auto& w : enumerate_involutions(comp, false)) {
            const Vertex v{comp, w};
            for (int i = 0; i < k; ++i) {
                const Vertex back = reflect_vertex(reflect_vertex(v, i), i);
                CHECK(back == v);
                CHECK(ThetaAction::from(reflect_vertex(v, i).w).is_involution());
            }
        }
    }
}

TEST_CASE("descent") {
    const Composition comp{{1, 1}, 0, 1};
    const RootSystem roots{2, 1};
    const auto terminal = descend(Vertex{comp, SignedPerm::identity(2)}, roots);
    CHECK(terminal.path.empty());
    CHECK(terminal.terminal.w == SignedPerm::identity(2));
    CHECK_FALSE(terminal.minimality_verified);

    const auto moved = descend(Vertex{comp, SignedPerm{{0, 1}, {true, false}}}, roots);
    CHECK_FALSE(moved.path.empty());
    for (const auto& a : roots.simple()) CHECK_FALSE(is_descent_root(ThetaAction::from(moved.terminal.w), a));
}

TEST_CASE("cone membership") {
    const RootSystem roots{1, 1};
    const ThetaAction theta = ThetaAction::from(SignedPerm{{0}, {true}});
    CHECK_FALSE(cone_contains(theta, roots, Weight{Q(0)}, Q(1)));
    CHECK(cone_contains(theta, roots, Weight{Q(3)}, Q(1)));
    CHECK(pairing_with_coroot(Weight{Q(3), Q(1)}, Root{1, -1}) == 2);
    CHECK(pairing_with_coroot(Weight{Q(3), Q(1)}, Root{0, 2}) == 1);
    const Weight reflected = reflect_weight(Root{1, -1}, Weight{Q(3), Q(1)});
    CHECK(reflected == Weight{Q(1), Q(3)});
}
