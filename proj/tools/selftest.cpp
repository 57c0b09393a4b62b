#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace galdist::tools {

namespace {

struct Tally {
    int passed = 0;
    int failed = 0;
    void check(bool ok) { ok ? ++passed : ++failed; }
};

Q random_rational(std::mt19937& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    int n = 0;
    while (n == 0) n = num(rng);
    Q q(n, den(rng));
    q.canonicalize();
    return q;
}

Tally hilbert_suite(int depth) {
    Tally t;
    std::vector<std::int64_t> values{1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 10, -10};
    if (depth < 2) values.resize(6);
    for (std::int64_t p : {2, 3, 5, 7})
        for (auto a : values)
            for (auto b : values)
                t.check(hilbert(Q(static_cast<long>(a)), Q(static_cast<long>(b)), Prime(p)) ==
                        hilbert_oracle(a, b, Prime(p)));
    return t;
}

Tally reciprocity_suite(int depth) {
    Tally t;
    std::mt19937 rng(1);
    for (int i = 0; i < 100 * depth; ++i)
        t.check(reciprocity_check(random_rational(rng, 100), random_rational(rng, 100)).ok);
    return t;
}

Tally hasse_suite(int depth) {
    Tally t;
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int i = 0; i < 10 * depth; ++i) {
        RatMatrix g(3, std::vector<Q>(3));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = r; c < 3; ++c) g[r][c] = g[c][r] = random_rational(rng, 9);
        if (determinant(g) == 0) continue;
        RatMatrix u = identity_matrix(3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = r + 1; c < 3; ++c) u[r][c] = small(rng);
        for (std::int64_t p : {3, 5}) {
            const Prime pr(p);
            t.check(hasse_invariant(g, pr) == hasse_invariant(congruence(g, u), pr));
        }
    }
    return t;
}

Tally orbit_suite(int depth) {
    Tally t;
    const int max_n = std::min(depth, 2);
    const BiquadField quad = BiquadField::quadratic(-1);
    for (int n = 0; n <= max_n; ++n) {
        auto sp = ClassicalPair::make(Case::Symplectic, quad, Prime(3), {}, n);
        t.check(static_cast<int>(realize_orbits(sp).size()) == orbit_count_X(sp));
        for (std::vector<Q> kernel : {std::vector<Q>{}, std::vector<Q>{1}, std::vector<Q>{1, 1}}) {
            auto orth = ClassicalPair::make(Case::Orthogonal, quad, Prime(3), kernel, n);
            for (Component c : {Component::SX, Component::Complement})
                t.check(static_cast<int>(realize_orbits(orth, c).size()) == orbit_count_X(orth, c));
        }
        auto uni = ClassicalPair::make(Case::Unitary, BiquadField::klein(-1, 3), Prime(3), {}, n);
        t.check(static_cast<int>(realize_orbits(uni).size()) == orbit_count_X(uni));
    }
    return t;
}

Tally involution_suite(int depth) {
    Tally t;
    const int max_k = std::min(3 + depth, 5);
    for (int k = 1; k <= max_k; ++k) {
        Composition comp;
        comp.parts.assign(static_cast<std::size_t>(k), 1);
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t brute = 0;
        do {
            bool involutive = true;
            for (int i = 0; i < k; ++i) involutive = involutive && perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] == i;
            if (!involutive) continue;
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                bool stable = true;
                for (int i = 0; i < k; ++i)
                    stable = stable && (((mask >> i) & 1u) == ((mask >> perm[static_cast<std::size_t>(i)]) & 1u));
                if (stable) ++brute;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        t.check(enumerate_involutions(comp, false).size() == brute);
    }
    return t;
}

Tally graph_suite(int depth) {
    Tally t;
    std::mt19937 rng(3);
    for (int k = 1; k <= std::min(2 + depth, 4); ++k) {
        Composition comp;
        comp.parts.assign(static_cast<std::size_t>(k), 1);
        const RootSystem roots{k, 1};
        for (const auto& w : enumerate_involutions(comp, false)) {
            const Vertex v{comp, w};
            t.check(descend(v, roots).path.size() <= roots.positive().size());
            const ThetaAction theta = ThetaAction::from(w);
            const auto simple = roots.simple();
            for (int i = 0; i < k; ++i) {
                if (!is_descent_root(theta, simple[static_cast<std::size_t>(i)])) continue;
                const ThetaAction next = ThetaAction::from(reflect_vertex(v, i).w);
                for (int s = 0; s < 20; ++s) {
                    Weight mu(static_cast<std::size_t>(k));
                    for (auto& x : mu) x = random_rational(rng, 6);
                    const Weight image = theta.apply(mu);
                    for (std::size_t q = 0; q < mu.size(); ++q) mu[q] = (mu[q] - image[q]) / 2;
                    const Q c = random_rational(rng, 3);
                    const auto& alpha = simple[static_cast<std::size_t>(i)];
                    const bool lhs = cone_contains(theta, roots, mu, c);
                    const bool rhs = cone_contains(next, roots, reflect_weight(alpha, mu), c) &&
                                     pairing_with_coroot(mu, alpha) > c;
                    t.check(lhs == rhs);
                }
            }
        }
    }
    return t;
}

Tally spinor_suite(int depth) {
    Tally t;
    std::mt19937 rng(4);
    const int n = 2;
    RatMatrix j(4, std::vector<Q>(4, Q(0)));
    for (std::size_t i = 0; i < 4; ++i) j[i][3 - i] = 1;
    const RatMatrix w{{0, 1}, {1, 0}};
    for (int s = 0; s < 10 * depth; ++s) {
        RatMatrix h(2, std::vector<Q>(2));
        for (auto& row : h)
            for (auto& x : row) x = random_rational(rng, 7);
        if (determinant(h) == 0) continue;
        const RatMatrix dual = multiply(multiply(w, inverse(transpose(h))), w);
        RatMatrix g(4, std::vector<Q>(4, Q(0)));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                g[r][c] = h[r][c];
                g[r + n][c + n] = dual[r][c];
            }
        for (std::int64_t p : {3, 5}) t.check(spinor_norm(g, j, Prime(p)) == reduce(determinant(h), Prime(p)));
    }
    return t;
}

Tally prasad_suite(int) {
    Tally t;
    const Prime p(3);
    const QuadExtension e(reduce(Q(-1), p));
    t.check(prasad_character(make_descriptor(GroupFamily::GL, 3, p), e).reduced_exponent == 0);
    t.check(prasad_character(make_descriptor(GroupFamily::GL, 2, p), e).reduced_exponent == 1);
    t.check(prasad_character(make_descriptor(GroupFamily::Sp, 2, p), e).kind == "trivial");
    t.check(prasad_character(make_descriptor(GroupFamily::U, 2, p, -1), e).kind == "trivial");
    t.check(prasad_character(make_descriptor(GroupFamily::SO, 5, p), e).exponent == 1);
    t.check(prasad_character(make_descriptor(GroupFamily::U, 3, p, 3), e).kind == "eta_wsn");
    return t;
}

}  // namespace

io::Json run_selftest(int depth) {
    if (depth < 1) depth = 1;
    const std::vector<std::pair<std::string, std::function<Tally(int)>>> suites{
        {"hilbert_vs_oracle", hilbert_suite}, {"reciprocity", reciprocity_suite},
        {"hasse_congruence", hasse_suite},    {"orbit_counts", orbit_suite},
        {"involutions", involution_suite},    {"descent_and_cone", graph_suite},
        {"spinor_siegel", spinor_suite},      {"prasad_table", prasad_suite},
    };
    io::Json report{{"depth", depth}, {"suites", io::Json::array()}};
    int passed = 0, failed = 0;
    for (const auto& [name, run] : suites) {
        const Tally t = run(depth);
        report["suites"].push_back(io::Json{{"name", name}, {"passed", t.passed}, {"failed", t.failed}});
        passed += t.passed;
        failed += t.failed;
    }
    report["passed"] = passed;
    report["failed"] = failed;
    return report;
}

}  // namespace galdist::tools
