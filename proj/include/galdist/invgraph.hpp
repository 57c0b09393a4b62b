#ifndef GALDIST_INVGRAPH_HPP
#define GALDIST_INVGRAPH_HPP

#include "galdist/weyl.hpp"

#include <vector>

namespace galdist {

using Root = std::vector<int>;
using Weight = std::vector<Q>;

// Linear involution of R^k given by (theta lambda)_i = signs_i * lambda_{rho(i)}.
struct ThetaAction {
    std::vector<int> rho;
    std::vector<int> signs;

    static ThetaAction from(const SignedPerm& w);
    int k() const { return static_cast<int>(rho.size()); }
    Root apply(const Root& v) const;
    Weight apply(const Weight& v) const;
    bool is_involution() const;
};

// Restricted roots e_i - e_j, e_i + e_j and a multiple of e_i, the multiple
// being 2 in the doubled convention and 1 otherwise.
struct RootSystem {
    int k = 0;
    int last_scale = 1;

    std::vector<Root> simple() const;
    std::vector<Root> positive() const;
    std::vector<Root> all() const;
    bool contains(const Root& alpha) const;
};

RootSystem root_system_for(const Composition& comp, const ClassicalPair& pair);

// First nonzero coordinate positive.
bool is_positive(const Root& alpha);

struct ThetaImage {
    Root image;
    bool positive = false;
};

ThetaImage theta_on_root(const ThetaAction& theta, const Root& alpha);

// -alpha != theta(alpha) < 0
bool is_descent_root(const ThetaAction& theta, const Root& alpha);

int negative_root_count(const ThetaAction& theta, const RootSystem& roots);

struct Vertex {
    Composition comp;
    SignedPerm w;
    bool operator==(const Vertex& o) const = default;
};

// Elementary symmetry for the simple root with the given index: adjacent
// parts are swapped for i < k - 1, the last part is folded for i = k - 1.
Vertex reflect_vertex(const Vertex& v, int simple_index);
Weight reflect_weight(const Root& alpha, const Weight& lambda);

struct DescentStep {
    int step = 0;
    int simple_index = 0;
    Root alpha;
    Vertex vertex;
};

struct DescentResult {
    std::vector<DescentStep> path;
    Vertex terminal;
    // Terminality is checked; the stronger minimality conditions are not.
    bool minimality_verified = false;
};

DescentResult descend(const Vertex& start, const RootSystem& roots);

Q pairing_with_coroot(const Weight& lambda, const Root& alpha);

bool cone_contains(const ThetaAction& theta, const RootSystem& roots, const Weight& lambda, const Q& c);

}  // namespace galdist

#endif
