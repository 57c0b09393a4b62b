#include "galdist/invgraph.hpp"

#include <algorithm>

namespace galdist {

ThetaAction ThetaAction::from(const SignedPerm& w) {
    ThetaAction t;
    t.rho = w.rho;
    t.signs.resize(w.rho.size());
    for (std::size_t i = 0; i < w.rho.size(); ++i) t.signs[i] = w.c[i] ? -1 : 1;
    return t;
}

Root ThetaAction::apply(const Root& v) const {
    if (static_cast<int>(v.size()) != k()) throw DomainError("theta: dimension mismatch");
    Root out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = signs[i] * v[static_cast<std::size_t>(rho[i])];
    return out;
}

Weight ThetaAction::apply(const Weight& v) const {
    if (static_cast<int>(v.size()) != k()) throw DomainError("theta: dimension mismatch");
    Weight out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = signs[i] * v[static_cast<std::size_t>(rho[i])];
    return out;
}

bool ThetaAction::is_involution() const {
    for (int i = 0; i < k(); ++i) {
        Root e(static_cast<std::size_t>(k()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (apply(apply(e)) != e) return false;
    }
    return true;
}

std::vector<Root> RootSystem::simple() const {
    std::vector<Root> out;
    for (int i = 0; i + 1 < k; ++i) {
        Root a(static_cast<std::size_t>(k), 0);
        a[static_cast<std::size_t>(i)] = 1;
        a[static_cast<std::size_t>(i + 1)] = -1;
        out.push_back(a);
    }
    if (k > 0) {
        Root a(static_cast<std::size_t>(k), 0);
        a[static_cast<std::size_t>(k - 1)] = last_scale;
        out.push_back(a);
    }
    return out;
}

std::vector<Root> RootSystem::positive() const {
    std::vector<Root> out;
    const auto n = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Root a(n, 0), b(n, 0);
            a[i] = 1;
            a[j] = -1;
            b[i] = 1;
            b[j] = 1;
            out.push_back(a);
            out.push_back(b);
        }
        Root c(n, 0);
        c[i] = last_scale;
        out.push_back(c);
    }
    return out;
}

std::vector<Root> RootSystem::all() const {
    std::vector<Root> out = positive();
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) {
        Root neg = out[i];
        for (auto& x : neg) x = -x;
        out.push_back(neg);
    }
    return out;
}

bool RootSystem::contains(const Root& alpha) const {
    const auto roots = all();
    return std::find(roots.begin(), roots.end(), alpha) != roots.end();
}

RootSystem root_system_for(const Composition& comp, const ClassicalPair& pair) {
    return RootSystem{comp.k(), pair.split_even() && comp.r == 0 ? 2 : 1};
}

bool is_positive(const Root& alpha) {
    for (int x : alpha)
        if (x != 0) return x > 0;
    return false;
}

ThetaImage theta_on_root(const ThetaAction& theta, const Root& alpha) {
    if (std::all_of(alpha.begin(), alpha.end(), [](int x) { return x == 0; }))
        throw DomainError("theta_on_root: zero vector is not a root");
    ThetaImage out;
    out.image = theta.apply(alpha);
    out.positive = is_positive(out.image);
    return out;
}

bool is_descent_root(const ThetaAction& theta, const Root& alpha) {
    const ThetaImage img = theta_on_root(theta, alpha);
    if (img.positive) return false;
    Root neg = alpha;
    for (auto& x : neg) x = -x;
    return img.image != neg;
}

int negative_root_count(const ThetaAction& theta, const RootSystem& roots) {
    int count = 0;
    for (const auto& a : roots.positive())
        if (!theta_on_root(theta, a).positive) ++count;
    return count;
}

Vertex reflect_vertex(const Vertex& v, int simple_index) {
    const int k = v.comp.k();
    if (simple_index < 0 || simple_index >= k) throw DomainError("reflect_vertex: bad simple root index");
    SignedPerm s = SignedPerm::identity(k);
    Vertex out = v;
    if (simple_index < k - 1) {
        const auto i = static_cast<std::size_t>(simple_index);
        std::swap(s.rho[i], s.rho[i + 1]);
        std::swap(out.comp.parts[i], out.comp.parts[i + 1]);
    } else {
        s.c[static_cast<std::size_t>(k - 1)] = true;
    }
    out.w = s * v.w * s;
    return out;
}

namespace {

Q dot(const Weight& lambda, const Root& alpha) {
    Q s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) s += lambda[i] * alpha[i];
    return s;
}

int norm2(const Root& alpha) {
    int s = 0;
    for (int x : alpha) s += x * x;
    return s;
}

}  // namespace

Q pairing_with_coroot(const Weight& lambda, const Root& alpha) {
    if (lambda.size() != alpha.size()) throw DomainError("pairing: dimension mismatch");
    return 2 * dot(lambda, alpha) / norm2(alpha);
}

Weight reflect_weight(const Root& alpha, const Weight& lambda) {
    const Q t = pairing_with_coroot(lambda, alpha);
    Weight out = lambda;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t * alpha[i];
    return out;
}

DescentResult descend(const Vertex& start, const RootSystem& roots) {
    if (start.comp.k() != roots.k || start.w.k() != roots.k) throw DomainError("descend: rank mismatch");
    DescentResult out;
    Vertex v = start;
    const auto simple = roots.simple();
    const std::size_t bound = roots.positive().size();
    for (;;) {
        const ThetaAction theta = ThetaAction::from(v.w);
        int chosen = -1;
        for (std::size_t i = 0; i < simple.size(); ++i) {
            if (is_descent_root(theta, simple[i])) {
                chosen = static_cast<int>(i);
                break;
            }
        }
        if (chosen < 0) break;
        if (out.path.size() >= bound) throw std::logic_error("descend: path exceeds the number of positive roots");
        v = reflect_vertex(v, chosen);
        out.path.push_back({static_cast<int>(out.path.size()) + 1, chosen, simple[static_cast<std::size_t>(chosen)], v});
    }
    out.terminal = v;
    return out;
}

bool cone_contains(const ThetaAction& theta, const RootSystem& roots, const Weight& lambda, const Q& c) {
    if (static_cast<int>(lambda.size()) != roots.k) throw DomainError("cone_contains: dimension mismatch");
    const Weight image = theta.apply(lambda);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (image[i] != -lambda[i]) return false;
    for (const auto& a : roots.positive())
        if (!theta_on_root(theta, a).positive && !(pairing_with_coroot(lambda, a) > c)) return false;
    return true;
}

}  // namespace galdist
