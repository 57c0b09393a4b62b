#include "galdist/symspace.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

namespace galdist {

bool model_is_klein_at(const BiquadField& model, const Prime& p) {
    const Q a(static_cast<long>(model.a));
    if (reduce(a, p).is_trivial()) return false;
    if (model.degenerate()) return true;
    const Q b(static_cast<long>(model.b));
    return !reduce(b, p).is_trivial() && !reduce(a * b, p).is_trivial();
}

ClassicalPair ClassicalPair::make(Case kind, const BiquadField& model, const Prime& p,
                                  std::vector<Q> kernel, int n) {
    if (n < 0) throw DomainError("Witt index increment must be nonnegative");
    if ((kind == Case::Unitary) == model.degenerate())
        throw DomainError("the unitary case needs a biquadratic model, the others a quadratic one");
    if (!model_is_klein_at(model, p)) throw DomainError("model does not stay a field extension at p");
    ClassicalPair pair;
    pair.kind_ = kind;
    pair.model_ = model;
    pair.prime_ = p;
    pair.kernel_ = std::move(kernel);
    pair.n_ = n;
    switch (kind) {
        case Case::Symplectic:
            if (!pair.kernel_.empty()) throw DomainError("symplectic kernels are zero-dimensional");
            break;
        case Case::Orthogonal:
            if (!is_anisotropic(orthogonal_form(pair.kernel_, p)))
                throw DomainError("orthogonal kernel is not anisotropic");
            break;
        case Case::Unitary:
            if (!is_anisotropic(unitary_form(pair.kernel_, *pair.ext_Fprime())))
                throw DomainError("hermitian kernel is not anisotropic");
            break;
    }
    return pair;
}

ClassicalPair ClassicalPair::with_n(int m) const {
    ClassicalPair c = *this;
    if (m < 0) throw DomainError("Witt index increment must be nonnegative");
    c.n_ = m;
    return c;
}

RatMatrix ClassicalPair::gram_rational() const {
    const int size = this->size();
    const std::size_t sz = static_cast<std::size_t>(size);
    RatMatrix j(sz, std::vector<Q>(sz, Q(0)));
    for (int i = 0; i < n_; ++i) {
        j[static_cast<std::size_t>(i)][static_cast<std::size_t>(size - 1 - i)] = 1;
        j[static_cast<std::size_t>(size - 1 - i)][static_cast<std::size_t>(i)] = epsilon(kind_);
    }
    for (int k = 0; k < n0(); ++k) j[static_cast<std::size_t>(n_ + k)][static_cast<std::size_t>(n_ + k)] = kernel_[static_cast<std::size_t>(k)];
    return j;
}

BiquadMatrix ClassicalPair::gram() const { return BiquadMatrix::from_rational(model_, gram_rational()); }

Q ClassicalPair::kernel_det() const {
    Q d = 1;
    for (const auto& e : kernel_) d *= e;
    return d;
}

QuadExtension ClassicalPair::ext_E() const { return QuadExtension(reduce(Q(static_cast<long>(model_.a)), prime_)); }

std::optional<QuadExtension> ClassicalPair::ext_Fprime() const {
    if (model_.degenerate()) return std::nullopt;
    return QuadExtension(reduce(Q(static_cast<long>(model_.b)), prime_));
}

bool ClassicalPair::operator==(const ClassicalPair& o) const {
    return kind_ == o.kind_ && model_ == o.model_ && prime_ == o.prime_ && kernel_ == o.kernel_ && n_ == o.n_;
}

bool XOrbitInvariant::operator==(const XOrbitInvariant& o) const {
    return kind == o.kind && gamma_bit == o.gamma_bit && special == o.special && partial == o.partial &&
           hasse == o.hasse;
}

bool XOrbitInvariant::operator<(const XOrbitInvariant& o) const {
    auto key = [](const XOrbitInvariant& v) {
        std::int64_t pv = v.partial ? v.partial->val : -1;
        std::int64_t pu = v.partial ? v.partial->unit : -1;
        return std::make_tuple(static_cast<int>(v.kind), v.gamma_bit, !v.special, pv, pu, v.hasse);
    };
    return key(*this) < key(o);
}

XOrbitInvariant classify_x(const BiquadMatrix& x, const BiquadMatrix& z, const ClassicalPair& pair) {
    const std::size_t n = static_cast<std::size_t>(pair.size());
    if (x.rows() != n || z.rows() != n || !x.is_square() || !z.is_square())
        throw DomainError("classify_x: matrix size does not match the pair");
    const BiquadMatrix j = pair.gram();
    if (!in_symmetric_space(x, j, pair.kind())) throw DomainError("classify_x: x is not in the symmetric space");
    if (n > 0 && z.det().is_zero()) throw DomainError("classify_x: z is singular");
    if (z != x * apply_involution(z, Involution::Sigma))
        throw DomainError("classify_x: x is not z sigma(z)^{-1}");
    const BiquadMatrix y = star(j, z);
    if (!y.fixed_by(Involution::Sigma)) throw DomainError("classify_x: y is not defined over the base field");

    XOrbitInvariant inv;
    inv.kind = pair.kind();
    switch (pair.kind()) {
        case Case::Symplectic: break;
        case Case::Orthogonal: {
            const RatMatrix yr = y.to_rational();
            const Diagonalization d = diagonalize(yr);
            Q det = 1;
            for (const auto& e : d.diagonal) det *= e;
            inv.partial = reduce(det, pair.prime());
            inv.hasse = hasse_invariant(d.diagonal, pair.prime());
            const BiquadElement dx = x.det();
            inv.special = dx == BiquadElement(pair.model(), 1);
            break;
        }
        case Case::Unitary: {
            const BiquadElement dy = y.det();
            if (!dy.is_rational()) throw DomainError("classify_x: det y is not rational");
            const Q ratio = dy.coeff(0) * determinant(pair.gram_rational());
            inv.gamma_bit = eta(*pair.ext_Fprime(), ratio) == 1 ? 0 : 1;
            break;
        }
    }
    return inv;
}

int orbit_count_X(const ClassicalPair& pair, Component component) {
    if (pair.kind() != Case::Orthogonal) {
        if (component != Component::Full) throw DomainError("orbit_count_X: components only exist in the orthogonal case");
        if (pair.kind() == Case::Symplectic) return 1;
        return pair.size() == 0 ? 1 : 2;
    }
    if (component == Component::Full)
        return orbit_count_X(pair, Component::SX) + orbit_count_X(pair, Component::Complement);
    const int size = pair.size();
    if (size == 0) return component == Component::SX ? 1 : 0;
    if (size == 1) return 1;
    if (size == 2) {
        const Q det = determinant(pair.gram_rational());
        const Q a(static_cast<long>(pair.model().a));
        const Q target = component == Component::SX ? Q(-1) : Q(-a);
        return reduce(det / target, pair.prime()).is_trivial() ? 1 : 2;
    }
    return 2;
}

bool same_G0_orbit(const XOrbitInvariant& a, const XOrbitInvariant& b) {
    if (a.kind != b.kind) throw DomainError("same_G0_orbit: invariants of different cases");
    return a == b;
}

int gamma_bit(const BiquadElement& x, const Prime& p) {
    const BiquadField f = x.field();
    if (f.degenerate()) throw DomainError("gamma_bit needs a biquadratic model");
    const BiquadElement one(f, 1);
    if (x * apply_involution(x, Involution::Tau) != one || x * apply_involution(x, Involution::Sigma) != one)
        throw DomainError("gamma_bit: element is not of norm one for both sigma and tau");
    const BiquadElement z = x == -one ? BiquadElement::sqrt_a(f) : one + x;
    const BiquadElement nz = norm_to_E(z);
    if (!nz.is_rational()) throw DomainError("gamma_bit: norm is not rational");
    return hilbert(nz.coeff(0), Q(static_cast<long>(f.b)), p) == 1 ? 0 : 1;
}

GammaIndexData gamma_index_data(const ClassicalPair& pair, int box_height) {
    if (pair.kind() != Case::Unitary) throw DomainError("gamma_index_data: unitary case only");
    const BiquadField f = pair.model();
    GammaIndexData data;
    data.identity_bit = gamma_bit(BiquadElement(f, 1), pair.prime());
    data.minus_one_bit = gamma_bit(BiquadElement(f, -1), pair.prime());
    data.minus_one_oracle_bit = hilbert_oracle(f.a, f.b, pair.prime()) == 1 ? 0 : 1;
    const BiquadElement minus_one(f, -1);
    const int h = box_height;
    for (int c0 = -h; c0 <= h; ++c0)
        for (int c1 = -h; c1 <= h; ++c1)
            for (int c2 = -h; c2 <= h; ++c2)
                for (int c3 = -h; c3 <= h; ++c3) {
                    const BiquadElement c(f, c0, c1, c2, c3);
                    if (c.is_zero()) continue;
                    const BiquadElement g = c * apply_involution(c, Involution::SigmaTau) /
                                            (apply_involution(c, Involution::Sigma) * apply_involution(c, Involution::Tau));
                    ++data.box_samples;
                    if (gamma_bit(g, pair.prime()) != 0) ++data.box_violations;
                    if (g == minus_one) data.minus_one_in_box = true;
                }
    return data;
}

BiquadMatrix hilbert90_matrix(const BiquadMatrix& x, std::uint64_t seed) {
    const BiquadField f = x.field();
    const std::size_t n = x.rows();
    if (!(x * apply_involution(x, Involution::Sigma)).is_identity())
        throw DomainError("hilbert90_matrix: x sigma(x) is not the identity");
    if (n == 0) return x;
    std::vector<BiquadMatrix> candidates{BiquadMatrix::identity(f, n),
                                         BiquadMatrix::identity(f, n) * BiquadElement::sqrt_a(f)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int attempt = 0; attempt < 400; ++attempt) {
        BiquadMatrix c;
        if (static_cast<std::size_t>(attempt) < candidates.size()) {
            c = candidates[static_cast<std::size_t>(attempt)];
        } else {
            c = BiquadMatrix(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    c(i, j) = f.degenerate() ? BiquadElement(f, coef(rng), coef(rng))
                                             : BiquadElement(f, coef(rng), coef(rng), coef(rng), coef(rng));
        }
        BiquadMatrix z = c + x * apply_involution(c, Involution::Sigma);
        if (!z.det().is_zero()) return z;
    }
    throw DomainError("hilbert90_matrix: no invertible candidate found");
}

namespace {

struct Basis {
    std::vector<Q> diagonal;
    RatMatrix change;  // diag(diagonal) = {}^t change * j * change
};

std::vector<Basis> diagonal_bases(const RatMatrix& j) {
    std::vector<Basis> out;
    Diagonalization d = diagonalize(j);
    out.push_back({d.diagonal, d.basis});
    const std::size_t n = j.size();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int round = 0; round < 6; ++round) {
        RatMatrix u = identity_matrix(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) u[r][c] = coef(rng);
        RatMatrix l = identity_matrix(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < r; ++c) l[r][c] = coef(rng);
        RatMatrix q = multiply(l, u);
        Diagonalization dd = diagonalize(congruence(j, q));
        out.push_back({dd.diagonal, multiply(q, dd.basis)});
    }
    return out;
}

XRepresentative representative_from_twist(const ClassicalPair& pair, const RatMatrix& change,
                                          const BiquadMatrix& twist) {
    const BiquadField f = pair.model();
    BiquadMatrix z = BiquadMatrix::from_rational(f, change) * twist;
    BiquadMatrix x = z * apply_involution(z, Involution::Sigma).inverse();
    XOrbitInvariant inv = classify_x(x, z, pair);
    return {x, z, inv};
}

bool component_matches(const XOrbitInvariant& inv, Component c) {
    if (c == Component::Full) return true;
    return inv.special == (c == Component::SX);
}

std::vector<XRepresentative> orthogonal_catalogue(const ClassicalPair& pair, Component component) {
    std::vector<XRepresentative> found;
    const BiquadField f = pair.model();
    const std::size_t n = static_cast<std::size_t>(pair.size());
    const int target = orbit_count_X(pair, component);
    auto record = [&](const XRepresentative& rep) {
        if (!component_matches(rep.invariant, component)) return;
        for (const auto& r : found)
            if (r.invariant == rep.invariant) return;
        found.push_back(rep);
    };
    const BiquadElement root = BiquadElement::sqrt_a(f);
    const std::vector<Q> ks{Q(1), Q(2), Q(3), Q(1, 2), Q(1, 3), Q(2, 3), Q(3, 2), Q(4), Q(5)};
    for (const Basis& basis : diagonal_bases(pair.gram_rational())) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) > 2) continue;
            BiquadMatrix twist = BiquadMatrix::identity(f, n);
            std::vector<Q> twisted = basis.diagonal;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) {
                    twist(i, i) = root;
                    twisted[i] *= Q(static_cast<long>(f.a));
                }
            record(representative_from_twist(pair, basis.change, twist));
            if (static_cast<int>(found.size()) >= target) return found;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    for (const Q& k : ks) {
                        BiquadMatrix block = BiquadMatrix::identity(f, n);
                        block(i, j) = root * Q(k / twisted[i]);
                        block(j, i) = root * Q(-k / twisted[j]);
                        BiquadMatrix t = twist * block;
                        if (t.det().is_zero()) continue;
                        record(representative_from_twist(pair, basis.change, t));
                        if (static_cast<int>(found.size()) >= target) return found;
                    }
                }
        }
    }
    return found;
}

std::optional<BiquadElement> unitary_non_norm_twist(const BiquadField& f, const Prime& p) {
    const Q b(static_cast<long>(f.b));
    for (int h = 1; h <= 6; ++h)
        for (int c0 = -h; c0 <= h; ++c0)
            for (int c1 = -h; c1 <= h; ++c1)
                for (int c2 = -h; c2 <= h; ++c2)
                    for (int c3 = -h; c3 <= h; ++c3) {
                        const BiquadElement c(f, c0, c1, c2, c3);
                        if (c.is_zero()) continue;
                        const BiquadElement nc = norm_to_E(c);
                        if (!nc.is_rational()) continue;
                        if (hilbert(nc.coeff(0), b, p) == -1) return c;
                    }
    return std::nullopt;
}

}  // namespace

std::vector<XRepresentative> realize_orbits(const ClassicalPair& pair, Component component) {
    const BiquadField f = pair.model();
    const std::size_t n = static_cast<std::size_t>(pair.size());
    std::vector<XRepresentative> found;
    const BiquadMatrix id = BiquadMatrix::identity(f, n);
    switch (pair.kind()) {
        case Case::Symplectic:
            if (component != Component::Full) throw DomainError("realize_orbits: components only exist in the orthogonal case");
            found.push_back({id, id, classify_x(id, id, pair)});
            break;
        case Case::Unitary: {
            if (component != Component::Full) throw DomainError("realize_orbits: components only exist in the orthogonal case");
            found.push_back({id, id, classify_x(id, id, pair)});
            if (n == 0) break;
            const auto c = unitary_non_norm_twist(f, pair.prime());
            if (!c) break;
            const Diagonalization d = diagonalize(pair.gram_rational());
            BiquadMatrix twist = id;
            twist(0, 0) = *c;
            found.push_back(representative_from_twist(pair, d.basis, twist));
            break;
        }
        case Case::Orthogonal:
            if (n == 0) {
                if (component != Component::Complement) found.push_back({id, id, classify_x(id, id, pair)});
                break;
            }
            for (Component c : {Component::SX, Component::Complement}) {
                if (component != Component::Full && component != c) continue;
                for (auto& rep : orthogonal_catalogue(pair, c)) found.push_back(std::move(rep));
            }
            break;
    }
    std::sort(found.begin(), found.end(),
              [](const XRepresentative& a, const XRepresentative& b) { return a.invariant < b.invariant; });
    return found;
}

}  // namespace galdist
