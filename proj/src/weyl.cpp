#include "galdist/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace galdist {

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0) + r; }

void validate_composition(const Composition& comp, const ClassicalPair& pair) {
    for (int p : comp.parts)
        if (p < 1) throw DomainError("composition parts must be positive");
    if (comp.r < 0) throw DomainError("composition remainder must be nonnegative");
    if (comp.total() != pair.n())
        throw DomainError("composition does not add up to the Witt index of the pair");
    if (comp.split_even_sign != 1 && comp.split_even_sign != -1)
        throw DomainError("split even sign must be +1 or -1");
    if (comp.split_even_sign == -1 &&
        !(pair.split_even() && comp.r == 0 && comp.k() > 0 && comp.parts.back() != 1))
        throw DomainError("the split even sign -1 needs r = 0 and a last part other than 1 in the split even orthogonal case");
    if (pair.split_even() && comp.r == 1)
        throw DomainError("r = 1 does not index a parabolic of the special orthogonal group in the split even case");
}

SignedPerm SignedPerm::identity(int k) {
    SignedPerm w;
    w.rho.resize(static_cast<std::size_t>(k));
    std::iota(w.rho.begin(), w.rho.end(), 0);
    w.c.assign(static_cast<std::size_t>(k), false);
    return w;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    if (k() != o.k()) throw DomainError("signed permutations of different sizes");
    SignedPerm r;
    r.rho.resize(rho.size());
    r.c.resize(rho.size());
    for (std::size_t j = 0; j < rho.size(); ++j) {
        const std::size_t oj = static_cast<std::size_t>(o.rho[j]);
        r.rho[j] = rho[oj];
        r.c[j] = c[oj] != o.c[j];
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.rho.resize(rho.size());
    r.c.resize(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const std::size_t ri = static_cast<std::size_t>(rho[i]);
        r.rho[ri] = static_cast<int>(i);
        r.c[ri] = c[i];
    }
    return r;
}

bool SignedPerm::is_involution() const { return *this * *this == identity(k()); }

namespace {

std::vector<int> members(const std::vector<bool>& c) {
    std::vector<int> m;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) m.push_back(static_cast<int>(i));
    return m;
}

}  // namespace

bool SignedPerm::operator<(const SignedPerm& o) const {
    const auto mc = members(c), oc = members(o.c);
    return std::make_tuple(mc.size(), rho, mc) < std::make_tuple(oc.size(), o.rho, oc);
}

std::vector<SignedPerm> all_signed_perms(int k) {
    std::vector<SignedPerm> out;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            SignedPerm w;
            w.rho = perm;
            w.c.resize(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) w.c[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<int> fixed_signed(const SignedPerm& w) {
    std::vector<int> out;
    for (int i = 0; i < w.k(); ++i)
        if (w.c[static_cast<std::size_t>(i)] && w.rho[static_cast<std::size_t>(i)] == i) out.push_back(i);
    return out;
}

int odd_count(const SignedPerm& w, const Composition& comp) {
    int o = 0;
    for (int i = 0; i < w.k(); ++i)
        if (w.c[static_cast<std::size_t>(i)] && comp.parts[static_cast<std::size_t>(i)] % 2 == 1) ++o;
    return o;
}

int fixed_signed_size(const SignedPerm& w, const Composition& comp) {
    int s = 0;
    for (int i : fixed_signed(w)) s += comp.parts[static_cast<std::size_t>(i)];
    return s;
}

bool compatible(const SignedPerm& w, const Composition& comp) {
    if (w.k() != comp.k()) return false;
    for (int i = 0; i < w.k(); ++i)
        if (comp.parts[static_cast<std::size_t>(w.rho[static_cast<std::size_t>(i)])] != comp.parts[static_cast<std::size_t>(i)])
            return false;
    return true;
}

std::vector<SignedPerm> enumerate_involutions(const Composition& comp, bool parity_filter) {
    std::vector<SignedPerm> out;
    for (auto& w : all_signed_perms(comp.k())) {
        if (!w.is_involution() || !compatible(w, comp)) continue;
        if (parity_filter && odd_count(w, comp) % 2 != 0) continue;
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPerm> involutions_for(const Composition& comp, const ClassicalPair& pair) {
    return enumerate_involutions(comp, pair.split_even() && comp.r == 0);
}

namespace {

BiquadMatrix antidiagonal(const BiquadField& f, std::size_t n) {
    BiquadMatrix w(f, n, n);
    for (std::size_t i = 0; i < n; ++i) w(i, n - 1 - i) = BiquadElement(f, 1);
    return w;
}

BiquadMatrix power(const BiquadMatrix& m, int e) {
    BiquadMatrix r = BiquadMatrix::identity(m.field(), m.rows());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

std::size_t offset_of(const Composition& comp, int i) {
    std::size_t off = 0;
    for (int j = 0; j < i; ++j) off += static_cast<std::size_t>(comp.parts[static_cast<std::size_t>(j)]);
    return off;
}

void check_involution(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair) {
    validate_composition(comp, pair);
    if (!compatible(w, comp)) throw DomainError("involution is not compatible with the composition");
}

}  // namespace

BiquadMatrix dual_block(const BiquadMatrix& g) {
    const BiquadMatrix w = antidiagonal(g.field(), g.rows());
    return w * apply_involution(g, Involution::Tau).inverse().transpose() * w;
}

BiquadMatrix embed_levi(const std::vector<BiquadMatrix>& blocks, const BiquadMatrix& h) {
    std::vector<BiquadMatrix> all = blocks;
    all.push_back(h);
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) all.push_back(dual_block(*it));
    std::vector<BiquadMatrix> nonempty;
    for (auto& b : all)
        if (b.rows() > 0) nonempty.push_back(b);
    if (nonempty.empty()) return BiquadMatrix(h.field(), 0, 0);
    return block_diag(nonempty);
}

BiquadMatrix eta_matrix(const ClassicalPair& pair, const Composition& comp, int m) {
    const BiquadField f = pair.model();
    const std::size_t size = static_cast<std::size_t>(pair.n0() + 2 * m);
    if (pair.split_even() && comp.r == 0) return BiquadMatrix::identity(f, size);
    if (pair.n0() > 0) {
        BiquadMatrix eta0 = BiquadMatrix::identity(f, static_cast<std::size_t>(pair.n0()));
        if (pair.kind() == Case::Orthogonal)
            eta0 = BiquadMatrix::from_rational(f, det_image_witness(diagonal_matrix(pair.kernel()), -1));
        return embed_levi({BiquadMatrix::identity(f, static_cast<std::size_t>(m))}, eta0);
    }
    if (pair.kind() == Case::Orthogonal && m >= 1)
        return embed_levi({BiquadMatrix::identity(f, static_cast<std::size_t>(m - 1))}, antidiagonal(f, 2));
    return BiquadMatrix::identity(f, size);
}

BiquadMatrix kappa_matrix(const ClassicalPair& pair) {
    if (!pair.split_even() || pair.n() < 1) throw DomainError("kappa exists only in the split even orthogonal case");
    const BiquadField f = pair.model();
    return embed_levi({BiquadMatrix::identity(f, static_cast<std::size_t>(pair.n() - 1))}, antidiagonal(f, 2));
}

namespace {

BiquadMatrix build_tw_standard(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair) {
    const BiquadField f = pair.model();
    const std::size_t total = static_cast<std::size_t>(pair.size());
    const std::size_t base = offset_of(comp, comp.k());
    const BiquadElement one(f, 1), eps(f, epsilon(pair.kind()));

    BiquadMatrix wrho(f, base, base);
    for (int j = 0; j < comp.k(); ++j) {
        const int i = w.rho[static_cast<std::size_t>(j)];
        const std::size_t ri = offset_of(comp, i), cj = offset_of(comp, j);
        for (int a = 0; a < comp.parts[static_cast<std::size_t>(j)]; ++a)
            wrho(ri + static_cast<std::size_t>(a), cj + static_cast<std::size_t>(a)) = one;
    }
    const std::size_t middle = total - 2 * base;
    BiquadMatrix t = embed_levi({wrho}, BiquadMatrix::identity(f, middle));

    for (int i = 0; i < comp.k(); ++i) {
        if (!w.c[static_cast<std::size_t>(i)]) continue;
        const std::size_t off = offset_of(comp, i);
        const std::size_t ni = static_cast<std::size_t>(comp.parts[static_cast<std::size_t>(i)]);
        const std::size_t mirror = total - off - ni;
        int m = comp.r;
        for (int j = i + 1; j < comp.k(); ++j) m += comp.parts[static_cast<std::size_t>(j)];
        BiquadMatrix ti = BiquadMatrix::identity(f, total);
        for (std::size_t a = 0; a < ni; ++a) {
            ti(off + a, off + a) = BiquadElement(f);
            ti(mirror + a, mirror + a) = BiquadElement(f);
            ti(off + a, mirror + a) = one;
            ti(mirror + a, off + a) = eps;
        }
        ti.set_block(off + ni, off + ni, power(eta_matrix(pair, comp, m), static_cast<int>(ni % 2)));
        t = t * ti;
    }
    return t;
}

}  // namespace

BiquadMatrix build_tw(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair) {
    check_involution(comp, w, pair);
    BiquadMatrix t = build_tw_standard(comp, w, pair);
    if (comp.split_even_sign == -1) {
        const BiquadMatrix kappa = kappa_matrix(pair);
        t = kappa * t * kappa;
    }
    return t;
}

namespace {

Q rational_non_norm(const ClassicalPair& pair) {
    const Q a(static_cast<long>(pair.model().a));
    for (long v = 1; v < 200; ++v)
        for (long s : {v, -v})
            if (hilbert(Q(s), a, pair.prime()) == -1) return Q(s);
    throw DomainError("no rational non-norm found");
}

BiquadElement second_field_non_norm(const ClassicalPair& pair) {
    const BiquadField f = pair.model();
    const Q a(static_cast<long>(f.a));
    const Q ab(static_cast<long>(f.a * f.b));
    for (long h = 1; h < 20; ++h)
        for (long s = -h; s <= h; ++s)
            for (long t = -h; t <= h; ++t) {
                if (t == 0 && s == 0) continue;
                const Q norm = Q(s * s) - ab * Q(t * t);
                if (norm != 0 && hilbert(norm, a, pair.prime()) == -1) return BiquadElement(f, s, 0, 0, t);
            }
    throw DomainError("no non-norm found in the fixed field of sigma tau");
}

Q rational_of(const BiquadElement& e) {
    if (!e.is_rational()) throw DomainError("expected a rational value");
    return e.coeff(0);
}

}  // namespace

BiquadMatrix y_representative(const ClassicalPair& pair, int size, int bit) {
    const BiquadField f = pair.model();
    BiquadMatrix y = BiquadMatrix::identity(f, static_cast<std::size_t>(size));
    if (bit != 0 && bit != 1) throw DomainError("orbit bits are 0 or 1");
    if (bit == 1) {
        if (size < 1) throw DomainError("no second orbit of empty forms");
        y(0, 0) = pair.kind() == Case::Unitary ? second_field_non_norm(pair) : BiquadElement(f, rational_non_norm(pair));
    }
    if (pair.kind() == Case::Symplectic) y = y * BiquadElement::sqrt_a(f);
    return y;
}

int y_bit(const ClassicalPair& pair, const BiquadMatrix& y) {
    const BiquadField f = pair.model();
    const BiquadMatrix adj = apply_involution(y, Involution::SigmaTau).transpose();
    if (adj != y * BiquadElement(f, epsilon(pair.kind())))
        throw DomainError("y is not hermitian for sigma tau with the sign of the pair");
    const Q a(static_cast<long>(f.a));
    BiquadElement d = y.det();
    Q value;
    switch (pair.kind()) {
        case Case::Orthogonal: value = rational_of(d); break;
        case Case::Unitary: value = rational_of(norm_to_Fprime(d)); break;
        case Case::Symplectic: {
            BiquadElement scale = BiquadElement::sqrt_a(f).inverse();
            for (std::size_t i = 0; i < y.rows(); ++i) d *= scale;
            value = rational_of(d);
            break;
        }
    }
    return hilbert(value, a, pair.prime()) == 1 ? 0 : 1;
}

Component z_component(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair) {
    if (pair.kind() != Case::Orthogonal) return Component::Full;
    const bool odd = odd_count(w, comp) % 2 == 1;
    return odd && (pair.n0() > 0 || comp.r > 1) ? Component::Complement : Component::SX;
}

namespace {

std::vector<BiquadMatrix> levi_blocks_for_xw(const Composition& comp, const SignedPerm& w,
                                             const std::map<int, int>& y_bits, const ClassicalPair& pair) {
    const BiquadField f = pair.model();
    std::vector<BiquadMatrix> blocks;
    for (int i = 0; i < comp.k(); ++i) {
        const std::size_t ni = static_cast<std::size_t>(comp.parts[static_cast<std::size_t>(i)]);
        BiquadMatrix u = BiquadMatrix::identity(f, ni);
        const bool in_c = w.c[static_cast<std::size_t>(i)];
        const int partner = w.rho[static_cast<std::size_t>(i)];
        if (in_c && partner == i) {
            const BiquadMatrix y = y_representative(pair, static_cast<int>(ni), y_bits.at(i));
            u = antidiagonal(f, ni) * apply_involution(y, Involution::Sigma);
        } else if (in_c && i < partner && pair.kind() == Case::Symplectic) {
            u = u * BiquadElement(f, -1);
        }
        blocks.push_back(u);
    }
    return blocks;
}

Q product_det_y(const Composition& comp, const SignedPerm& w, const std::map<int, int>& y_bits,
                const ClassicalPair& pair) {
    Q prod = 1;
    for (int i : fixed_signed(w))
        prod *= rational_of(y_representative(pair, comp.parts[static_cast<std::size_t>(i)], y_bits.at(i)).det());
    return prod;
}

}  // namespace

XwResult build_xw(const Composition& comp, const SignedPerm& w, const std::map<int, int>& y_bits,
                  const XRepresentative& z, const ClassicalPair& pair) {
    check_involution(comp, w, pair);
    if (!w.is_involution()) throw DomainError("build_xw needs an involution");
    const auto fixed = fixed_signed(w);
    if (y_bits.size() != fixed.size()) throw DomainError("y bits must be given exactly on I(w)");
    for (int i : fixed)
        if (!y_bits.count(i)) throw DomainError("y bits must be given exactly on I(w)");
    const ClassicalPair pair_r = pair.with_n(comp.r);
    if (z.x.rows() != static_cast<std::size_t>(pair_r.size())) throw DomainError("z has the wrong size");
    const int o = odd_count(w, comp);
    const Component comp_z = z_component(comp, w, pair);
    if (pair.kind() == Case::Orthogonal && pair_r.size() > 0 && z.invariant.special != (comp_z == Component::SX))
        throw DomainError("z does not lie in X_r meet eta_r^{o(c)} G_r^circ");
    if (pair.kind() == Case::Orthogonal && pair_r.size() == 0 && comp_z == Component::Complement)
        throw DomainError("z does not lie in X_r meet eta_r^{o(c)} G_r^circ");

    const BiquadField f = pair.model();
    const BiquadMatrix eta = power(eta_matrix(pair, comp, comp.r), o % 2);
    const BiquadMatrix middle = eta * z.x;
    BiquadMatrix x = build_tw_standard(comp, w, pair) * embed_levi(levi_blocks_for_xw(comp, w, y_bits, pair), middle);
    if (comp.split_even_sign == -1) {
        const BiquadMatrix kappa = kappa_matrix(pair);
        x = kappa * x * kappa;
    }

    XOrbitInvariant predicted;
    predicted.kind = pair.kind();
    switch (pair.kind()) {
        case Case::Symplectic: break;
        case Case::Unitary: {
            int bit = o % 2 == 1 ? gamma_bit(BiquadElement(f, -1), pair.prime()) : 0;
            for (int i : fixed) {
                const BiquadElement d = y_representative(pair, comp.parts[static_cast<std::size_t>(i)], y_bits.at(i)).det();
                bit ^= gamma_bit(apply_involution(d, Involution::Tau) / d, pair.prime());
            }
            if (pair_r.size() > 0) bit ^= gamma_bit(z.x.det(), pair.prime());
            predicted.gamma_bit = bit;
            break;
        }
        case Case::Orthogonal: {
            const Prime& p = pair.prime();
            const int nw = fixed_signed_size(w, comp);
            const Q det_kernel = pair.n0() == 0 ? Q(1) : pair.kernel_det();
            Q l = ((comp.r * o + nw * (nw - 1) / 2) % 2 == 0) ? Q(1) : Q(-1);
            for (int i = 0; i < o; ++i) l *= 2 * det_kernel;
            l *= product_det_y(comp, w, y_bits, pair);
            int ratio_z = 1;
            if (pair_r.size() > 0) ratio_z = z.invariant.hasse * hasse_of_split_extension(pair.kernel(), comp.r, p);
            predicted.special = true;
            predicted.partial = reduce(determinant(pair.gram_rational()), p);
            predicted.hasse = hasse_of_split_extension(pair.kernel(), pair.n(), p) *
                              hilbert(l, Q(static_cast<long>(f.a)), p) * ratio_z;
            break;
        }
    }
    return {x, z.x, predicted};
}

bool MOrbitData::operator<(const MOrbitData& o) const {
    return std::tie(y_bits, z_invariant) < std::tie(o.y_bits, o.z_invariant);
}

bool MOrbitData::operator==(const MOrbitData& o) const {
    return y_bits == o.y_bits && z_invariant == o.z_invariant;
}

MOrbitData recover_m_orbit_data(const BiquadMatrix& xw, const Composition& comp, const SignedPerm& w,
                                const ClassicalPair& pair) {
    check_involution(comp, w, pair);
    BiquadMatrix x = xw;
    if (comp.split_even_sign == -1) {
        const BiquadMatrix kappa = kappa_matrix(pair);
        x = kappa * x * kappa;
    }
    const BiquadMatrix m = build_tw_standard(comp, w, pair).inverse() * x;
    const BiquadField f = pair.model();
    MOrbitData data;
    for (int i : fixed_signed(w)) {
        const std::size_t off = offset_of(comp, i);
        const std::size_t ni = static_cast<std::size_t>(comp.parts[static_cast<std::size_t>(i)]);
        const BiquadMatrix u = m.block(off, off, ni, ni);
        const BiquadMatrix y = antidiagonal(f, ni) * apply_involution(u, Involution::Sigma);
        data.y_bits[i] = y_bit(pair, y);
    }
    const ClassicalPair pair_r = pair.with_n(comp.r);
    const std::size_t base = offset_of(comp, comp.k());
    const std::size_t middle = static_cast<std::size_t>(pair_r.size());
    const BiquadMatrix h = m.block(base, base, middle, middle);
    const BiquadMatrix eta = power(eta_matrix(pair, comp, comp.r), odd_count(w, comp) % 2);
    const BiquadMatrix z = eta * h;
    data.z_invariant = classify_x(z, hilbert90_matrix(z), pair_r);
    return data;
}

int admissible_delta(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair) {
    check_involution(comp, w, pair);
    switch (pair.kind()) {
        case Case::Symplectic: return 0;
        case Case::Unitary: return pair.n0() + 2 * comp.r > 0 ? 1 : 0;
        case Case::Orthogonal: {
            if (comp.r == 0 && pair.n0() <= 1) return 0;
            if (comp.r == 0 && pair.n0() == 2) {
                const Q a(static_cast<long>(pair.model().a));
                const Q target = odd_count(w, comp) % 2 == 0 ? Q(-1) : Q(-a);
                if (reduce(pair.kernel_det() / target, pair.prime()).is_trivial()) return 0;
            }
            return 1;
        }
    }
    return 0;
}

int admissible_orbit_count(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair) {
    return 1 << (static_cast<int>(fixed_signed(w).size()) + admissible_delta(comp, w, pair));
}

std::vector<StabilizerFactor> stabilizer_shape(const Composition& comp, const SignedPerm& w,
                                               const std::map<int, int>& y_bits,
                                               const std::optional<XOrbitInvariant>& z_inv) {
    if (!compatible(w, comp) || !w.is_involution()) throw DomainError("stabilizer_shape needs a compatible involution");
    std::vector<StabilizerFactor> out;
    for (int i = 0; i < comp.k(); ++i) {
        const int partner = w.rho[static_cast<std::size_t>(i)];
        const int size = comp.parts[static_cast<std::size_t>(i)];
        const bool in_c = w.c[static_cast<std::size_t>(i)];
        if (partner < i) continue;
        StabilizerFactor factor;
        factor.size = size;
        if (partner != i) {
            factor.kind = "GL_E'";
            factor.indices = {i, partner};
        } else if (!in_c) {
            factor.kind = "GL_F'";
            factor.indices = {i};
        } else {
            factor.kind = "U";
            factor.indices = {i};
            auto it = y_bits.find(i);
            factor.orbit_bit = it == y_bits.end() ? 0 : it->second;
        }
        out.push_back(factor);
    }
    StabilizerFactor fixed;
    fixed.kind = "fixed";
    fixed.size = comp.r;
    fixed.z_invariant = z_inv;
    out.push_back(fixed);
    return out;
}

}  // namespace galdist
