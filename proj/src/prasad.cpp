#include "galdist/prasad.hpp"

namespace galdist {

std::string family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::GL: return "GL";
        case GroupFamily::U: return "U";
        case GroupFamily::Sp: return "Sp";
        case GroupFamily::SO: return "SO";
    }
    return "?";
}

GroupFamily parse_family(const std::string& s) {
    if (s == "GL") return GroupFamily::GL;
    if (s == "U") return GroupFamily::U;
    if (s == "Sp") return GroupFamily::Sp;
    if (s == "SO") return GroupFamily::SO;
    throw InputError("unknown group family: " + s);
}

namespace {

std::int64_t squarefree_part(std::int64_t d) {
    if (d == 0) throw DomainError("zero has no squarefree part");
    Z n(static_cast<long>(d));
    Z out = n < 0 ? Z(-1) : Z(1);
    for (std::int64_t q : prime_divisors(n)) {
        int v = valuation(n, q);
        if (v % 2 == 1) out *= static_cast<long>(q);
    }
    return out.get_si();
}

}  // namespace

bool GroupDescriptor::operator==(const GroupDescriptor& o) const {
    if (family != o.family || m != o.m || !(prime == o.prime)) return false;
    if (family == GroupFamily::U)
        return unitary_d && o.unitary_d &&
               reduce(Q(static_cast<long>(*unitary_d)), prime) == reduce(Q(static_cast<long>(*o.unitary_d)), prime);
    if (family == GroupFamily::SO) return so_kernel == o.so_kernel;
    return true;
}

void validate_descriptor(const GroupDescriptor& y) {
    if (y.m < 1) throw DomainError("group rank parameter must be positive");
    switch (y.family) {
        case GroupFamily::GL:
        case GroupFamily::Sp: return;
        case GroupFamily::U:
            if (!y.unitary_d) throw DomainError("unitary group needs its quadratic extension");
            if (reduce(Q(static_cast<long>(*y.unitary_d)), y.prime).is_trivial())
                throw DomainError("unitary group needs a non-square d");
            return;
        case GroupFamily::SO: {
            const int n0 = static_cast<int>(y.so_kernel.size());
            if (n0 > y.m || (y.m - n0) % 2 != 0) throw DomainError("kernel size does not match m");
            if (n0 > 2) throw DomainError("SO form is not quasi-split: anisotropic kernel of dimension > 2");
            for (const auto& e : y.so_kernel)
                if (e == 0) throw DomainError("kernel entries must be nonzero");
            if (n0 > 0 && !is_anisotropic(orthogonal_form(y.so_kernel, y.prime)))
                throw DomainError("SO kernel is isotropic");
            return;
        }
    }
}

GroupDescriptor make_descriptor(GroupFamily family, int m, const Prime& p, std::optional<std::int64_t> unitary_d,
                                std::optional<std::vector<Q>> so_kernel) {
    GroupDescriptor y;
    y.family = family;
    y.m = m;
    y.prime = p;
    if (family == GroupFamily::U && unitary_d) y.unitary_d = squarefree_part(*unitary_d);
    if (family == GroupFamily::SO) {
        if (so_kernel)
            y.so_kernel = *so_kernel;
        else if (m % 2 == 1)
            y.so_kernel = {Q(1)};
    }
    validate_descriptor(y);
    return y;
}

RatMatrix so_gram(const GroupDescriptor& y) {
    if (y.family != GroupFamily::SO) throw DomainError("so_gram: SO descriptors only");
    const std::size_t m = static_cast<std::size_t>(y.m);
    const std::size_t n0 = y.so_kernel.size();
    const std::size_t h = (m - n0) / 2;
    RatMatrix g(m, std::vector<Q>(m, Q(0)));
    for (std::size_t i = 0; i < h; ++i) {
        g[i][m - 1 - i] = 1;
        g[m - 1 - i][i] = 1;
    }
    for (std::size_t i = 0; i < n0; ++i) g[h + i][h + i] = y.so_kernel[i];
    return g;
}

CharacterFormula prasad_character(const GroupDescriptor& y, const QuadExtension& e) {
    validate_descriptor(y);
    if (!(y.prime == e.base)) throw DomainError("group and extension over different primes");
    CharacterFormula out;
    out.extension = "E/F";
    switch (y.family) {
        case GroupFamily::GL:
            out.kind = "eta_det";
            out.exponent = y.m - 1;
            break;
        case GroupFamily::Sp: out.kind = "trivial"; break;
        case GroupFamily::SO:
            out.kind = "eta_sn";
            out.exponent = static_cast<int>(y.so_kernel.size());
            break;
        case GroupFamily::U: {
            const SquareClass k = reduce(Q(static_cast<long>(*y.unitary_d)), y.prime);
            if (k == e.d) {
                out.kind = "trivial";
            } else {
                out.kind = "eta_wsn";
                out.exponent = y.m - 1;
                out.extension = "EK/K";
            }
            break;
        }
    }
    out.reduced_exponent = out.exponent % 2;
    return out;
}

GroupDescriptor opposition_group(const GroupDescriptor& y, const QuadExtension& e) {
    validate_descriptor(y);
    GroupDescriptor out = y;
    const std::int64_t de = e.d.representative().get_si();
    switch (y.family) {
        case GroupFamily::GL:
            out.family = GroupFamily::U;
            out.unitary_d = squarefree_part(de);
            break;
        case GroupFamily::U: {
            const SquareClass k = reduce(Q(static_cast<long>(*y.unitary_d)), y.prime);
            if (k == e.d) {
                out.family = GroupFamily::GL;
                out.unitary_d.reset();
            } else {
                out.unitary_d = squarefree_part(*y.unitary_d * de);
            }
            break;
        }
        case GroupFamily::Sp:
        case GroupFamily::SO: break;
    }
    return out;
}

namespace {

Q bilinear(const RatMatrix& gram, const std::vector<Q>& x, const std::vector<Q>& y) {
    Q s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram[i][j] * y[j];
    }
    return s;
}

std::vector<Q> mat_vec(const RatMatrix& g, const std::vector<Q>& v) {
    std::vector<Q> out(g.size(), Q(0));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += g[i][j] * v[j];
    return out;
}

std::vector<Q> column(const RatMatrix& m, std::size_t j) {
    std::vector<Q> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i][j];
    return out;
}

}  // namespace

RatMatrix reflection_matrix(const RatMatrix& gram, const std::vector<Q>& v) {
    const Q qv = bilinear(gram, v, v);
    if (qv == 0) throw DomainError("reflection in an isotropic vector");
    const std::size_t n = gram.size();
    // s_v(x) = x - 2 B(x, v) / q(v) * v, and B(x, v) = (G v) . x
    const std::vector<Q> gv = mat_vec(gram, v);
    RatMatrix s = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] -= 2 * v[i] * gv[j] / qv;
    return s;
}

ReflectionDecomposition cartan_dieudonne(const RatMatrix& g, const RatMatrix& gram) {
    if (!is_square_matrix(g) || !is_symmetric(gram) || g.size() != gram.size())
        throw DomainError("spinor norm: shape mismatch");
    if (determinant(gram) == 0) throw DomainError("spinor norm: degenerate form");
    if (congruence(gram, g) != gram) throw DomainError("spinor norm: matrix is not an isometry of the form");
    if (determinant(g) != 1) throw DomainError("spinor norm: determinant is not one");

    const Diagonalization diag = diagonalize(gram);
    ReflectionDecomposition out;
    RatMatrix h = g;
    auto push = [&](const std::vector<Q>& v) {
        h = multiply(reflection_matrix(gram, v), h);
        out.norm_product *= bilinear(gram, v, v);
        out.vectors.push_back(v);
    };
    // Each step fixes one more vector of an orthogonal anisotropic basis.
    for (std::size_t i = 0; i < gram.size(); ++i) {
        const std::vector<Q> x = column(diag.basis, i);
        const std::vector<Q> hx = mat_vec(h, x);
        if (hx == x) continue;
        std::vector<Q> diff(x.size()), sum(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) {
            diff[j] = hx[j] - x[j];
            sum[j] = hx[j] + x[j];
        }
        if (bilinear(gram, diff, diff) != 0) {
            push(diff);
        } else {
            push(sum);
            push(x);
        }
    }
    if (h != identity_matrix(gram.size())) throw std::logic_error("cartan_dieudonne: residual is not the identity");
    return out;
}

SquareClass spinor_norm(const RatMatrix& g, const RatMatrix& gram, const Prime& p) {
    return reduce(cartan_dieudonne(g, gram).norm_product, p);
}

BiquadMatrix unitary_antidiagonal(const BiquadField& k, int m) {
    BiquadMatrix w(k, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
        w(i, static_cast<std::size_t>(m) - 1 - i) = BiquadElement(k, 1);
    return w;
}

BiquadElement wsn(const BiquadMatrix& g) {
    const BiquadField k = g.field();
    if (!k.degenerate()) throw DomainError("wsn: expects a matrix over a quadratic field");
    if (!g.is_square()) throw DomainError("wsn: matrix is not square");
    const BiquadMatrix w = unitary_antidiagonal(k, static_cast<int>(g.rows()));
    if (apply_involution(g, Involution::Sigma).transpose() * w * g != w)
        throw DomainError("wsn: matrix is not unitary for the antidiagonal form");
    const BiquadElement d = g.det();
    const BiquadElement one(k, 1);
    BiquadElement z = d == -one ? BiquadElement::sqrt_a(k) : one + d;
    if (z.coeff(1) == 0) return one;
    return BiquadElement(k, z.coeff(0) / z.coeff(1), 1);
}

namespace {

int eta_power(const QuadExtension& e, const Q& value, int exponent) {
    return exponent % 2 == 0 ? 1 : eta(e, value);
}

}  // namespace

int evaluate_character(const CharacterFormula& chi, const GroupDescriptor& y, const QuadExtension& e,
                       const RatMatrix& g) {
    if (chi.kind == "trivial") return 1;
    if (chi.kind == "eta_det") return eta_power(e, determinant(g), chi.exponent);
    if (chi.kind == "eta_sn") {
        const SquareClass sn = spinor_norm(g, so_gram(y), y.prime);
        return chi.exponent % 2 == 0 ? 1 : eta(e, sn);
    }
    throw DomainError("evaluate_character: " + chi.kind + " needs a unitary matrix");
}

int evaluate_character(const CharacterFormula& chi, const GroupDescriptor& y, const QuadExtension& e,
                       const BiquadMatrix& g) {
    if (chi.kind == "trivial") return 1;
    if (chi.kind != "eta_wsn") throw DomainError("evaluate_character: " + chi.kind + " needs a rational matrix");
    if (y.family != GroupFamily::U || g.field().a != *y.unitary_d)
        throw DomainError("evaluate_character: matrix is over the wrong field");
    // eta_{EK/K} is eta_{E/F} composed with the norm from K to F.
    return eta_power(e, norm_E_to_F(wsn(g)), chi.exponent);
}

}  // namespace galdist
