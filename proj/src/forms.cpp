#include "galdist/forms.hpp"

namespace galdist {

DiagForm orthogonal_form(std::vector<Q> entries, const Prime& p) {
    for (const auto& e : entries)
        if (e == 0) throw DomainError("form entries must be nonzero");
    return DiagForm{Case::Orthogonal, std::move(entries), p, std::nullopt, 0};
}

DiagForm unitary_form(std::vector<Q> entries, const QuadExtension& ext) {
    for (const auto& e : entries)
        if (e == 0) throw DomainError("form entries must be nonzero");
    return DiagForm{Case::Unitary, std::move(entries), ext.base, ext, 0};
}

DiagForm symplectic_form(int rank, const Prime& p) {
    if (rank < 0 || rank % 2 != 0) throw DomainError("symplectic forms have even rank");
    return DiagForm{Case::Symplectic, {}, p, std::nullopt, rank};
}

bool FormInvariants::operator==(const FormInvariants& o) const {
    return kind == o.kind && rank == o.rank && disc == o.disc && hasse == o.hasse &&
           det_norm_bit == o.det_norm_bit;
}

Diagonalization diagonalize(const RatMatrix& gram) {
    if (!is_symmetric(gram)) throw DomainError("diagonalize: gram matrix is not symmetric");
    const std::size_t n = gram.size();
    RatMatrix g = gram;
    RatMatrix p = identity_matrix(n);

    // Column operation c_i += f c_j applied as a congruence on g.
    auto add_multiple = [&](std::size_t i, std::size_t j, const Q& f) {
        for (std::size_t r = 0; r < n; ++r) p[r][i] += f * p[r][j];
        for (std::size_t r = 0; r < n; ++r) g[r][i] += f * g[r][j];
        for (std::size_t c = 0; c < n; ++c) g[i][c] += f * g[j][c];
    };
    auto swap_basis = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) std::swap(p[r][i], p[r][j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(g[r][i], g[r][j]);
        std::swap(g[i], g[j]);
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (g[i][i] == 0) {
            std::size_t j = i + 1;
            while (j < n && g[j][j] == 0) ++j;
            if (j < n) {
                swap_basis(i, j);
            } else {
                j = i + 1;
                while (j < n && g[i][j] == 0) ++j;
                if (j == n) throw DomainError("diagonalize: singular gram matrix");
                add_multiple(i, j, Q(1));
            }
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g[i][j] == 0) continue;
            add_multiple(j, i, -g[i][j] / g[i][i]);
        }
    }
    Diagonalization d;
    d.basis = p;
    for (std::size_t i = 0; i < n; ++i) d.diagonal.push_back(g[i][i]);
    return d;
}

int hasse_invariant(const std::vector<Q>& diag, const Prime& p) {
    int h = 1;
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) h *= hilbert(diag[i], diag[j], p);
    return h;
}

int hasse_invariant(const RatMatrix& gram, const Prime& p) {
    return hasse_invariant(diagonalize(gram).diagonal, p);
}

int hasse_of_split_extension(const std::vector<Q>& kernel, int n, const Prime& p) {
    Q det = 1;
    for (const auto& e : kernel) det *= e;
    int h = hasse_invariant(kernel, p);
    if (n % 2 == 1) h *= hilbert(det, Q(-1), p);
    if ((n * (n - 1) / 2) % 2 == 1) h *= hilbert(Q(-1), Q(-1), p);
    return h;
}

FormInvariants invariants(const DiagForm& f) {
    FormInvariants inv;
    inv.kind = f.kind;
    inv.rank = f.rank();
    switch (f.kind) {
        case Case::Symplectic:
            throw DomainError("symplectic forms have no invariants beyond rank");
        case Case::Orthogonal: {
            Q det = 1;
            for (const auto& e : f.entries) det *= e;
            inv.disc = reduce(det, f.prime);
            inv.hasse = hasse_invariant(f.entries, f.prime);
            break;
        }
        case Case::Unitary: {
            if (!f.ext) throw DomainError("unitary form without extension");
            Q det = 1;
            for (const auto& e : f.entries) det *= e;
            inv.det_norm_bit = eta(*f.ext, det) == 1 ? 0 : 1;
            break;
        }
    }
    return inv;
}

bool equivalent(const DiagForm& f, const DiagForm& g) {
    if (f.kind != g.kind) throw DomainError("equivalent: forms of different cases");
    if (!(f.prime == g.prime)) throw DomainError("equivalent: forms over different primes");
    if (f.kind == Case::Symplectic) return f.rank() == g.rank();
    if (f.kind == Case::Unitary && !(f.ext->d == g.ext->d))
        throw DomainError("equivalent: forms over different extensions");
    return invariants(f) == invariants(g);
}

int orbit_count(Case kind, int rank, const std::optional<SquareClass>& disc) {
    if (rank < 1) throw DomainError("orbit_count: rank must be positive");
    switch (kind) {
        case Case::Symplectic:
            if (rank % 2 != 0) throw DomainError("orbit_count: symplectic rank must be even");
            return 1;
        case Case::Unitary:
            return 2;
        case Case::Orthogonal: {
            if (!disc) {
                throw DomainError("orbit_count: orthogonal count needs a discriminant class");
            }
            if (rank == 1) return 1;
            if (rank == 2) return *disc == reduce(Q(-1), disc->prime) ? 1 : 2;
            return 2;
        }
    }
    return 0;
}

namespace {

// Whether <x, y> represents the class c.
bool binary_represents(const Q& x, const Q& y, const Q& c, const Prime& p) {
    if (reduce(-x * y, p).is_trivial()) return true;
    return hilbert(x * c, y * c, p) == 1;
}

bool orthogonal_anisotropic(const std::vector<Q>& e, const Prime& p) {
    switch (e.size()) {
        case 0:
        case 1: return true;
        case 2: return !reduce(-e[0] * e[1], p).is_trivial();
        case 3: return hilbert(-e[0] * e[2], -e[1] * e[2], p) == -1;
        case 4:
            for (const auto& c : all_classes(p)) {
                Q cq(c.representative());
                if (binary_represents(e[0], e[1], cq, p) && binary_represents(-e[2], -e[3], cq, p))
                    return false;
            }
            return true;
        default: return false;
    }
}

}  // namespace

bool is_anisotropic(const DiagForm& f) {
    switch (f.kind) {
        case Case::Symplectic: return f.rank() == 0;
        case Case::Orthogonal: return orthogonal_anisotropic(f.entries, f.prime);
        case Case::Unitary:
            if (f.entries.size() <= 1) return true;
            if (f.entries.size() == 2) return eta(*f.ext, -f.entries[0] * f.entries[1]) == -1;
            return false;
    }
    return false;
}

RatMatrix det_image_witness(const RatMatrix& gram, int target) {
    if (target != 1 && target != -1) throw DomainError("det_image_witness: orthogonal target must be +1 or -1");
    const std::size_t n = gram.size();
    if (target == 1 || n == 0) {
        if (target == -1) throw DomainError("det_image_witness: empty form has only determinant 1");
        return identity_matrix(n);
    }
    Diagonalization d = diagonalize(gram);
    std::vector<Q> flip(n, Q(1));
    flip[0] = -1;
    return multiply(d.basis, multiply(diagonal_matrix(flip), inverse(d.basis)));
}

BiquadMatrix det_image_witness(const DiagForm& f, const BiquadElement& target) {
    if (f.kind != Case::Unitary) throw DomainError("det_image_witness: expected a unitary form");
    const BiquadField field = target.field();
    if (target * apply_involution(target, Involution::Tau) != BiquadElement(field, 1))
        throw DomainError("det_image_witness: target is not of norm one");
    BiquadMatrix h = BiquadMatrix::identity(field, f.entries.size());
    if (f.entries.empty()) throw DomainError("det_image_witness: empty form");
    h(0, 0) = target;
    return h;
}

}  // namespace galdist
