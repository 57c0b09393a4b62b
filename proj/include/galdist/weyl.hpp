#ifndef GALDIST_WEYL_HPP
#define GALDIST_WEYL_HPP

#include "galdist/symspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace galdist {

struct Composition {
    std::vector<int> parts;
    int r = 0;
    // Selects the kappa-conjugated parabolic in the split even orthogonal
    // case with r = 0 and last part different from 1.
    int split_even_sign = 1;

    int k() const { return static_cast<int>(parts.size()); }
    int total() const;
    bool operator==(const Composition& o) const = default;
};

// Throws DomainError unless the composition indexes a standard parabolic
// subgroup of the connected group attached to the pair.
void validate_composition(const Composition& comp, const ClassicalPair& pair);

// rho sends i to rho[i] (0-based); c[i] marks membership of i in the subset.
struct SignedPerm {
    std::vector<int> rho;
    std::vector<bool> c;

    static SignedPerm identity(int k);
    int k() const { return static_cast<int>(rho.size()); }
    SignedPerm operator*(const SignedPerm& o) const;
    SignedPerm inverse() const;
    bool is_involution() const;
    bool operator==(const SignedPerm& o) const = default;
    bool operator<(const SignedPerm& o) const;  // (|c|, rho, c) order
};

std::vector<SignedPerm> all_signed_perms(int k);

// I(w), the fixed points of rho inside c.
std::vector<int> fixed_signed(const SignedPerm& w);
// o(c): members of c whose part is odd.
int odd_count(const SignedPerm& w, const Composition& comp);
// N(w): sum of the parts over I(w).
int fixed_signed_size(const SignedPerm& w, const Composition& comp);

bool compatible(const SignedPerm& w, const Composition& comp);

// Involutions with n_{rho(i)} = n_i; with parity_filter only those with
// o(c) even.  Sorted by (|c|, rho, c).
std::vector<SignedPerm> enumerate_involutions(const Composition& comp, bool parity_filter);
// The set relevant for the pair: the parity filter applies exactly in the
// split even orthogonal case with r = 0.
std::vector<SignedPerm> involutions_for(const Composition& comp, const ClassicalPair& pair);

// Block embedding iota(g_1, ..., g_k; h) into G_n and the involution
// g* = w {}^t g^{-tau} w.
BiquadMatrix dual_block(const BiquadMatrix& g);
BiquadMatrix embed_levi(const std::vector<BiquadMatrix>& blocks, const BiquadMatrix& h);
// The involution eta_{m,M} of G_m used in the representatives.
BiquadMatrix eta_matrix(const ClassicalPair& pair, const Composition& comp, int m);
// kappa = iota(I_{n-1}; w_2), split even orthogonal only.
BiquadMatrix kappa_matrix(const ClassicalPair& pair);

BiquadMatrix build_tw(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair);

// Hermitian forms for E'/(E')^{sigma tau} with the sign of the pair.
BiquadMatrix y_representative(const ClassicalPair& pair, int size, int bit);
int y_bit(const ClassicalPair& pair, const BiquadMatrix& y);

struct XwResult {
    BiquadMatrix x;
    BiquadMatrix z;                 // the X_r component that was used
    XOrbitInvariant predicted;      // G-orbit invariant of x from the closed conditions
};

// Component of X_r meeting eta_r^{o(c)} G_r^circ.
Component z_component(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair);

XwResult build_xw(const Composition& comp, const SignedPerm& w, const std::map<int, int>& y_bits,
                  const XRepresentative& z, const ClassicalPair& pair);

// Recovers the M-orbit data (y bits, z invariant) of x_w from the matrix.
struct MOrbitData {
    std::map<int, int> y_bits;
    XOrbitInvariant z_invariant;
    bool operator<(const MOrbitData& o) const;
    bool operator==(const MOrbitData& o) const;
};
MOrbitData recover_m_orbit_data(const BiquadMatrix& xw, const Composition& comp, const SignedPerm& w,
                                const ClassicalPair& pair);

int admissible_delta(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair);
int admissible_orbit_count(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair);

struct StabilizerFactor {
    std::string kind;  // "GL_E'", "GL_F'", "U", "fixed"
    std::vector<int> indices;
    int size = 0;
    int orbit_bit = 0;               // for "U"
    std::optional<XOrbitInvariant> z_invariant;  // for "fixed"
};

std::vector<StabilizerFactor> stabilizer_shape(const Composition& comp, const SignedPerm& w,
                                               const std::map<int, int>& y_bits,
                                               const std::optional<XOrbitInvariant>& z_inv);

}  // namespace galdist

#endif
