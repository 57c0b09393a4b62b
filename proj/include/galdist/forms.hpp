#ifndef GALDIST_FORMS_HPP
#define GALDIST_FORMS_HPP

#include "galdist/case.hpp"
#include "galdist/localfield.hpp"
#include "galdist/numfield.hpp"
#include "galdist/ratmatrix.hpp"

#include <optional>
#include <vector>

namespace galdist {

// A diagonal epsilon-hermitian form over a p-adic field.  Unitary entries
// are base-field values of a hermitian diagonal; the extension is then
// required.  Symplectic forms carry only their rank.
struct DiagForm {
    Case kind = Case::Orthogonal;
    std::vector<Q> entries;
    Prime prime{3};
    std::optional<QuadExtension> ext;
    int symplectic_rank = 0;

    int rank() const { return kind == Case::Symplectic ? symplectic_rank : static_cast<int>(entries.size()); }
};

DiagForm orthogonal_form(std::vector<Q> entries, const Prime& p);
DiagForm unitary_form(std::vector<Q> entries, const QuadExtension& ext);
DiagForm symplectic_form(int rank, const Prime& p);

struct FormInvariants {
    Case kind = Case::Orthogonal;
    int rank = 0;
    std::optional<SquareClass> disc;  // orthogonal only
    int hasse = 1;                    // orthogonal only
    int det_norm_bit = 0;             // unitary only: 1 when det is not a norm

    bool operator==(const FormInvariants& o) const;
    bool operator!=(const FormInvariants& o) const { return !(*this == o); }
};

struct Diagonalization {
    std::vector<Q> diagonal;
    RatMatrix basis;  // diag(diagonal) = {}^t basis * gram * basis
};

Diagonalization diagonalize(const RatMatrix& gram);

FormInvariants invariants(const DiagForm& f);
bool equivalent(const DiagForm& f, const DiagForm& g);

// Product of Hilbert symbols over pairs i < j.
int hasse_invariant(const std::vector<Q>& diag, const Prime& p);
int hasse_invariant(const RatMatrix& gram, const Prime& p);

// Hasse invariant of the split extension of an anisotropic kernel by n
// hyperbolic planes, from the closed formula in terms of the kernel.
int hasse_of_split_extension(const std::vector<Q>& kernel, int n, const Prime& p);

// Number of GL_n(K)-orbits of forms of the given rank, restricted to a
// discriminant class in the orthogonal case when one is supplied.
int orbit_count(Case kind, int rank, const std::optional<SquareClass>& disc = std::nullopt);

bool is_anisotropic(const DiagForm& f);

// An isometry of the rational form with determinant target (target = +1 or
// -1); for target -1 the result is an involution.
RatMatrix det_image_witness(const RatMatrix& gram, int target);
// Unitary diagonal form over the model: diag(target, 1, ..., 1), which
// needs target * tau(target) = 1.
BiquadMatrix det_image_witness(const DiagForm& f, const BiquadElement& target);

}  // namespace galdist

#endif
