#ifndef GALDIST_PRASAD_HPP
#define GALDIST_PRASAD_HPP

#include "galdist/forms.hpp"
#include "galdist/numfield.hpp"
#include "galdist/ratmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galdist {

enum class GroupFamily { GL, U, Sp, SO };

std::string family_name(GroupFamily f);
GroupFamily parse_family(const std::string& s);

// A quasi-split group over Q_p.  For U the splitting field K = Q(sqrt d) is
// given by a squarefree d; for SO the anisotropic kernel is stored.
struct GroupDescriptor {
    GroupFamily family = GroupFamily::GL;
    int m = 1;
    Prime prime{3};
    std::optional<std::int64_t> unitary_d;
    std::vector<Q> so_kernel;

    bool operator==(const GroupDescriptor& o) const;
};

// Throws DomainError when the descriptor is not quasi-split or malformed.
void validate_descriptor(const GroupDescriptor& y);

// Default SO kernel: empty for even m, {1} for odd m.
GroupDescriptor make_descriptor(GroupFamily family, int m, const Prime& p,
                                std::optional<std::int64_t> unitary_d = std::nullopt,
                                std::optional<std::vector<Q>> so_kernel = std::nullopt);

// Gram matrix of the defining form: split hyperbolic part around the kernel.
RatMatrix so_gram(const GroupDescriptor& y);

struct CharacterFormula {
    std::string kind;          // "trivial", "eta_det", "eta_sn", "eta_wsn"
    int exponent = 0;          // as derived, before reduction
    int reduced_exponent = 0;  // exponent mod 2
    std::string extension;     // "E/F" or "EK/K"
    bool is_trivial() const { return kind == "trivial" || reduced_exponent == 0; }
};

CharacterFormula prasad_character(const GroupDescriptor& y, const QuadExtension& e);

GroupDescriptor opposition_group(const GroupDescriptor& y, const QuadExtension& e);

struct ReflectionDecomposition {
    std::vector<std::vector<Q>> vectors;  // g = s_{v_1} ... s_{v_k}
    Q norm_product = 1;                   // q(v_1) ... q(v_k)
};

RatMatrix reflection_matrix(const RatMatrix& gram, const std::vector<Q>& v);

// Throws DomainError unless g preserves gram and has determinant one.
ReflectionDecomposition cartan_dieudonne(const RatMatrix& g, const RatMatrix& gram);
SquareClass spinor_norm(const RatMatrix& g, const RatMatrix& gram, const Prime& p);

// Quasi-split unitary group of the antidiagonal form over Q(sqrt d).
BiquadMatrix unitary_antidiagonal(const BiquadField& k, int m);
// Class in K^* / F^*, normalized to 1 or to t + sqrt d.
BiquadElement wsn(const BiquadMatrix& g);

// Value of the character on a group element.  GL and SO elements are
// rational matrices; U elements are matrices over Q(sqrt d); Sp elements
// only need their size.
int evaluate_character(const CharacterFormula& chi, const GroupDescriptor& y, const QuadExtension& e,
                       const RatMatrix& rational_element);
int evaluate_character(const CharacterFormula& chi, const GroupDescriptor& y, const QuadExtension& e,
                       const BiquadMatrix& unitary_element);

}  // namespace galdist

#endif
