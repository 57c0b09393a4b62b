#ifndef GALDIST_SYMSPACE_HPP
#define GALDIST_SYMSPACE_HPP

#include "galdist/forms.hpp"
#include "galdist/localfield.hpp"
#include "galdist/numfield.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace galdist {

// A classical Galois pair: the split form j[n] built from an anisotropic
// diagonal kernel, together with an explicit global model of E'/F.  In the
// symplectic and orthogonal cases the model is Q(sqrt a) with tau trivial;
// in the unitary case it is Q(sqrt a, sqrt b) with F' = Q(sqrt b).
class ClassicalPair {
public:
    static ClassicalPair make(Case kind, const BiquadField& model, const Prime& p,
                              std::vector<Q> kernel, int n);

    Case kind() const { return kind_; }
    const BiquadField& model() const { return model_; }
    const Prime& prime() const { return prime_; }
    const std::vector<Q>& kernel() const { return kernel_; }
    int n() const { return n_; }
    int n0() const { return static_cast<int>(kernel_.size()); }
    int size() const { return n0() + 2 * n_; }
    bool split_even() const { return kind_ == Case::Orthogonal && kernel_.empty(); }

    // Same kernel and model, Witt index increment m.
    ClassicalPair with_n(int m) const;

    RatMatrix gram_rational() const;
    BiquadMatrix gram() const;
    Q kernel_det() const;

    QuadExtension ext_E() const;                 // E/F, d = a
    std::optional<QuadExtension> ext_Fprime() const;  // F'/F, d = b (unitary)

    bool operator==(const ClassicalPair& o) const;

private:
    Case kind_ = Case::Orthogonal;
    BiquadField model_{};
    Prime prime_{3};
    std::vector<Q> kernel_;
    int n_ = 0;
};

// Checks that a, b, ab are non-squares at p (only a in the quadratic case).
bool model_is_klein_at(const BiquadField& model, const Prime& p);

enum class Component { Full, SX, Complement };

struct XOrbitInvariant {
    Case kind = Case::Symplectic;
    int gamma_bit = 0;                // unitary
    bool special = true;              // orthogonal: det x = 1
    std::optional<SquareClass> partial;  // orthogonal
    int hasse = 1;                    // orthogonal

    bool operator==(const XOrbitInvariant& o) const;
    bool operator!=(const XOrbitInvariant& o) const { return !(*this == o); }
    bool operator<(const XOrbitInvariant& o) const;
};

// Invariant of the orbit of x = z sigma(z)^{-1}, read off y = {}^t z^tau j z.
XOrbitInvariant classify_x(const BiquadMatrix& x, const BiquadMatrix& z, const ClassicalPair& pair);

int orbit_count_X(const ClassicalPair& pair, Component component = Component::Full);

bool same_G0_orbit(const XOrbitInvariant& a, const XOrbitInvariant& b);

// Gamma-class bit of an element of (E'/E)_1 meet (E'/F')_1.
int gamma_bit(const BiquadElement& x, const Prime& p);

struct GammaIndexData {
    int quotient_size = 2;
    int identity_bit = 0;
    int minus_one_bit = 0;         // closed form
    int minus_one_oracle_bit = 0;  // brute-force Hensel oracle on (a, b)
    bool minus_one_in_box = false; // -1 attained exactly as c^{(1-sigma)(1-tau)} in the box
    int box_samples = 0;
    int box_violations = 0;        // box elements whose closed-form bit is 1
};

GammaIndexData gamma_index_data(const ClassicalPair& pair, int box_height = 2);

// Matrix Hilbert 90: z with x = z sigma(z)^{-1}, for x sigma(x) = I.
BiquadMatrix hilbert90_matrix(const BiquadMatrix& x, std::uint64_t seed = 1);

struct XRepresentative {
    BiquadMatrix x;
    BiquadMatrix z;
    XOrbitInvariant invariant;
};

// One representative per orbit found in the component, built from a
// catalogue of twists of a rational diagonalization of j[n].
std::vector<XRepresentative> realize_orbits(const ClassicalPair& pair, Component component = Component::Full);

}  // namespace galdist

#endif
