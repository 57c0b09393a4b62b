#ifndef GALDIST_DISTINCTION_HPP
#define GALDIST_DISTINCTION_HPP

#include "galdist/weyl.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace galdist {

// Operations on representations of GL(E'), as bits of a mask.  The group
// they generate is (Z/2)^3, so a representation up to these twists is a
// (label, mask) pair.
enum RepOp : unsigned { OpSigma = 1u, OpTau = 2u, OpDual = 4u };

struct SymbolicRep {
    int label = 0;
    unsigned ops = 0;
    bool operator==(const SymbolicRep& o) const = default;
};

// Isomorphism classes of twisted labels, closed under applying any twist to
// both sides of an asserted isomorphism.
class IsoOracle {
public:
    explicit IsoOracle(int labels);
    void assert_iso(SymbolicRep a, SymbolicRep b);
    bool iso(SymbolicRep a, SymbolicRep b) const;
    int labels() const { return labels_; }

private:
    int node(SymbolicRep r) const;
    int find(int x) const;
    int labels_;
    mutable std::vector<int> parent_;
};

struct CuspidalDatum {
    std::vector<std::string> labels;
    // (i, j): pi_j is isomorphic to the conjugate contragredient of pi_i.
    std::vector<std::pair<int, int>> conj_dual;
    // (i, j): pi_j is isomorphic to pi_i twisted by tau sigma.
    std::vector<std::pair<int, int>> sigma_tau;
    std::set<int> linear_dist;
    std::map<int, std::set<int>> unitary_dist;
    std::vector<XOrbitInvariant> pi0_dist;
};

// Throws InputError for out-of-range indices and DomainError for relations
// between blocks of different sizes.
void validate_datum(const CuspidalDatum& data, const Composition& comp);

// Asserted relations plus the standard consequences of the flags.
IsoOracle build_oracle(const CuspidalDatum& data);

enum class ParityMap { Iso, Trivial };

// Contribution of a hermitian y-orbit bit to the Gamma class of det x,
// computed from the representatives.
ParityMap gamma_parity_map(const ClassicalPair& pair);

struct Witness {
    SignedPerm w;
    std::map<int, int> y_bits;
    XOrbitInvariant z_orbit;
};

struct Verdict {
    bool distinguished = false;
    std::optional<Witness> witness;
    std::vector<std::string> failure_log;
};

struct DecideOptions {
    std::optional<ParityMap> parity;
};

// Orbits of X_r available for the z component of a candidate.
std::vector<XOrbitInvariant> z_candidates(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair);

// Orbit of x_w predicted by the arithmetic conditions.
XOrbitInvariant arithmetic_orbit(const Composition& comp, const SignedPerm& w, const std::map<int, int>& y_bits,
                                 const XOrbitInvariant& z, const ClassicalPair& pair, ParityMap parity);

Verdict decide(const ClassicalPair& pair, const Composition& comp, const CuspidalDatum& data,
               const XOrbitInvariant& target, const DecideOptions& options = {});

bool necessary_condition(const CuspidalDatum& data, const SignedPerm& w);

// Lemma-style product check for GL_N(E').
enum class GLCharacter { Trivial, Eta };

struct GLBlock {
    SymbolicRep rep;
    int size = 0;
};

struct GLProductDatum {
    std::vector<std::string> labels;
    std::vector<GLBlock> blocks;  // pi_1 .. pi_k, optional Pi_0, then the mirrored tail
    bool has_middle = false;
    std::vector<std::pair<SymbolicRep, SymbolicRep>> isomorphisms;
    // Blocks (by label and twist) distinguished for the given character.
    std::vector<std::pair<SymbolicRep, GLCharacter>> distinguished;
};

struct GLUnit {
    std::string kind;  // "closed" or "open"
    std::vector<int> blocks;
};

struct GLProductResult {
    bool distinguished = false;
    std::vector<GLUnit> decomposition;
};

GLProductResult gl_product_check(const GLProductDatum& datum, GLCharacter chi);

}  // namespace galdist

#endif
