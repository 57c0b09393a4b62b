#include "galdist/distinction.hpp"

#include "galdist/forms.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace galdist {

IsoOracle::IsoOracle(int labels) : labels_(labels), parent_(static_cast<std::size_t>(labels) * 8) {
    if (labels < 0) throw InputError("negative label count");
    std::iota(parent_.begin(), parent_.end(), 0);
}

int IsoOracle::node(SymbolicRep r) const {
    if (r.label < 0 || r.label >= labels_) throw InputError("label index out of range: " + std::to_string(r.label));
    return r.label * 8 + static_cast<int>(r.ops & 7u);
}

int IsoOracle::find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) {
        auto& p = parent_[static_cast<std::size_t>(x)];
        p = parent_[static_cast<std::size_t>(p)];
        x = p;
    }
    return x;
}

void IsoOracle::assert_iso(SymbolicRep a, SymbolicRep b) {
    for (unsigned m = 0; m < 8; ++m) {
        int x = find(node({a.label, a.ops ^ m}));
        int y = find(node({b.label, b.ops ^ m}));
        if (x != y) parent_[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    }
}

bool IsoOracle::iso(SymbolicRep a, SymbolicRep b) const { return find(node(a)) == find(node(b)); }

namespace {

constexpr unsigned kConjDual = OpSigma | OpDual;
constexpr unsigned kTauSigma = OpSigma | OpTau;
constexpr unsigned kStar = OpDual | OpTau;

void check_index(int i, int k, const char* what) {
    if (i < 0 || i >= k) throw InputError(std::string(what) + ": index " + std::to_string(i + 1) + " out of range");
}

std::string describe(const SignedPerm& w) {
    std::ostringstream out;
    out << "rho=[";
    for (int i = 0; i < w.k(); ++i) out << (i ? "," : "") << w.rho[static_cast<std::size_t>(i)] + 1;
    out << "] c={";
    bool first = true;
    for (int i = 0; i < w.k(); ++i) {
        if (!w.c[static_cast<std::size_t>(i)]) continue;
        out << (first ? "" : ",") << i + 1;
        first = false;
    }
    out << "}";
    return out.str();
}

}  // namespace

void validate_datum(const CuspidalDatum& data, const Composition& comp) {
    const int k = comp.k();
    if (static_cast<int>(data.labels.size()) != k)
        throw InputError("expected " + std::to_string(k) + " labels, got " + std::to_string(data.labels.size()));
    auto check_pair = [&](const std::pair<int, int>& rel, const char* what) {
        check_index(rel.first, k, what);
        check_index(rel.second, k, what);
        if (comp.parts[static_cast<std::size_t>(rel.first)] != comp.parts[static_cast<std::size_t>(rel.second)])
            throw DomainError(std::string(what) + " relates blocks of different sizes");
    };
    for (const auto& rel : data.conj_dual) check_pair(rel, "conj_dual");
    for (const auto& rel : data.sigma_tau) check_pair(rel, "sigma_tau");
    for (int i : data.linear_dist) check_index(i, k, "linear_dist");
    for (const auto& [i, bits] : data.unitary_dist) {
        check_index(i, k, "unitary_dist");
        for (int b : bits)
            if (b != 0 && b != 1) throw InputError("unitary_dist bits must be 0 or 1");
    }
}

IsoOracle build_oracle(const CuspidalDatum& data) {
    IsoOracle oracle(static_cast<int>(data.labels.size()));
    for (const auto& [i, j] : data.conj_dual) oracle.assert_iso({j, 0}, {i, kConjDual});
    for (const auto& [i, j] : data.sigma_tau) oracle.assert_iso({j, 0}, {i, kTauSigma});
    for (int i : data.linear_dist) oracle.assert_iso({i, 0}, {i, kConjDual});
    for (const auto& [i, bits] : data.unitary_dist)
        if (!bits.empty()) oracle.assert_iso({i, 0}, {i, kTauSigma});
    return oracle;
}

ParityMap gamma_parity_map(const ClassicalPair& pair) {
    if (pair.kind() != Case::Unitary) throw DomainError("gamma_parity_map: unitary case only");
    auto contribution = [&](int bit) {
        const BiquadElement d = y_representative(pair, 1, bit).det();
        return gamma_bit(apply_involution(d, Involution::Tau) / d, pair.prime());
    };
    if (contribution(0) != 0) throw DomainError("gamma_parity_map: trivial form has a nontrivial contribution");
    return contribution(1) ? ParityMap::Iso : ParityMap::Trivial;
}

std::vector<XOrbitInvariant> z_candidates(const Composition& comp, const SignedPerm& w, const ClassicalPair& pair) {
    static std::mutex guard;
    static std::vector<std::pair<std::pair<ClassicalPair, Component>, std::vector<XOrbitInvariant>>> cache;
    const ClassicalPair pair_r = pair.with_n(comp.r);
    const Component component = z_component(comp, w, pair);
    {
        std::lock_guard<std::mutex> lock(guard);
        for (const auto& [key, value] : cache)
            if (key.first == pair_r && key.second == component) return value;
    }
    std::vector<XOrbitInvariant> out;
    for (const auto& rep : realize_orbits(pair_r, component)) out.push_back(rep.invariant);
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(guard);
    cache.push_back({{pair_r, component}, out});
    return out;
}

namespace {

Q fixed_form_product(const Composition& comp, const SignedPerm& w, const std::map<int, int>& y_bits,
                     const ClassicalPair& pair) {
    Q prod = 1;
    for (int i : fixed_signed(w)) {
        const BiquadElement d = y_representative(pair, comp.parts[static_cast<std::size_t>(i)], y_bits.at(i)).det();
        if (!d.is_rational()) throw DomainError("hermitian determinant is not rational");
        prod *= d.coeff(0);
    }
    return prod;
}

// The element whose norm class decides the orthogonal condition.
Q orthogonal_norm_test_value(const Composition& comp, const SignedPerm& w, const std::map<int, int>& y_bits,
                             const ClassicalPair& pair) {
    const int o = odd_count(w, comp);
    const int nw = fixed_signed_size(w, comp);
    const Q det_kernel = pair.n0() == 0 ? Q(1) : pair.kernel_det();
    Q value = ((comp.r * o + nw * (nw - 1) / 2) % 2 == 0) ? Q(1) : Q(-1);
    for (int i = 0; i < o; ++i) value *= 2 * det_kernel;
    return value * fixed_form_product(comp, w, y_bits, pair);
}

int z_hasse_ratio(const Composition& comp, const XOrbitInvariant& z, const ClassicalPair& pair) {
    if (pair.n0() + 2 * comp.r == 0) return 1;
    return z.hasse * hasse_of_split_extension(pair.kernel(), comp.r, pair.prime());
}

}  // namespace

XOrbitInvariant arithmetic_orbit(const Composition& comp, const SignedPerm& w, const std::map<int, int>& y_bits,
                                 const XOrbitInvariant& z, const ClassicalPair& pair, ParityMap parity) {
    XOrbitInvariant out;
    out.kind = pair.kind();
    switch (pair.kind()) {
        case Case::Symplectic: break;
        case Case::Unitary: {
            int bit = 0;
            if (odd_count(w, comp) % 2 == 1) bit ^= gamma_bit(BiquadElement(pair.model(), -1), pair.prime());
            if (parity == ParityMap::Iso)
                for (int i : fixed_signed(w)) bit ^= y_bits.at(i);
            if (pair.n0() + 2 * comp.r > 0) bit ^= z.gamma_bit;
            out.gamma_bit = bit;
            break;
        }
        case Case::Orthogonal: {
            const Q value = orthogonal_norm_test_value(comp, w, y_bits, pair);
            out.special = true;
            out.partial = reduce(determinant(pair.gram_rational()), pair.prime());
            out.hasse = hasse_of_split_extension(pair.kernel(), pair.n(), pair.prime()) *
                        eta(pair.ext_E(), value) * z_hasse_ratio(comp, z, pair);
            break;
        }
    }
    return out;
}

namespace {

bool arithmetic_condition(const Composition& comp, const SignedPerm& w, const std::map<int, int>& y_bits,
                          const XOrbitInvariant& z, const XOrbitInvariant& target, const ClassicalPair& pair,
                          ParityMap parity) {
    switch (pair.kind()) {
        case Case::Symplectic: return true;
        case Case::Unitary: return arithmetic_orbit(comp, w, y_bits, z, pair, parity).gamma_bit == target.gamma_bit;
        case Case::Orthogonal: {
            const bool norm = eta(pair.ext_E(), orthogonal_norm_test_value(comp, w, y_bits, pair)) == 1;
            const int ratio_x = target.hasse * hasse_of_split_extension(pair.kernel(), pair.n(), pair.prime());
            return norm == (z_hasse_ratio(comp, z, pair) == ratio_x);
        }
    }
    return false;
}

void validate_target(const XOrbitInvariant& target, const ClassicalPair& pair) {
    if (target.kind != pair.kind()) throw DomainError("target orbit is for a different case");
    switch (pair.kind()) {
        case Case::Symplectic: return;
        case Case::Unitary:
            if (target.gamma_bit != 0 && target.gamma_bit != 1) throw InputError("gamma bit must be 0 or 1");
            if (target.gamma_bit == 1 && pair.size() == 0) throw DomainError("target orbit is not realizable");
            return;
        case Case::Orthogonal: {
            const SquareClass det_class = reduce(determinant(pair.gram_rational()), pair.prime());
            if (!target.special || !target.partial || !(*target.partial == det_class))
                throw DomainError("target orbit does not meet the identity component");
            const int base = hasse_of_split_extension(pair.kernel(), pair.n(), pair.prime());
            if (target.hasse != base && orbit_count_X(pair, Component::SX) < 2)
                throw DomainError("target orbit is not realizable");
            return;
        }
    }
}

// Lexicographic odometer; false once every combination has been visited.
bool advance(std::vector<std::size_t>& pos, const std::vector<std::vector<int>>& choices) {
    for (std::size_t q = pos.size(); q-- > 0;) {
        if (++pos[q] < choices[q].size()) return true;
        pos[q] = 0;
    }
    return false;
}

// First failing row for the candidate, or empty.
std::string row_failure(const SignedPerm& w, const CuspidalDatum& data, const IsoOracle& oracle) {
    for (int i = 0; i < w.k(); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const int j = w.rho[ui];
        const bool in_c = w.c[ui];
        const std::string at = " at i=" + std::to_string(i + 1);
        if (!in_c && j != i && !oracle.iso({j, 0}, {i, kConjDual}))
            return "pi_rho(i) is not the conjugate contragredient of pi_i" + at;
        if (!in_c && j == i && !data.linear_dist.count(i)) return "pi_i is not GL(F')-distinguished" + at;
        if (in_c && j != i && !oracle.iso({j, 0}, {i, kTauSigma}))
            return "pi_rho(i) is not the tau-sigma twist of pi_i" + at;
        if (in_c && j == i) {
            auto it = data.unitary_dist.find(i);
            if (it == data.unitary_dist.end() || it->second.empty()) return "pi_i is not unitary-distinguished" + at;
        }
    }
    return {};
}

}  // namespace

Verdict decide(const ClassicalPair& pair, const Composition& comp, const CuspidalDatum& data,
               const XOrbitInvariant& target, const DecideOptions& options) {
    validate_composition(comp, pair);
    validate_datum(data, comp);
    validate_target(target, pair);
    const ParityMap parity =
        options.parity ? *options.parity : (pair.kind() == Case::Unitary ? gamma_parity_map(pair) : ParityMap::Trivial);
    const IsoOracle oracle = build_oracle(data);
    const bool trivial_z = pair.n0() + 2 * comp.r == 0;

    Verdict verdict;
    for (const auto& w : involutions_for(comp, pair)) {
        const std::string name = describe(w);
        if (std::string why = row_failure(w, data, oracle); !why.empty()) {
            verdict.failure_log.push_back(name + ": " + why);
            continue;
        }
        std::vector<XOrbitInvariant> zs;
        for (const auto& z : z_candidates(comp, w, pair)) {
            const bool flagged = std::find(data.pi0_dist.begin(), data.pi0_dist.end(), z) != data.pi0_dist.end();
            if (trivial_z || flagged) zs.push_back(z);
        }
        if (zs.empty()) {
            verdict.failure_log.push_back(name + ": pi_0 is not distinguished by any admissible z orbit");
            continue;
        }
        const auto fixed = fixed_signed(w);
        std::vector<std::vector<int>> choices;
        for (int i : fixed) {
            const auto& bits = data.unitary_dist.at(i);
            choices.emplace_back(bits.begin(), bits.end());
        }
        std::vector<std::size_t> pos(fixed.size(), 0);
        bool found = false;
        for (;;) {
            std::map<int, int> y_bits;
            for (std::size_t q = 0; q < fixed.size(); ++q) y_bits[fixed[q]] = choices[q][pos[q]];
            for (const auto& z : zs) {
                if (arithmetic_condition(comp, w, y_bits, z, target, pair, parity)) {
                    verdict.distinguished = true;
                    verdict.witness = Witness{w, y_bits, z};
                    found = true;
                    break;
                }
            }
            if (found || !advance(pos, choices)) break;
        }
        if (found) return verdict;
        verdict.failure_log.push_back(name + ": arithmetic condition fails for every y and z choice");
    }
    return verdict;
}

bool necessary_condition(const CuspidalDatum& data, const SignedPerm& w) {
    const IsoOracle oracle = build_oracle(data);
    const SignedPerm inv = w.inverse();
    for (int i = 0; i < w.k(); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const int src = inv.rho[ui];
        const SymbolicRep image{src, w.c[ui] ? kStar : 0u};
        if (!oracle.iso(image, {i, kConjDual})) return false;
    }
    return true;
}

GLProductResult gl_product_check(const GLProductDatum& datum, GLCharacter chi) {
    const int total = static_cast<int>(datum.blocks.size());
    const int middle = datum.has_middle ? 1 : 0;
    if ((total - middle) % 2 != 0 || total < middle) throw InputError("malformed palindrome: wrong number of blocks");
    const int k = (total - middle) / 2;
    IsoOracle oracle(static_cast<int>(datum.labels.size()));
    for (const auto& [a, b] : datum.isomorphisms) oracle.assert_iso(a, b);
    for (int i = 0; i < k; ++i) {
        const GLBlock& head = datum.blocks[static_cast<std::size_t>(i)];
        const GLBlock& tail = datum.blocks[static_cast<std::size_t>(total - 1 - i)];
        if (head.size != tail.size || !oracle.iso(tail.rep, {head.rep.label, head.rep.ops ^ kStar}))
            throw InputError("malformed palindrome at block " + std::to_string(i + 1));
    }

    auto flagged = [&](const GLBlock& b) {
        for (const auto& [rep, c] : datum.distinguished)
            if (c == chi && oracle.iso(rep, b.rep)) return true;
        return false;
    };
    auto open_pair = [&](const GLBlock& a, const GLBlock& b) {
        return a.size == b.size && oracle.iso(b.rep, {a.rep.label, a.rep.ops ^ kConjDual});
    };

    std::vector<bool> used(static_cast<std::size_t>(total), false);
    std::vector<GLUnit> units;
    std::function<bool()> search = [&]() -> bool {
        int first = -1;
        for (int i = 0; i < total; ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                first = i;
                break;
            }
        if (first < 0) return true;
        const auto uf = static_cast<std::size_t>(first);
        used[uf] = true;
        if (flagged(datum.blocks[uf])) {
            units.push_back({"closed", {first}});
            if (search()) return true;
            units.pop_back();
        }
        for (int j = first + 1; j < total; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            if (used[uj]) continue;
            if (!open_pair(datum.blocks[uf], datum.blocks[uj]) && !open_pair(datum.blocks[uj], datum.blocks[uf])) continue;
            used[uj] = true;
            units.push_back({"open", {first, j}});
            if (search()) return true;
            units.pop_back();
            used[uj] = false;
        }
        used[uf] = false;
        return false;
    };

    GLProductResult out;
    if (search()) {
        out.distinguished = true;
        out.decomposition = units;
    }
    return out;
}

}  // namespace galdist
