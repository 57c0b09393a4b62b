#include "galdist/localfield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace galdist {

Prime::Prime(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
}

std::int64_t smallest_nonresidue(const Prime& p) {
    if (p.value() == 2) throw DomainError("no residue symbol at 2");
    for (std::int64_t u = 2;; ++u) {
        Z uu(static_cast<long>(u));
        Z pp(static_cast<long>(p.value()));
        if (mpz_legendre(uu.get_mpz_t(), pp.get_mpz_t()) == -1) return u;
    }
}

SquareClass::SquareClass(Prime p, int v, std::int64_t u) : prime(p), val(v & 1), unit(u) {
    if (p.value() == 2) {
        if (u != 1 && u != 3 && u != 5 && u != 7)
            throw DomainError("unit label at 2 must be 1, 3, 5 or 7");
    } else if (u != 1 && u != smallest_nonresidue(p)) {
        throw DomainError("unit label must be 1 or the least non-residue");
    }
}

Z SquareClass::representative() const {
    Z r(static_cast<long>(unit));
    if (val) r *= static_cast<long>(prime.value());
    return r;
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (!(prime == o.prime)) throw DomainError("square classes over different primes");
    return reduce(Q(representative() * o.representative()), prime);
}

bool SquareClass::operator==(const SquareClass& o) const {
    return prime == o.prime && val == o.val && unit == o.unit;
}

bool SquareClass::operator<(const SquareClass& o) const {
    return std::make_tuple(prime.value(), val, unit) <
           std::make_tuple(o.prime.value(), o.val, o.unit);
}

SquareClass reduce(const Q& x, const Prime& p) {
    if (x == 0) throw DomainError("reduce: zero has no square class");
    const std::int64_t pv = p.value();
    int v = valuation(x, pv);
    Z u = strip(x.get_num(), pv) * strip(x.get_den(), pv);
    if (pv == 2) {
        Z r;
        mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
        return SquareClass(p, v, r.get_si());
    }
    Z pp(static_cast<long>(pv));
    int leg = mpz_legendre(u.get_mpz_t(), pp.get_mpz_t());
    return SquareClass(p, v, leg == 1 ? 1 : smallest_nonresidue(p));
}

SquareClass trivial_class(const Prime& p) { return SquareClass(p, 0, 1); }

std::vector<SquareClass> all_classes(const Prime& p) {
    std::vector<SquareClass> out;
    if (p.value() == 2) {
        for (int v = 0; v < 2; ++v)
            for (std::int64_t u : {1, 3, 5, 7}) out.emplace_back(p, v, u);
    } else {
        std::int64_t n = smallest_nonresidue(p);
        for (int v = 0; v < 2; ++v)
            for (std::int64_t u : {std::int64_t{1}, n}) out.emplace_back(p, v, u);
    }
    return out;
}

namespace {

int parity_eps(std::int64_t u) { return static_cast<int>(((u - 1) / 2) & 1); }
int parity_omega(std::int64_t u) { return static_cast<int>(((u * u - 1) / 8) & 1); }

}  // namespace

int hilbert(const SquareClass& a, const SquareClass& b) {
    if (!(a.prime == b.prime)) throw DomainError("hilbert: mismatched primes");
    const std::int64_t p = a.prime.value();
    const int alpha = a.val, beta = b.val;
    if (p == 2) {
        int e = parity_eps(a.unit) * parity_eps(b.unit) + alpha * parity_omega(b.unit) +
                beta * parity_omega(a.unit);
        return (e & 1) ? -1 : 1;
    }
    int sign = 1;
    if (alpha && beta && (((p - 1) / 2) & 1)) sign = -sign;
    const int leg_a = a.unit == 1 ? 1 : -1;
    const int leg_b = b.unit == 1 ? 1 : -1;
    if (beta && leg_a == -1) sign = -sign;
    if (alpha && leg_b == -1) sign = -sign;
    return sign;
}

int hilbert(const Q& a, const Q& b, const Prime& p) { return hilbert(reduce(a, p), reduce(b, p)); }

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

const std::vector<bool>& square_table(std::int64_t modulus) {
    static std::mutex guard;
    static std::map<std::int64_t, std::vector<bool>> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(modulus);
    if (it != cache.end()) return it->second;
    std::vector<bool> t(static_cast<std::size_t>(modulus), false);
    for (std::int64_t z = 0; z < modulus; ++z) t[static_cast<std::size_t>(z * z % modulus)] = true;
    return cache.emplace(modulus, std::move(t)).first->second;
}

}  // namespace

int hilbert_oracle(std::int64_t a, std::int64_t b, const Prime& p) {
    if (a == 0 || b == 0) throw DomainError("hilbert_oracle: zero argument");
    const std::int64_t pv = p.value();
    Z prod = Z(4) * Z(static_cast<long>(a)) * Z(static_cast<long>(b));
    const int m = 2 * valuation(prod, pv) + 3;
    double size = 1;
    for (int i = 0; i < m; ++i) size *= static_cast<double>(pv);
    if (size > 5e7) throw DomainError("hilbert_oracle: search modulus too large");
    const std::int64_t M = ipow(pv, m);
    const auto& squares = square_table(M);
    const std::int64_t am = mod(a, M), bm = mod(b, M);
    // Primitive solutions have x or y a unit; scale that coordinate to 1.
    for (std::int64_t y = 0; y < M; ++y) {
        std::int64_t rhs = (am + bm * (y * y % M)) % M;
        if (squares[static_cast<std::size_t>(rhs)]) return 1;
    }
    for (std::int64_t x = 0; x < M; x += pv) {
        std::int64_t rhs = (am * (x * x % M) + bm) % M;
        if (squares[static_cast<std::size_t>(rhs)]) return 1;
    }
    return -1;
}

QuadExtension::QuadExtension(SquareClass dd) : base(dd.prime), d(dd) {
    if (d.is_trivial()) throw DomainError("quadratic extension needs a non-square");
}

int eta(const QuadExtension& e, const SquareClass& a) { return hilbert(a, e.d); }
int eta(const QuadExtension& e, const Q& a) { return hilbert(reduce(a, e.base), e.d); }

KleinExtension::KleinExtension(SquareClass a, SquareClass b) : base(a.prime), d1(a), d2(b) {
    if (!(a.prime == b.prime)) throw DomainError("Klein extension over mixed primes");
    if (a.is_trivial() || b.is_trivial() || (a * b).is_trivial())
        throw DomainError("Klein extension needs independent non-squares");
}

std::vector<QuadExtension> KleinExtension::quadratic_subfields() const {
    return {QuadExtension(d1), QuadExtension(d2), QuadExtension(d3())};
}

std::vector<std::int64_t> prime_divisors(const Z& n) {
    if (n == 0) throw DomainError("prime_divisors of zero");
    Z m = abs(n);
    std::vector<std::int64_t> out;
    for (long d = 2; Z(d) * d <= m; ++d) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) {
            out.push_back(d);
            while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) m /= d;
        }
    }
    if (m > 1) out.push_back(m.get_si());
    return out;
}

ReciprocityVerdict reciprocity_check(const Q& a, const Q& b) {
    if (a == 0 || b == 0) throw DomainError("reciprocity_check: zero argument");
    Z all = Z(2) * a.get_num() * a.get_den() * b.get_num() * b.get_den();
    ReciprocityVerdict out;
    int product = 1;
    for (std::int64_t p : prime_divisors(all)) {
        int s = hilbert(a, b, Prime(p));
        out.symbols.push_back({std::to_string(p), s});
        product *= s;
    }
    int real = (a < 0 && b < 0) ? -1 : 1;
    out.symbols.push_back({"inf", real});
    product *= real;
    out.ok = product == 1;
    if (!out.ok) {
        // Name the first finite place where the closed formula disagrees with
        // the exhaustive oracle; fall back to the real place.
        out.offending = "inf";
        Z ai = a.get_num() * a.get_den(), bi = b.get_num() * b.get_den();
        if (abs(ai) < 100000 && abs(bi) < 100000) {
            for (const auto& ps : out.symbols) {
                if (ps.place == "inf") continue;
                try {
                    Prime p(std::stoll(ps.place));
                    if (hilbert_oracle(ai.get_si(), bi.get_si(), p) != ps.symbol) {
                        out.offending = ps.place;
                        break;
                    }
                } catch (const DomainError&) {
                }
            }
        }
    }
    return out;
}

}  // namespace galdist
