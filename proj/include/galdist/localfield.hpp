#ifndef GALDIST_LOCALFIELD_HPP
#define GALDIST_LOCALFIELD_HPP

#include "galdist/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace galdist {

class Prime {
public:
    explicit Prime(std::int64_t p);
    std::int64_t value() const { return p_; }
    bool operator==(const Prime& o) const { return p_ == o.p_; }

private:
    std::int64_t p_;
};

// Smallest positive integer that is not a square modulo an odd prime.
std::int64_t smallest_nonresidue(const Prime& p);

// An element of Q_p^* / (Q_p^*)^2.  The unit label is 1 or the smallest
// non-residue for odd p, and one of 1, 3, 5, 7 for p = 2.
struct SquareClass {
    Prime prime;
    int val = 0;
    std::int64_t unit = 1;

    SquareClass(Prime p, int v, std::int64_t u);

    bool is_trivial() const { return val == 0 && unit == 1; }
    // The integer p^val * unit, which lies in this class.
    Z representative() const;
    SquareClass operator*(const SquareClass& o) const;
    bool operator==(const SquareClass& o) const;
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    bool operator<(const SquareClass& o) const;
};

SquareClass reduce(const Q& x, const Prime& p);
SquareClass trivial_class(const Prime& p);

// The 4 (odd p) or 8 (p = 2) square classes, in canonical order.
std::vector<SquareClass> all_classes(const Prime& p);

int hilbert(const SquareClass& a, const SquareClass& b);
int hilbert(const Q& a, const Q& b, const Prime& p);

// Decides solvability of z^2 = a x^2 + b y^2 by exhaustive search modulo
// p^m with m = 2 v_p(4ab) + 3.
int hilbert_oracle(std::int64_t a, std::int64_t b, const Prime& p);

struct QuadExtension {
    Prime base;
    SquareClass d;

    explicit QuadExtension(SquareClass d);
};

// Quadratic character of Q_p^* whose kernel is the norm group of E.
int eta(const QuadExtension& e, const SquareClass& a);
int eta(const QuadExtension& e, const Q& a);

struct KleinExtension {
    Prime base;
    SquareClass d1;
    SquareClass d2;

    KleinExtension(SquareClass d1, SquareClass d2);
    SquareClass d3() const { return d1 * d2; }
    std::vector<QuadExtension> quadratic_subfields() const;
};

struct PlaceSymbol {
    std::string place;  // decimal prime or "inf"
    int symbol = 1;
};

struct ReciprocityVerdict {
    bool ok = true;
    std::vector<PlaceSymbol> symbols;
    std::string offending;
};

ReciprocityVerdict reciprocity_check(const Q& a, const Q& b);

// Primes dividing the nonzero integer n, increasing.
std::vector<std::int64_t> prime_divisors(const Z& n);

}  // namespace galdist

#endif
