#ifndef GALDIST_RATIONAL_HPP
#define GALDIST_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace galdist {

using Z = mpz_class;
using Q = mpq_class;

// Raised when the mathematical preconditions of an operation are violated.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when textual or structured input cannot be parsed.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Q parse_rational(const std::string& text);
std::string to_string(const Q& q);

bool is_prime(std::int64_t n);

// Exponent of p in the nonzero integer n.
int valuation(const Z& n, std::int64_t p);
int valuation(const Q& q, std::int64_t p);

// Strip every factor p from n (n nonzero).
Z strip(const Z& n, std::int64_t p);

bool is_rational_square(const Q& q);

}  // namespace galdist

#endif
